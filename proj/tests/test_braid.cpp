#include <gtest/gtest.h>

#include <random>

#include "dwlink/braid.hpp"

using namespace dwlink;

namespace {

struct Fixture {
    MetacyclicGroup G;
    std::vector<Category> cats;
    Fixture() {
        for (int u = 0; u < 5; ++u) cats.push_back(build_category(G, u));
    }
};

const Fixture& fx() {
    static Fixture f;
    return f;
}

std::size_t idx(const Category& c, const char* name) { return c.index_of(name); }

}  // namespace

TEST(Braid, ParseGittings) {
    auto w = parse_gittings("AAABaB", 3);
    std::vector<BraidLetter> want = {{1, -1}, {1, -1}, {1, -1}, {2, -1}, {1, 1}, {2, -1}};
    EXPECT_EQ(w.letters, want);
    EXPECT_EQ(parse_gittings("AbAb", 3).letters, (std::vector<BraidLetter>{{1, -1}, {2, 1}, {1, -1}, {2, 1}}));
    EXPECT_TRUE(parse_gittings("", 1).letters.empty());
    EXPECT_EQ(to_gittings(w), "AAABaB");
    EXPECT_THROW(parse_gittings("AxB", 3), std::invalid_argument);
    EXPECT_THROW(parse_gittings("AB", 2), std::invalid_argument);
}

TEST(Braid, WritheAndComponents) {
    EXPECT_EQ(writhe(parse_gittings("AbAb", 3)), 0);
    EXPECT_EQ(writhe(parse_gittings("AbAbAb", 3)), 0);
    EXPECT_EQ(writhe(parse_gittings("AAABaB", 3)), -4);
    EXPECT_EQ(components(parse_gittings("AbAb", 3)).size(), 1u);
    EXPECT_EQ(components(parse_gittings("AbAbAb", 3)).size(), 3u);
    auto c = components(parse_gittings("AABaB", 3));
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0].front(), 0);
}

TEST(Braid, UnknotAndHopfUnitStrand) {
    const auto& cat = fx().cats[1];
    BraidRepresentation rep(cat);
    const auto& F = CyclotomicField::get(275);
    EXPECT_EQ(rep.closure_invariant(BraidWord{1, {}}, {{idx(cat, "B_1_0")}}), F.integer(11));
    BraidWord hopf{2, {{1, 1}, {1, 1}}};
    for (std::size_t x = 0; x < cat.rank(); ++x)
        EXPECT_EQ(rep.closure_invariant(hopf, {{0, x}}), F.integer(cat.qdim(x)));
}

TEST(Braid, FigureEightValues) {
    const auto& F = CyclotomicField::get(275);
    auto fig8 = parse_gittings("AbAb", 3);
    for (const auto& cat : fx().cats) {
        BraidRepresentation rep(cat);
        for (int s = 0; s < 5; ++s)
            EXPECT_EQ(rep.closure_invariant(fig8, {{cat.index_of(AnyonLabel{AnyonKind::B, 1, s})}}), F.integer(11));
        EXPECT_EQ(rep.closure_invariant(fig8, {{idx(cat, "B_2_0")}}), F.integer(121));
    }
}

TEST(Braid, InversePairsExhaustive) {
    const auto& cat = fx().cats[1];
    BraidRepresentation rep(cat);
    for (std::size_t x = 0; x < cat.rank(); ++x)
        for (std::size_t y = 0; y < cat.rank(); ++y) {
            auto pos = rep.braiding(x, y, 1);
            auto neg = rep.braiding(y, x, -1);
            ASSERT_EQ(neg.after(pos), MonomialOperator::identity(pos.dim(), 275));
            ASSERT_EQ(pos.after(neg), MonomialOperator::identity(pos.dim(), 275));
        }
}

TEST(Braid, BraidRelationSampled) {
    const BraidWord l{3, {{1, 1}, {2, 1}, {1, 1}}}, r{3, {{2, 1}, {1, 1}, {2, 1}}};
    const BraidWord li{3, {{1, -1}, {2, -1}, {1, -1}}}, ri{3, {{2, -1}, {1, -1}, {2, -1}}};
    std::mt19937 rng(11);
    for (const auto& cat : fx().cats) {
        BraidRepresentation rep(cat);
        for (int t = 0; t < 300; ++t) {
            std::vector<std::size_t> c = {rng() % 49, rng() % 49, rng() % 49};
            auto a = rep.apply(l, c), b = rep.apply(r, c);
            ASSERT_EQ(a.top_labels, b.top_labels);
            ASSERT_EQ(a.op, b.op);
            ASSERT_EQ(rep.apply(li, c).op, rep.apply(ri, c).op);
        }
    }
}

TEST(Braid, HopfMatchesNaiveDoubleBraiding) {
    // Trace of c_{y,x} c_{x,y} written out with explicit operators.
    const auto& cat = fx().cats[3];
    BraidRepresentation rep(cat);
    for (std::size_t x : {idx(cat, "B_1_0"), idx(cat, "A_2_3"), idx(cat, "I_5")})
        for (std::size_t y : {idx(cat, "B_1_0"), idx(cat, "B_3_2"), idx(cat, "A_1_1")}) {
            auto sq = rep.braiding(y, x, 1).after(rep.braiding(x, y, 1));
            EXPECT_EQ(sq.trace().reduce(), rep.closure_invariant(BraidWord{2, {{1, 1}, {1, 1}}}, {{x, y}}));
        }
}

TEST(Braid, ClosureRequiresConstantLabels) {
    const auto& cat = fx().cats[1];
    BraidRepresentation rep(cat);
    EXPECT_THROW(rep.closure_trace(parse_gittings("AbAb", 3), {0, 1, 0}), std::invalid_argument);
    EXPECT_THROW(rep.closure_invariant(parse_gittings("AbAb", 3), {{0, 1}}), std::invalid_argument);
    EXPECT_THROW(invariant_tensor(rep, "x", BraidWord{4, {}}), std::invalid_argument);
}

TEST(Braid, TensorShapeAndUnitEntry) {
    const auto& cat = fx().cats[2];
    BraidRepresentation rep(cat);
    const auto& F = CyclotomicField::get(275);
    auto t = invariant_tensor(rep, "5^2_1", parse_gittings("AAbAb", 3), 2);
    EXPECT_EQ(t.order, 2);
    EXPECT_EQ(t.entries.size(), 49u * 49u);
    EXPECT_EQ(t.at({0, 0}), F.integer(1));
    EXPECT_EQ(t.labels_of(t.flat_index({3, 40})), (std::vector<std::size_t>{3, 40}));
}
