#include <gtest/gtest.h>

#include "dwlink/catalog.hpp"
#include "dwlink/quandle.hpp"

using namespace dwlink;

namespace {

// Pairs (x, y) in [b^k] with x = (y*x) *bar (x*y) and y = (x*y) *bar (y*x), where
// x*y = y x y^-1 and x *bar y = y^-1 x y, solved in the group itself.
int figure_eight_pairs(const MetacyclicGroup& G, int k) {
    auto star = [&](GroupElement x, GroupElement y) { return G.multiply(G.multiply(y, x), G.inverse(y)); };
    auto bar = [&](GroupElement x, GroupElement y) { return G.multiply(G.multiply(G.inverse(y), x), y); };
    auto cls = G.class_of({0, k}).members;
    int n = 0;
    for (auto x : cls)
        for (auto y : cls)
            if (bar(star(y, x), star(x, y)) == x && bar(star(x, y), star(y, x)) == y) ++n;
    return n;
}

}  // namespace

TEST(Quandle, Axioms) {
    GroupSpec spec;
    for (int k = 1; k < 5; ++k) {
        auto X = make_quandle(spec, k);
        for (int x = 0; x < 11; ++x) {
            EXPECT_EQ(X.op(x, x), x);
            for (int y = 0; y < 11; ++y) {
                EXPECT_EQ(X.op(x, X.inverse_op(x, y)), y);
                for (int z = 0; z < 11; ++z) EXPECT_EQ(X.op(x, X.op(y, z)), X.op(X.op(x, y), X.op(x, z)));
            }
        }
    }
    EXPECT_EQ(make_quandle(spec, 1).op(0, 1), 3);
    EXPECT_THROW(make_quandle(spec, 0), std::invalid_argument);
}

TEST(Quandle, MatchesGroupConjugation) {
    MetacyclicGroup G;
    for (int k = 1; k < 5; ++k) {
        auto X = make_quandle(G.spec(), k);
        for (int x = 0; x < 11; ++x)
            for (int y = 0; y < 11; ++y) {
                GroupElement gx{x, k}, gy{y, k};
                auto c = G.conjugate(gx, gy);  // gx gy gx^-1
                EXPECT_EQ(c.j, k);
                EXPECT_EQ(c.i, X.op(x, y));
            }
    }
}

TEST(Quandle, FigureEightAndBorromean) {
    MetacyclicGroup G;
    auto fig8 = parse_gittings("AbAb", 3);
    auto borr = parse_gittings("AbAbAb", 3);
    const int want[] = {0, 11, 121, 121, 11};
    for (int k = 1; k < 5; ++k) {
        auto X = make_quandle(G.spec(), k);
        EXPECT_EQ(figure_eight_pairs(G, k), want[k]);
        auto c = count_colorings(fig8, X);
        EXPECT_EQ(c.brute, want[k]);
        EXPECT_EQ(c.linear, want[k]);
        EXPECT_EQ(count_colorings(borr, X).brute, 11);
        EXPECT_EQ(count_colorings(borr, X).linear, 11);
        EXPECT_EQ(count_colorings(BraidWord{1, {}}, X).linear, 11);
    }
}

TEST(Quandle, BackendsAgreeOnCatalog) {
    auto catalog = load_catalog(DWLINK_CATALOG);
    GroupSpec spec;
    for (const auto& rec : catalog)
        for (int k = 1; k < 5; ++k) EXPECT_TRUE(count_colorings(rec.word, make_quandle(spec, k)).agree()) << rec.id;
}

TEST(Quandle, BValueClosedForm) {
    GroupSpec spec;
    const auto& F = CyclotomicField::get(275);
    auto fig8 = parse_gittings("AbAb", 3);
    EXPECT_EQ(quandle_b_value(spec, fig8, 2, 3, 1), F.integer(121));
    auto k52 = parse_gittings("AAABaB", 3);
    auto c = count_colorings_brute(k52, make_quandle(spec, 1));
    // theta(B_1_0, u=1) = zeta_25, raised to the writhe -4.
    EXPECT_EQ(quandle_b_value(spec, k52, 1, 0, 1), c * F.root(-4 * 11));
}
