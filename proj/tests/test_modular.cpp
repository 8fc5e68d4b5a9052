#include <gtest/gtest.h>

#include <complex>

#include "dwlink/modular.hpp"
#include "fixtures.hpp"

using namespace dwlink;

namespace {

struct Data {
    MetacyclicGroup G;
    std::vector<std::unique_ptr<Category>> cats;
    std::vector<ModularData> md;
    std::vector<FusionRules> fr;
    Data() {
        for (int u = 0; u < 5; ++u) {
            cats.push_back(std::make_unique<Category>(build_category(G, u)));
            BraidRepresentation rep(*cats.back());
            md.push_back(compute_modular_data(rep));
            fr.push_back(verlinde_fusion(md.back()));
        }
    }
};

const Data& data() {
    static Data d;
    return d;
}

std::vector<std::vector<std::string>> columns_of(const ModularData& src, const ModularData& tgt,
                                                 const std::vector<ModularPermutation>& perms) {
    std::vector<std::vector<std::string>> cols;
    for (const auto& p : perms) {
        std::vector<std::string> c;
        for (std::size_t a = 0; a < src.rank; ++a) c.push_back(tgt.labels[p.image[a]].name());
        cols.push_back(c);
    }
    return cols;
}

}  // namespace

TEST(Modular, SMatrixStructure) {
    const auto& F = CyclotomicField::get(275);
    for (const auto& md : data().md) {
        for (std::size_t a = 0; a < 49; ++a) {
            EXPECT_EQ(md.S(0, a), F.integer(md.qdim[a]));
            for (std::size_t b = 0; b < 49; ++b) ASSERT_EQ(md.S(a, b), md.S(b, a));
        }
        EXPECT_EQ(md.S(0, 29), F.integer(11));
    }
}

TEST(Modular, UnitarityFloatingCrossCheck) {
    const auto& md = data().md[1];
    for (std::size_t a = 0; a < 49; a += 6)
        for (std::size_t b = 0; b < 49; b += 5) {
            std::complex<double> acc = 0;
            for (std::size_t x = 0; x < 49; ++x) {
                auto [r1, i1] = md.S(a, x).approx();
                auto [r2, i2] = md.S(b, x).approx();
                acc += std::complex<double>(r1, i1) * std::conj(std::complex<double>(r2, i2));
            }
            EXPECT_NEAR(acc.real(), a == b ? 3025.0 : 0.0, 1e-6);
            EXPECT_NEAR(acc.imag(), 0.0, 1e-6);
        }
}

TEST(Modular, FusionRules) {
    for (const auto& fr : data().fr) {
        for (std::size_t a = 0; a < 49; ++a) {
            EXPECT_EQ(fr(0, a, a), 1);
            for (std::size_t b = 0; b < 49; ++b)
                for (std::size_t c = 0; c < 49; ++c) ASSERT_GE(fr(a, b, c), 0);
        }
        // I_r x I_s = I_{r+s}
        for (int r = 0; r < 5; ++r)
            for (int s = 0; s < 5; ++s) EXPECT_EQ(fr(r, s, (r + s) % 5), 1);
    }
}

TEST(Modular, BBlocksFromFusion) {
    const auto& d = data();
    auto orbits = fusion_orbits(d.fr[1], d.md[1].qdim);
    std::vector<std::vector<std::string>> blocks;
    for (auto& o : orbits)
        if (o.size() == 5 && d.md[1].labels[o[0]].kind == AnyonKind::B) {
            std::vector<std::string> names;
            for (auto a : o) names.push_back(d.md[1].labels[a].name());
            blocks.push_back(names);
        }
    ASSERT_EQ(blocks.size(), 4u);
    for (int k = 0; k < 4; ++k)
        for (int s = 0; s < 5; ++s) EXPECT_EQ(blocks[k][s], "B_" + std::to_string(k + 1) + "_" + std::to_string(s));
}

TEST(Modular, SetEqualityPattern) {
    const auto& md = data().md;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            bool want = i == j || (i + j == 5 && i != 0);
            EXPECT_EQ(modular_data_equal_as_sets(md[i], md[j]), want) << i << "," << j;
        }
}

TEST(Modular, CandidateCount) {
    const auto& d = data();
    EXPECT_EQ(count_T_respecting(d.md[1], d.fr[1], d.md[4], d.fr[4]), 2359296u);
    EXPECT_EQ(count_T_respecting(d.md[2], d.fr[2], d.md[3], d.fr[3]), 2359296u);
    std::uint64_t n = 0;
    bool all_t = true;
    auto emitted = enumerate_T_respecting(d.md[1], d.fr[1], d.md[4], d.fr[4], [&](const std::vector<std::size_t>& rho) {
        ++n;
        if (n % 9973 == 0)
            for (std::size_t a = 0; a < 49; ++a)
                all_t = all_t && d.md[1].t[a] == d.md[4].t[rho[a]] && d.md[1].qdim[a] == d.md[4].qdim[rho[a]];
    });
    EXPECT_EQ(emitted, 2359296u);
    EXPECT_EQ(n, 2359296u);
    EXPECT_TRUE(all_t);
}

TEST(Modular, PermutationsMatchTable) {
    const auto& d = data();
    for (auto [i, j, file] : {std::tuple{1, 4, "modperms_u1_u4.tsv"}, std::tuple{2, 3, "modperms_u2_u3.tsv"}}) {
        auto perms = modular_permutations(d.md[i], d.fr[i], d.md[j], d.fr[j]);
        ASSERT_EQ(perms.size(), 8u);
        for (const auto& p : perms) EXPECT_TRUE(is_modular_permutation(d.md[i], d.md[j], p.image));
        auto rows = read_tsv(file);
        ASSERT_EQ(rows.size(), 49u);
        auto cols = columns_of(d.md[i], d.md[j], perms);
        for (std::size_t a = 0; a < 49; ++a) {
            EXPECT_EQ(rows[a][0], d.md[i].labels[a].name());
            for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(cols[c][a], rows[a][c + 1]) << "row " << a << " col " << c;
        }
        EXPECT_EQ(backtracking_modular_permutations(d.md[i], d.md[j]), perms);
    }
}

TEST(Modular, IdentityIsSelfPermutation) {
    const auto& d = data();
    auto perms = backtracking_modular_permutations(d.md[0], d.md[0]);
    std::vector<std::size_t> id(49);
    std::iota(id.begin(), id.end(), 0);
    EXPECT_TRUE(std::any_of(perms.begin(), perms.end(), [&](auto& p) { return p.image == id; }));
    auto self = modular_permutations(d.md[2], d.fr[2], d.md[2], d.fr[2]);
    EXPECT_TRUE(std::any_of(self.begin(), self.end(), [&](auto& p) { return p.image == id; }));
    EXPECT_TRUE(modular_permutations(d.md[0], d.fr[0], d.md[1], d.fr[1]).empty());
}

TEST(Modular, UnitHasUniqueSRow) {
    const auto& md = data().md[1];
    for (std::size_t a = 1; a < 49; ++a) {
        bool same = true;
        for (std::size_t b = 0; b < 49 && same; ++b) same = md.S(a, b) == md.S(0, b);
        EXPECT_FALSE(same);
    }
}

TEST(Modular, TableFormat) {
    const auto& d = data();
    auto perms = modular_permutations(d.md[1], d.fr[1], d.md[4], d.fr[4]);
    auto text = format_permutation_table(d.md[1], d.md[4], perms);
    EXPECT_NE(text.find("B_1_0\tB_3_1\tB_3_1\tB_3_1\tB_3_1\tB_2_1"), std::string::npos);
}
