#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "anyon.hpp"
#include "braid.hpp"
#include "cyclotomic.hpp"

namespace dwlink {

/// Unnormalized S (Hopf link traces, no 1/D) and twists of one category.
struct ModularData {
    int u = 0;
    std::size_t rank = 0;
    int root_order = 1;
    std::vector<RootSum> s_raw;
    std::vector<CyclotomicInteger> s;
    std::vector<int> t;
    std::vector<int> qdim;
    std::vector<AnyonLabel> labels;

    const CyclotomicInteger& S(std::size_t a, std::size_t b) const { return s[a * rank + b]; }
    const RootSum& S_raw(std::size_t a, std::size_t b) const { return s_raw[a * rank + b]; }
};

/// Two-strand braid sigma_1^2 ("aa"), whose closure is the Hopf link.
inline BraidWord hopf_braid() { return {2, {{1, 1}, {1, 1}}}; }

inline ModularData compute_modular_data(const BraidRepresentation& rep) {
    const auto& cat = rep.category();
    ModularData md;
    md.u = cat.u();
    md.rank = cat.rank();
    md.root_order = cat.root_order();
    md.s_raw.resize(md.rank * md.rank);
    md.s.resize(md.rank * md.rank);
    const BraidWord hopf = hopf_braid();
    for (std::size_t a = 0; a < md.rank; ++a)
        for (std::size_t b = 0; b < md.rank; ++b) {
            md.s_raw[a * md.rank + b] = rep.closure_trace(hopf, {a, b});
            md.s[a * md.rank + b] = md.s_raw[a * md.rank + b].reduce();
        }
    for (const auto& an : cat.anyons()) {
        md.t.push_back(an.twist);
        md.qdim.push_back(an.qdim);
        md.labels.push_back(an.label);
    }
    return md;
}

struct FusionRules {
    std::size_t rank = 0;
    std::vector<int> n;  // n[(a*rank + b)*rank + c]

    int operator()(std::size_t a, std::size_t b, std::size_t c) const { return n[(a * rank + b) * rank + c]; }
};

/// N_ab^c = (1/D^2) sum_x S_ax S_bx conj(S_cx) / d_x, evaluated in Z[zeta_N]. Throws if any
/// multiplicity is not a nonnegative integer.
inline FusionRules verlinde_fusion(const ModularData& md, unsigned jobs = 1) {
    const std::size_t r = md.rank;
    const int N = md.root_order;
    std::int64_t dim_sq = 0, dlcm = 1;
    for (int d : md.qdim) {
        dim_sq += static_cast<std::int64_t>(d) * d;
        dlcm = std::lcm(dlcm, static_cast<std::int64_t>(d));
    }
    std::vector<RootSum> conj_s(r * r);
    for (std::size_t k = 0; k < r * r; ++k) conj_s[k] = md.s_raw[k].conj();

    FusionRules fr;
    fr.rank = r;
    fr.n.assign(r * r * r, 0);
    const auto& field = CyclotomicField::get(N);

    auto row = [&](std::size_t a) {
        std::vector<std::int64_t> hist(N), acc(N);
        std::vector<RootSum> q(r);
        for (std::size_t b = a; b < r; ++b) {
            for (std::size_t x = 0; x < r; ++x) {
                std::fill(hist.begin(), hist.end(), 0);
                md.S_raw(a, x).multiply_accumulate(md.S_raw(b, x), dlcm / md.qdim[x], hist);
                q[x] = RootSum::from_histogram(N, hist);
            }
            for (std::size_t c = 0; c < r; ++c) {
                std::fill(acc.begin(), acc.end(), 0);
                for (std::size_t x = 0; x < r; ++x) q[x].multiply_accumulate(conj_s[c * r + x], 1, acc);
                auto v = field.from_dense(acc);
                const std::int64_t denom = dim_sq * dlcm;
                if (!v.is_integer() || v.constant_term() % denom != 0 || v.constant_term() < 0)
                    throw std::runtime_error("non-integral fusion multiplicity for (" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) + ")");
                int val = static_cast<int>(v.constant_term() / denom);
                fr.n[(a * r + b) * r + c] = val;
                fr.n[(b * r + a) * r + c] = val;
            }
        }
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        for (std::size_t a = 0; a < r; ++a) row(a);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back([&, j] {
                for (std::size_t a = j; a < r; a += jobs) row(a);
            });
        for (auto& th : pool) th.join();
    }
    return fr;
}

/// Orbits of labels under fusion with invertible (dimension-1) objects, each sorted; ordered by
/// least member.
inline std::vector<std::vector<std::size_t>> fusion_orbits(const FusionRules& fr, const std::vector<int>& qdim) {
    const std::size_t r = fr.rank;
    std::vector<int> orbit_of(r, -1);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t a = 0; a < r; ++a) {
        if (orbit_of[a] >= 0) continue;
        std::vector<std::size_t> orb{a};
        orbit_of[a] = static_cast<int>(orbits.size());
        for (std::size_t k = 0; k < orb.size(); ++k)
            for (std::size_t g = 0; g < r; ++g) {
                if (qdim[g] != 1) continue;
                for (std::size_t c = 0; c < r; ++c)
                    if (fr(orb[k], g, c) > 0 && orbit_of[c] < 0) {
                        orbit_of[c] = orbit_of[a];
                        orb.push_back(c);
                    }
            }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

/// rho(a) for each source label a; maps category source_u to target_u with
/// S^(target)_{rho(a) rho(b)} == S^(source)_{ab} and T^(target)_{rho(a)} == T^(source)_a.
struct ModularPermutation {
    int source_u = 0;
    int target_u = 0;
    std::vector<std::size_t> image;

    bool operator==(const ModularPermutation&) const = default;
    bool operator<(const ModularPermutation& o) const { return image < o.image; }
};

inline bool is_modular_permutation(const ModularData& src, const ModularData& tgt, const std::vector<std::size_t>& rho) {
    const std::size_t r = src.rank;
    if (rho.size() != r || tgt.rank != r) return false;
    std::vector<bool> hit(r, false);
    for (auto v : rho) {
        if (v >= r || hit[v]) return false;
        hit[v] = true;
    }
    for (std::size_t a = 0; a < r; ++a)
        if (src.t[a] != tgt.t[rho[a]] || src.qdim[a] != tgt.qdim[rho[a]]) return false;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            if (!(tgt.S(rho[a], rho[b]) == src.S(a, b))) return false;
    return true;
}

/// Structure shared by the block-respecting enumeration.
struct PermutationBlocks {
    std::vector<std::vector<std::size_t>> free_groups_src;  // same (d, theta), moved freely
    std::vector<std::vector<std::size_t>> free_groups_tgt;
    std::vector<std::vector<std::size_t>> blocks_src;       // fusion blocks, moved as wholes
    std::vector<std::vector<std::size_t>> blocks_tgt;
    std::vector<std::vector<std::size_t>> block_maps;       // admissible src block -> tgt block assignments
};

namespace detail {

inline std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

inline std::vector<int> sorted_twists(const ModularData& md, const std::vector<std::size_t>& labels) {
    std::vector<int> tw;
    for (auto l : labels) tw.push_back(md.t[l]);
    std::sort(tw.begin(), tw.end());
    return tw;
}

}  // namespace detail

inline PermutationBlocks permutation_blocks(const ModularData& src, const FusionRules& fsrc, const ModularData& tgt,
                                            const FusionRules& ftgt) {
    PermutationBlocks pb;
    auto split = [](const ModularData& md, const FusionRules& fr, std::vector<std::vector<std::size_t>>& groups,
                    std::vector<std::vector<std::size_t>>& blocks) {
        std::map<std::pair<int, int>, std::vector<std::size_t>> by_fp;
        for (auto& orb : fusion_orbits(fr, md.qdim)) {
            if (orb.size() > 1 && orb[0] != 0) {
                blocks.push_back(orb);
                continue;
            }
            for (auto a : orb)
                if (a != 0) by_fp[{md.qdim[a], md.t[a]}].push_back(a);
        }
        for (auto& [fp, g] : by_fp) groups.push_back(g);
    };
    split(src, fsrc, pb.free_groups_src, pb.blocks_src);
    split(tgt, ftgt, pb.free_groups_tgt, pb.blocks_tgt);

    if (pb.free_groups_src.size() != pb.free_groups_tgt.size() || pb.blocks_src.size() != pb.blocks_tgt.size())
        return pb;
    for (std::size_t g = 0; g < pb.free_groups_src.size(); ++g) {
        auto& a = pb.free_groups_src[g];
        auto& b = pb.free_groups_tgt[g];
        if (a.size() != b.size() || src.qdim[a[0]] != tgt.qdim[b[0]] || src.t[a[0]] != tgt.t[b[0]]) {
            pb.free_groups_src.clear();
            pb.free_groups_tgt.clear();
            return pb;
        }
    }
    for (auto& blk : pb.blocks_src) {
        auto tw = detail::sorted_twists(src, blk);
        if (std::adjacent_find(tw.begin(), tw.end()) != tw.end())
            throw std::runtime_error("fusion block with repeated twists: block map is not determined by twists");
    }
    std::vector<std::size_t> order(pb.blocks_src.size());
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        for (std::size_t b = 0; b < order.size() && ok; ++b)
            ok = pb.blocks_src[b].size() == pb.blocks_tgt[order[b]].size() &&
                 detail::sorted_twists(src, pb.blocks_src[b]) == detail::sorted_twists(tgt, pb.blocks_tgt[order[b]]);
        if (ok) pb.block_maps.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return pb;
}

/// Enumerates every T-respecting bijection that fixes the unit, permutes labels freely within
/// (d, theta) groups outside fusion blocks, and carries fusion blocks onto twist-matched blocks
/// as wholes. Returns the number emitted.
inline std::uint64_t enumerate_T_respecting(const ModularData& src, const FusionRules& fsrc, const ModularData& tgt,
                                            const FusionRules& ftgt,
                                            const std::function<void(const std::vector<std::size_t>&)>& emit) {
    auto pb = permutation_blocks(src, fsrc, tgt, ftgt);
    if (pb.block_maps.empty() || pb.free_groups_src.size() != pb.free_groups_tgt.size()) return 0;

    // All bijections of each free group.
    std::vector<std::vector<std::vector<std::size_t>>> choices;
    for (std::size_t g = 0; g < pb.free_groups_src.size(); ++g) {
        std::vector<std::vector<std::size_t>> perms;
        auto tg = pb.free_groups_tgt[g];
        std::sort(tg.begin(), tg.end());
        do perms.push_back(tg);
        while (std::next_permutation(tg.begin(), tg.end()));
        choices.push_back(std::move(perms));
    }

    std::vector<std::size_t> image(src.rank, 0);
    std::vector<std::size_t> digit(choices.size(), 0);
    std::uint64_t count = 0;
    for (const auto& bm : pb.block_maps) {
        for (std::size_t b = 0; b < bm.size(); ++b) {
            const auto& sb = pb.blocks_src[b];
            const auto& tb = pb.blocks_tgt[bm[b]];
            for (auto s : sb)
                for (auto t : tb)
                    if (tgt.t[t] == src.t[s]) image[s] = t;
        }
        std::fill(digit.begin(), digit.end(), 0);
        while (true) {
            for (std::size_t g = 0; g < choices.size(); ++g) {
                const auto& sg = pb.free_groups_src[g];
                const auto& tg = choices[g][digit[g]];
                for (std::size_t k = 0; k < sg.size(); ++k) image[sg[k]] = tg[k];
            }
            emit(image);
            ++count;
            std::size_t g = 0;
            for (; g < choices.size(); ++g) {
                if (++digit[g] < choices[g].size()) break;
                digit[g] = 0;
            }
            if (g == choices.size()) break;
        }
    }
    return count;
}

/// Closed-form size of the enumeration above.
inline std::uint64_t count_T_respecting(const ModularData& src, const FusionRules& fsrc, const ModularData& tgt,
                                        const FusionRules& ftgt) {
    auto pb = permutation_blocks(src, fsrc, tgt, ftgt);
    if (pb.free_groups_src.size() != pb.free_groups_tgt.size()) return 0;
    std::uint64_t c = pb.block_maps.size();
    for (auto& g : pb.free_groups_src) c *= detail::factorial(g.size());
    return c;
}

/// Block-structured enumeration filtered by exact S-compatibility; sorted by image.
inline std::vector<ModularPermutation> modular_permutations(const ModularData& src, const FusionRules& fsrc,
                                                            const ModularData& tgt, const FusionRules& ftgt) {
    ValueInterner pool;
    auto s_ids = pool.ids(src.s);
    auto t_ids = pool.ids(tgt.s);
    const std::size_t r = src.rank;
    std::vector<ModularPermutation> out;
    enumerate_T_respecting(src, fsrc, tgt, ftgt, [&](const std::vector<std::size_t>& rho) {
        for (std::size_t a = 0; a < r; ++a) {
            const std::size_t ra = rho[a] * r;
            for (std::size_t b = 0; b < r; ++b)
                if (t_ids[ra + rho[b]] != s_ids[a * r + b]) return;
        }
        out.push_back({src.u, tgt.u, rho});
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Independent search over all (d, theta)-preserving bijections, no block structure assumed.
/// Labels are assigned most-constrained first; partial maps are pruned by S on assigned pairs.
inline std::vector<ModularPermutation> backtracking_modular_permutations(const ModularData& src,
                                                                         const ModularData& tgt,
                                                                         std::size_t limit = 0) {
    const std::size_t r = src.rank;
    ValueInterner pool;
    auto s_ids = pool.ids(src.s);
    auto t_ids = pool.ids(tgt.s);
    auto row_print = [&](const std::vector<std::uint32_t>& ids, std::size_t a) {
        std::vector<std::uint32_t> row(ids.begin() + a * r, ids.begin() + (a + 1) * r);
        std::sort(row.begin(), row.end());
        return row;
    };
    std::vector<std::vector<std::size_t>> cand(r);
    for (std::size_t a = 0; a < r; ++a) {
        auto fa = row_print(s_ids, a);
        for (std::size_t b = 0; b < r; ++b)
            if (src.qdim[a] == tgt.qdim[b] && src.t[a] == tgt.t[b] && s_ids[a * r + a] == t_ids[b * r + b] &&
                row_print(t_ids, b) == fa)
                cand[a].push_back(b);
    }
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return cand[x].size() < cand[y].size(); });

    std::vector<ModularPermutation> out;
    std::vector<std::size_t> rho(r, r);
    std::vector<bool> used(r, false);
    std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
        if (depth == r) {
            out.push_back({src.u, tgt.u, rho});
            return limit != 0 && out.size() >= limit;
        }
        const std::size_t a = order[depth];
        for (auto b : cand[a]) {
            if (used[b]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                std::size_t c = order[k];
                ok = t_ids[b * r + rho[c]] == s_ids[a * r + c] && t_ids[rho[c] * r + b] == s_ids[c * r + a];
            }
            if (!ok) continue;
            rho[a] = b;
            used[b] = true;
            if (search(depth + 1)) return true;
            used[b] = false;
            rho[a] = r;
        }
        return false;
    };
    search(0);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool modular_data_equal_as_sets(const ModularData& a, const ModularData& b) {
    return !backtracking_modular_permutations(a, b, 1).empty();
}

/// W_ab = (theta_a / theta_b) * Wtilde_ab for a two-component invariant matrix.
inline std::vector<CyclotomicInteger> w_matrix(const Category& cat, const InvariantTensor& whitehead) {
    if (whitehead.order != 2) throw std::invalid_argument("W-matrix needs a two-component link");
    const std::size_t r = whitehead.rank;
    const auto& field = CyclotomicField::get(cat.root_order());
    std::vector<CyclotomicInteger> w(r * r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            w[a * r + b] = field.root(cat.twist(a) - cat.twist(b)) * whitehead.entries[a * r + b];
    return w;
}

/// One row per source label, one column per permutation.
inline std::string format_permutation_table(const ModularData& src, const ModularData& tgt,
                                            const std::vector<ModularPermutation>& perms) {
    std::ostringstream os;
    os << "# u=" << src.u << " -> u=" << tgt.u << ", " << perms.size() << " permutations\n";
    for (std::size_t a = 0; a < src.rank; ++a) {
        os << src.labels[a].name();
        for (const auto& p : perms) os << '\t' << tgt.labels[p.image[a]].name();
        os << '\n';
    }
    return os.str();
}

}  // namespace dwlink
