#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "classify.hpp"
#include "cocycle.hpp"
#include "quandle.hpp"

namespace dwlink {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

namespace detail {

template <class F>
CheckResult timed(const std::string& name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    std::ostringstream os;
    r.pass = body(os);
    r.detail = os.str();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::vector<std::size_t> decode_coloring(std::size_t code, std::size_t rank, int strands) {
    std::vector<std::size_t> out(strands);
    for (int s = strands; s-- > 0;) {
        out[s] = code % rank;
        code /= rank;
    }
    return out;
}

}  // namespace detail

/// Closed-form twist exponent of zeta_N: 1 on I, zeta_q^{c i} on A_{c,i}, zeta_{p^2}^{pks + k^2 u} on B_{k,s}.
inline int reference_twist(const AnyonLabel& l, int u, const GroupSpec& spec) {
    const int N = std::lcm(spec.q, spec.p * spec.p);
    switch (l.kind) {
        case AnyonKind::I: return 0;
        case AnyonKind::A: return (l.major * l.minor % spec.q) * (N / spec.q);
        case AnyonKind::B:
            return ((spec.p * l.major * l.minor + l.major * l.major * u) % (spec.p * spec.p)) * (N / (spec.p * spec.p));
    }
    return -1;
}

inline int reference_qdim(const AnyonLabel& l, const GroupSpec& spec) {
    switch (l.kind) {
        case AnyonKind::I: return l.major < spec.p ? 1 : spec.p;
        case AnyonKind::A: return spec.p;
        case AnyonKind::B: return spec.q;
    }
    return 0;
}

inline CheckResult check_cocycles(const MetacyclicGroup& G) {
    return detail::timed("cocycle", [&](std::ostream& os) {
        bool ok = true;
        for (int u = 0; u < G.p(); ++u) {
            bool v = verify_cocycle(G, u);
            os << "u=" << u << (v ? " ok" : " FAILED") << "; ";
            ok = ok && v;
        }
        return ok;
    });
}

inline CheckResult check_twists(const Engine& E) {
    return detail::timed("twists", [&](std::ostream& os) {
        int bad = 0;
        for (int u = 0; u < E.cocycle_count(); ++u) {
            const auto& cat = E.category(u);
            for (std::size_t a = 0; a < cat.rank(); ++a) {
                const auto& l = cat[a].label;
                if (cat.twist(a) != reference_twist(l, u, E.group().spec()) ||
                    cat.qdim(a) != reference_qdim(l, E.group().spec())) {
                    if (bad++ < 5) os << l.name() << "@u=" << u << " ";
                }
            }
        }
        os << bad << " mismatches";
        return bad == 0;
    });
}

/// Unit row, symmetry, unitarity, Verlinde integrality (already enforced by Engine), and the
/// partition of u values by shared modular data.
inline CheckResult check_modular(const Engine& E) {
    return detail::timed("modular", [&](std::ostream& os) {
        bool ok = true;
        std::int64_t dim_sq = 0;
        for (auto d : E.modular(0).qdim) dim_sq += static_cast<std::int64_t>(d) * d;
        for (int u = 0; u < E.cocycle_count(); ++u) {
            const auto& md = E.modular(u);
            const std::size_t r = md.rank;
            const int N = md.root_order;
            const auto& field = CyclotomicField::get(N);
            for (std::size_t a = 0; a < r; ++a) {
                if (!(md.S(0, a) == field.integer(md.qdim[a]))) ok = false;
                for (std::size_t b = 0; b < r; ++b)
                    if (!(md.S(a, b) == md.S(b, a))) ok = false;
            }
            std::vector<RootSum> conj(r * r);
            for (std::size_t k = 0; k < r * r; ++k) conj[k] = md.s_raw[k].conj();
            std::vector<std::int64_t> acc(N);
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b) {
                    std::fill(acc.begin(), acc.end(), 0);
                    for (std::size_t x = 0; x < r; ++x) md.S_raw(a, x).multiply_accumulate(conj[b * r + x], 1, acc);
                    if (!(field.from_dense(acc) == field.integer(a == b ? dim_sq : 0))) ok = false;
                }
            const auto& fr = E.fusion(u);
            for (std::size_t a = 0; a < r; ++a)
                if (fr(0, a, a) != 1) ok = false;
        }
        os << "pairs sharing modular data:";
        for (const auto& p : E.shared_pairs()) os << " (" << p.i << "," << p.j << ")";
        return ok;
    });
}

/// Braid relation on colorings; exhaustive when samples == 0.
inline CheckResult check_braid_relation(const Engine& E, int u, std::size_t samples, std::uint64_t seed = 1) {
    return detail::timed("braid-relation u=" + std::to_string(u), [&](std::ostream& os) {
        const auto& rep = E.representation(u);
        const std::size_t r = rep.category().rank();
        const BraidWord lhs{3, {{1, 1}, {2, 1}, {1, 1}}}, rhs{3, {{2, 1}, {1, 1}, {2, 1}}};
        std::mt19937_64 rng(seed);
        const std::size_t total = samples ? samples : r * r * r;
        std::size_t bad = 0;
        for (std::size_t n = 0; n < total; ++n) {
            auto c = detail::decode_coloring(samples ? rng() % (r * r * r) : n, r, 3);
            auto x = rep.apply(lhs, c), y = rep.apply(rhs, c);
            if (x.top_labels != y.top_labels || !(x.op == y.op)) ++bad;
        }
        os << total << " colorings, " << bad << " failures";
        return bad == 0;
    });
}

/// sigma sigma^-1 = id on all pairs, and rho(w1 w2) = rho(w2) after rho(w1) on all 3-strand colorings.
inline CheckResult check_braid_composition(const Engine& E, int u) {
    return detail::timed("braid-composition u=" + std::to_string(u), [&](std::ostream& os) {
        const auto& rep = E.representation(u);
        const std::size_t r = rep.category().rank();
        std::size_t bad = 0;
        for (std::size_t x = 0; x < r; ++x)
            for (std::size_t y = 0; y < r; ++y)
                for (int sign : {1, -1}) {
                    auto img = rep.apply(BraidWord{2, {{1, sign}, {1, -sign}}}, {x, y});
                    if (!(img.op == MonomialOperator::identity(img.op.dim(), img.op.order))) ++bad;
                }
        const BraidWord w1{3, {{1, 1}}}, w2{3, {{2, -1}}};
        const BraidWord w12 = w1.then(w2);
        for (std::size_t n = 0; n < r * r * r; ++n) {
            auto c = detail::decode_coloring(n, r, 3);
            auto a = rep.apply(w1, c);
            auto b = rep.apply(w2, a.top_labels);
            auto ab = rep.apply(w12, c);
            if (ab.top_labels != b.top_labels || !(ab.op == b.op.after(a.op))) ++bad;
        }
        os << bad << " failures";
        return bad == 0;
    });
}

/// All-B_{k,s} invariants against theta^writhe * C_{X_k}, with both coloring backends compared.
inline CheckResult check_oracle(const Engine& E, const std::vector<LinkRecord>& catalog,
                                const std::vector<std::vector<InvariantTensor>>& tensors) {
    return detail::timed("oracle", [&](std::ostream& os) {
        const auto& spec = E.group().spec();
        std::size_t checked = 0, bad = 0, disagree = 0;
        for (std::size_t n = 0; n < catalog.size(); ++n) {
            const auto& rec = catalog[n];
            for (int k = 1; k < spec.p; ++k) {
                if (!count_colorings(rec.word, make_quandle(spec, k)).agree()) ++disagree;
                for (int s = 0; s < spec.p; ++s)
                    for (int u = 0; u < E.cocycle_count(); ++u) {
                        auto idx = E.category(u).index_of(AnyonLabel{AnyonKind::B, k, s});
                        std::vector<std::size_t> lab(rec.components, idx);
                        ++checked;
                        if (!(tensors[n][u].at(lab) == quandle_b_value(spec, rec.word, k, s, u))) ++bad;
                    }
            }
        }
        os << checked << " values, " << bad << " mismatches, " << disagree << " backend disagreements";
        return bad == 0 && disagree == 0;
    });
}

/// Closure invariants unchanged under random conjugation of the braid word, on random labelings.
inline CheckResult check_markov_conjugation(const Engine& E, const std::vector<LinkRecord>& catalog, int u,
                                            std::size_t conjugates, std::uint64_t seed = 7) {
    return detail::timed("markov-conjugation u=" + std::to_string(u), [&](std::ostream& os) {
        const auto& rep = E.representation(u);
        const std::size_t r = rep.category().rank();
        std::mt19937_64 rng(seed);
        std::size_t bad = 0, checked = 0;
        for (const auto& rec : catalog) {
            for (std::size_t t = 0; t < conjugates; ++t) {
                BraidWord c{rec.strands, {}};
                const int len = 1 + static_cast<int>(rng() % 4);
                for (int k = 0; k < len; ++k)
                    c.letters.push_back({1 + static_cast<int>(rng() % (rec.strands - 1)), rng() % 2 ? 1 : -1});
                const BraidWord conj = c.then(rec.word).then(c.inverse());
                std::vector<std::size_t> assignment(rec.components);
                for (auto& a : assignment) a = rng() % r;
                // The conjugate permutes components; label by position through the conjugator.
                auto comps_w = components(rec.word);
                auto perm_c = strand_permutation(c);
                std::vector<std::size_t> bottom(rec.strands), bottom_conj(rec.strands);
                for (std::size_t k = 0; k < comps_w.size(); ++k)
                    for (int s : comps_w[k]) bottom[s] = assignment[k];
                for (int s = 0; s < rec.strands; ++s) bottom_conj[s] = bottom[perm_c[s]];
                ++checked;
                if (!(rep.closure_trace(rec.word, bottom).reduce() == rep.closure_trace(conj, bottom_conj).reduce()))
                    ++bad;
            }
        }
        os << checked << " conjugates, " << bad << " failures";
        return bad == 0;
    });
}

}  // namespace dwlink
