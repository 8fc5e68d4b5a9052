#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cocycle.hpp"
#include "group.hpp"
#include "monomial.hpp"

namespace dwlink {

enum class AnyonKind { I, A, B };

/// I_r: major = r. A_{c,i}: (c, i). B_{k,s}: (k, s).
struct AnyonLabel {
    AnyonKind kind = AnyonKind::I;
    int major = 0;
    int minor = 0;

    bool operator==(const AnyonLabel&) const = default;

    std::string name() const {
        switch (kind) {
            case AnyonKind::I: return "I_" + std::to_string(major);
            case AnyonKind::A: return "A_" + std::to_string(major) + "_" + std::to_string(minor);
            case AnyonKind::B: return "B_" + std::to_string(major) + "_" + std::to_string(minor);
        }
        return {};
    }

    /// Accepts "I_3", "A_1_7", "B_2_0".
    static AnyonLabel parse(std::string_view text) {
        auto fail = [&] { throw std::invalid_argument("malformed anyon label '" + std::string(text) + "'"); };
        if (text.size() < 3 || text[1] != '_') fail();
        AnyonLabel l;
        switch (text[0]) {
            case 'I': l.kind = AnyonKind::I; break;
            case 'A': l.kind = AnyonKind::A; break;
            case 'B': l.kind = AnyonKind::B; break;
            default: fail();
        }
        std::string_view rest = text.substr(2);
        auto read_int = [&](std::string_view s) {
            if (s.empty()) fail();
            int v = 0;
            for (char ch : s) {
                if (ch < '0' || ch > '9') fail();
                v = v * 10 + (ch - '0');
            }
            return v;
        };
        auto us = rest.find('_');
        if (l.kind == AnyonKind::I) {
            if (us != std::string_view::npos) fail();
            l.major = read_int(rest);
        } else {
            if (us == std::string_view::npos) fail();
            l.major = read_int(rest.substr(0, us));
            l.minor = read_int(rest.substr(us + 1));
        }
        return l;
    }
};

/// A simple object of Z(Vec_G^omega): a G-graded space V = sum_x V_x over a conjugacy class,
/// with a right projective action T_h : V_x -> V_{h^-1 x h}, T_l T_h = tau_x(h,l) T_{hl}.
/// Basis index = member_index * irrep_dim + irrep_index.
struct Anyon {
    AnyonLabel label;
    GroupElement representative;
    std::vector<GroupElement> members;  // members[0] == representative
    std::vector<GroupElement> coset;    // coset[m]^-1 * rep * coset[m] == members[m]
    int irrep_dim = 1;
    int qdim = 1;
    int twist = 0;                       // exponent of zeta_N
    std::vector<int> degree;             // basis index -> group element index
    std::vector<MonomialOperator> action;  // indexed by group element index
};

class Category {
public:
    const MetacyclicGroup& group() const { return *group_; }
    const ThreeCocycle& cocycle() const { return cocycle_; }
    int u() const { return cocycle_.u(); }
    /// Global root-of-unity order N = lcm(q, p^2).
    int root_order() const { return root_order_; }
    /// Multiplier taking cocycle exponents (mod p^2) to exponents of zeta_N.
    int cocycle_scale() const { return root_order_ / cocycle_.modulus(); }

    std::size_t rank() const { return anyons_.size(); }
    const std::vector<Anyon>& anyons() const { return anyons_; }
    const Anyon& operator[](std::size_t k) const { return anyons_[k]; }

    std::size_t index_of(const AnyonLabel& l) const {
        for (std::size_t k = 0; k < anyons_.size(); ++k)
            if (anyons_[k].label == l) return k;
        throw std::invalid_argument("no anyon labelled " + l.name());
    }
    std::size_t index_of(std::string_view name) const { return index_of(AnyonLabel::parse(name)); }

    int twist(std::size_t k) const { return anyons_[k].twist; }
    int qdim(std::size_t k) const { return anyons_[k].qdim; }

    /// T_g on the underlying space of the given anyon.
    const MonomialOperator& double_action(GroupElement g, std::size_t anyon) const {
        return anyons_[anyon].action[group_->index(g)];
    }

    /// Cocycle phase as zeta_N exponent.
    int omega(int x, int y, int z) const { return cocycle_(x, y, z) * cocycle_scale(); }

    friend Category build_category(const MetacyclicGroup& group, int u);

private:
    Category(const MetacyclicGroup& g, int u) : group_(&g), cocycle_(g, u) {
        root_order_ = std::lcm(g.q(), g.p() * g.p());
    }

    const MetacyclicGroup* group_;
    ThreeCocycle cocycle_;
    int root_order_ = 1;
    std::vector<Anyon> anyons_;
};

namespace detail {

/// Projective representation of the centralizer C(g) on the irrep space W, as right action.
using CentralizerAction = std::function<MonomialOperator(GroupElement)>;

inline Anyon induce_anyon(const Category& cat, AnyonLabel label, const ConjugacyClass& cls, int irrep_dim,
                          const CentralizerAction& w_action) {
    const auto& G = cat.group();
    const auto& w = cat.cocycle();
    const int N = cat.root_order();
    const int scale = cat.cocycle_scale();
    const GroupElement g = cls.representative;
    const int gi = G.index(g);

    Anyon an;
    an.label = label;
    an.representative = g;
    an.irrep_dim = irrep_dim;
    an.members.push_back(g);
    for (auto& x : cls.members)
        if (x != g) an.members.push_back(x);
    for (auto& x : an.members) {
        std::optional<GroupElement> rep;
        for (int h = 0; h < G.order() && !rep; ++h) {
            GroupElement he = G.element(h);
            if (G.multiply(G.multiply(G.inverse(he), g), he) == x) rep = he;
        }
        an.coset.push_back(*rep);
    }
    const int dim = static_cast<int>(an.members.size()) * irrep_dim;
    an.qdim = dim;
    an.degree.resize(dim);
    for (int m = 0; m < static_cast<int>(an.members.size()); ++m)
        for (int t = 0; t < irrep_dim; ++t) an.degree[m * irrep_dim + t] = G.index(an.members[m]);

    // Projectivity of the centralizer action on W.
    auto centralizer = G.centralizer(g);
    for (auto h : centralizer)
        for (auto l : centralizer) {
            MonomialOperator lhs = w_action(l).after(w_action(h));
            MonomialOperator rhs = w_action(G.multiply(h, l));
            int ph = w.transgression(gi, G.index(h), G.index(l)) * scale;
            for (auto& v : rhs.phase) v = (v + ph) % N;
            if (!(lhs == rhs))
                throw std::logic_error("centralizer action for " + label.name() + " is not beta-projective");
        }

    auto member_index = [&](GroupElement x) {
        auto it = std::find(an.members.begin(), an.members.end(), x);
        return static_cast<int>(it - an.members.begin());
    };

    an.action.resize(G.order());
    for (int hi = 0; hi < G.order(); ++hi) {
        GroupElement h = G.element(hi);
        MonomialOperator op;
        op.order = N;
        op.target.resize(dim);
        op.phase.resize(dim);
        for (int mx = 0; mx < static_cast<int>(an.members.size()); ++mx) {
            GroupElement x = an.members[mx];
            GroupElement y = G.multiply(G.multiply(G.inverse(h), x), h);
            int my = member_index(y);
            GroupElement rx = an.coset[mx], ry = an.coset[my];
            GroupElement c = G.multiply(G.multiply(rx, h), G.inverse(ry));
            int base = w.transgression(gi, G.index(rx), hi) - w.transgression(gi, G.index(c), G.index(ry));
            base = ((base * scale) % N + N) % N;
            MonomialOperator tc = w_action(c);
            for (int t = 0; t < irrep_dim; ++t) {
                op.target[mx * irrep_dim + t] = static_cast<std::uint32_t>(my * irrep_dim + tc.target[t]);
                op.phase[mx * irrep_dim + t] = (base + tc.phase[t]) % N;
            }
        }
        an.action[hi] = std::move(op);
    }

    // Twist: T_g acts on V_g as a scalar.
    const MonomialOperator& tg = an.action[gi];
    int tw = tg.phase[0];
    for (int t = 0; t < irrep_dim; ++t)
        if (tg.target[t] != static_cast<std::uint32_t>(t) || tg.phase[t] != tw)
            throw std::logic_error("T_g is not scalar on the representative line of " + label.name());
    an.twist = tw;
    return an;
}

inline MonomialOperator scalar_operator(int dim, int order, int phase) {
    MonomialOperator op = MonomialOperator::identity(dim, order);
    for (auto& v : op.phase) v = ((phase % order) + order) % order;
    return op;
}

}  // namespace detail

/// Builds the rank-|G|-dependent list of simple objects in the fixed basis order
/// I_0..I_{p-1}, induced I's, A_{c,i}, B_{k,s}.
inline Category build_category(const MetacyclicGroup& G, int u) {
    Category cat(G, u);
    const int q = G.q(), p = G.p(), N = cat.root_order();
    const int zq = N / q, zp = N / p, zp2 = N / (p * p);
    auto classes = G.conjugacy_classes();

    const ConjugacyClass* unit_class = nullptr;
    std::vector<const ConjugacyClass*> a_classes, b_classes;
    for (auto& c : classes) {
        if (c.representative == G.identity()) unit_class = &c;
        else if (c.representative.j == 0) a_classes.push_back(&c);
        else b_classes.push_back(&c);
    }
    if (static_cast<int>(b_classes.size()) != p - 1)
        throw std::logic_error("unexpected conjugacy class structure");

    // I-type: one-dimensional characters of G factoring through Z_p.
    for (int r = 0; r < p; ++r) {
        auto chi = [&, r](GroupElement h) { return detail::scalar_operator(1, N, r * h.j * zp); };
        cat.anyons_.push_back(detail::induce_anyon(cat, {AnyonKind::I, r, 0}, *unit_class, 1, chi));
    }
    // I-type: p-dimensional irreps induced from <a>-characters, one per b-orbit, acting by transpose.
    for (std::size_t t = 0; t < a_classes.size(); ++t) {
        const int m = a_classes[t]->representative.i;
        auto pi = [&, m](GroupElement h) {
            MonomialOperator op;
            op.order = N;
            op.target.resize(p);
            op.phase.resize(p);
            // pi(a^i b^j) e_s = pi(a)^i e_{s+j};  pi(a) e_s = zeta_q^{m n^{-s}} e_s
            for (int s = 0; s < p; ++s) {
                int dest = (s + h.j) % p;
                int ninv = detail::pow_mod(G.spec().n, (p - dest) % p, q);
                op.target[s] = static_cast<std::uint32_t>(dest);
                op.phase[s] = static_cast<std::int32_t>(detail::mod(static_cast<long long>(h.i) * m * ninv, q) * zq);
            }
            return op.transpose();
        };
        cat.anyons_.push_back(detail::induce_anyon(cat, {AnyonKind::I, p + static_cast<int>(t), 0}, *unit_class, p, pi));
    }
    // A-type: classes of a^m, centralizer <a>, characters a -> zeta_q^i.
    for (std::size_t c = 0; c < a_classes.size(); ++c)
        for (int i = 0; i < q; ++i) {
            auto chi = [&, i](GroupElement h) { return detail::scalar_operator(1, N, i * h.i * zq); };
            cat.anyons_.push_back(
                detail::induce_anyon(cat, {AnyonKind::A, static_cast<int>(c) + 1, i}, *a_classes[c], 1, chi));
        }
    // B-type: classes [b^k], centralizer <b>, projective characters b -> zeta_{p^2}^{uk + ps}.
    for (int k = 1; k < p; ++k) {
        const ConjugacyClass* cls = nullptr;
        for (auto* c : b_classes)
            if (c->representative == GroupElement{0, k}) cls = c;
        for (int s = 0; s < p; ++s) {
            int lambda = (u * k + p * s) % (p * p);
            auto chi = [&, lambda](GroupElement h) { return detail::scalar_operator(1, N, lambda * h.j * zp2); };
            cat.anyons_.push_back(detail::induce_anyon(cat, {AnyonKind::B, k, s}, *cls, 1, chi));
        }
    }
    return cat;
}

/// Largest violation count of T_l T_h = tau_x(h,l) T_{hl} over all h, l (0 means exact).
inline int action_defects(const Category& cat, std::size_t anyon) {
    const auto& G = cat.group();
    const auto& an = cat[anyon];
    const int N = cat.root_order();
    int defects = 0;
    for (int h = 0; h < G.order(); ++h)
        for (int l = 0; l < G.order(); ++l) {
            MonomialOperator lhs = an.action[l].after(an.action[h]);
            const MonomialOperator& hl = an.action[G.mul(h, l)];
            for (std::size_t s = 0; s < lhs.dim(); ++s) {
                int tau = cat.cocycle().transgression(an.degree[s], h, l) * cat.cocycle_scale();
                if (lhs.target[s] != hl.target[s] || lhs.phase[s] != (hl.phase[s] + tau) % N) ++defects;
            }
        }
    return defects;
}

}  // namespace dwlink
