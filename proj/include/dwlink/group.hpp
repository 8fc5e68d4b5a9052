#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwlink {

namespace detail {

inline bool is_prime(int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline int mod(long long v, int m) {
    long long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

inline int pow_mod(long long base, long long e, int m) {
    long long r = 1 % m;
    base = mod(base, m);
    while (e > 0) {
        if (e & 1) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<int>(r);
}

}  // namespace detail

/// Parameters of the metacyclic group Z_q x|_n Z_p, with b a b^-1 = a^n.
struct GroupSpec {
    int q = 11;
    int p = 5;
    int n = 3;

    void validate() const {
        if (!detail::is_prime(q) || q % 2 == 0)
            throw std::invalid_argument("q must be an odd prime, got " + std::to_string(q));
        if (!detail::is_prime(p))
            throw std::invalid_argument("p must be prime, got " + std::to_string(p));
        if ((q - 1) % p != 0)
            throw std::invalid_argument("p must divide q-1");
        int nn = detail::mod(n, q);
        if (nn == 1 || nn == 0)
            throw std::invalid_argument("n must be a nontrivial unit mod q");
        if (detail::pow_mod(nn, p, q) != 1)
            throw std::invalid_argument("n must have multiplicative order p mod q");
    }

    int order() const { return q * p; }

    bool operator==(const GroupSpec&) const = default;
};

/// a^i b^j as a residue pair. Ordered by (j, i).
struct GroupElement {
    int i = 0;
    int j = 0;

    bool operator==(const GroupElement&) const = default;
    std::strong_ordering operator<=>(const GroupElement& o) const {
        if (auto c = j <=> o.j; c != 0) return c;
        return i <=> o.i;
    }
};

struct ConjugacyClass {
    GroupElement representative;
    std::vector<GroupElement> members;  // sorted, representative first
};

class MetacyclicGroup {
public:
    explicit MetacyclicGroup(GroupSpec spec = {}) : spec_(spec) {
        spec_.validate();
        spec_.n = detail::mod(spec_.n, spec_.q);
        npow_.resize(spec_.p);
        for (int j = 0; j < spec_.p; ++j) npow_[j] = detail::pow_mod(spec_.n, j, spec_.q);
        build_tables();
    }

    const GroupSpec& spec() const { return spec_; }
    int order() const { return spec_.order(); }
    int q() const { return spec_.q; }
    int p() const { return spec_.p; }

    /// Index in [0, |G|), consistent with the (j, i) ordering.
    int index(GroupElement x) const { return x.j * spec_.q + x.i; }
    GroupElement element(int idx) const { return {idx % spec_.q, idx / spec_.q}; }

    GroupElement identity() const { return {0, 0}; }
    GroupElement a() const { return {1, 0}; }
    GroupElement b() const { return {0, 1}; }

    bool valid(GroupElement x) const { return x.i >= 0 && x.i < spec_.q && x.j >= 0 && x.j < spec_.p; }

    GroupElement multiply(GroupElement x, GroupElement y) const {
        return {detail::mod(x.i + static_cast<long long>(npow_[x.j]) * y.i, spec_.q), (x.j + y.j) % spec_.p};
    }

    GroupElement inverse(GroupElement x) const {
        int j = (spec_.p - x.j) % spec_.p;
        // (a^i b^j)^-1 = b^-j a^-i = a^{-n^{-j} i} b^{-j}
        return {detail::mod(-static_cast<long long>(npow_[j]) * x.i, spec_.q), j};
    }

    GroupElement power(GroupElement x, int e) const {
        GroupElement r = identity();
        for (int k = detail::mod(e, order()); k > 0; --k) r = multiply(r, x);
        return r;
    }

    /// h x h^-1
    GroupElement conjugate(GroupElement h, GroupElement x) const { return multiply(multiply(h, x), inverse(h)); }

    // Table lookups by index; used by inner loops.
    int mul(int x, int y) const { return mul_[static_cast<std::size_t>(x) * order() + y]; }
    int inv(int x) const { return inv_[x]; }
    int b_exponent(int x) const { return x / spec_.q; }

    std::vector<GroupElement> elements() const {
        std::vector<GroupElement> out;
        out.reserve(order());
        for (int k = 0; k < order(); ++k) out.push_back(element(k));
        return out;
    }

    /// Classes ordered by representative: identity, powers of a, then b^k.
    std::vector<ConjugacyClass> conjugacy_classes() const {
        std::vector<bool> seen(order(), false);
        std::vector<ConjugacyClass> classes;
        for (int k = 0; k < order(); ++k) {
            if (seen[k]) continue;
            ConjugacyClass c;
            c.representative = element(k);
            for (int h = 0; h < order(); ++h) {
                int y = index(conjugate(element(h), element(k)));
                if (!seen[y]) {
                    seen[y] = true;
                    c.members.push_back(element(y));
                }
            }
            std::sort(c.members.begin(), c.members.end());
            classes.push_back(std::move(c));
        }
        std::sort(classes.begin(), classes.end(),
                  [](const ConjugacyClass& l, const ConjugacyClass& r) { return l.representative < r.representative; });
        return classes;
    }

    ConjugacyClass class_of(GroupElement x) const {
        for (auto& c : conjugacy_classes())
            if (std::find(c.members.begin(), c.members.end(), x) != c.members.end()) return c;
        throw std::logic_error("element not covered by class partition");
    }

    std::vector<GroupElement> centralizer(GroupElement x) const {
        std::vector<GroupElement> out;
        for (int h = 0; h < order(); ++h) {
            GroupElement g = element(h);
            if (multiply(g, x) == multiply(x, g)) out.push_back(g);
        }
        return out;
    }

    bool commute(GroupElement x, GroupElement y) const { return multiply(x, y) == multiply(y, x); }

    bool operator==(const MetacyclicGroup& o) const { return spec_ == o.spec_; }

private:
    void build_tables() {
        const int m = order();
        mul_.resize(static_cast<std::size_t>(m) * m);
        inv_.resize(m);
        for (int x = 0; x < m; ++x) {
            inv_[x] = index(inverse(element(x)));
            for (int y = 0; y < m; ++y) mul_[static_cast<std::size_t>(x) * m + y] = index(multiply(element(x), element(y)));
        }
    }

    GroupSpec spec_;
    std::vector<int> npow_;
    std::vector<int> mul_;
    std::vector<int> inv_;
};

}  // namespace dwlink
