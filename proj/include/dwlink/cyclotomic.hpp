#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dwlink {

class CyclotomicInteger;

/// Z[zeta_N] presented as Z[x] / Phi_N(x). Instances are interned per order and never freed.
class CyclotomicField {
public:
    static const CyclotomicField& get(int order) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<CyclotomicField>> fields;
        std::lock_guard lock(mu);
        auto& slot = fields[order];
        if (!slot) slot.reset(new CyclotomicField(order));
        return *slot;
    }

    int order() const { return order_; }
    int degree() const { return degree_; }

    /// Coefficients of Phi_N, lowest degree first; monic of length degree()+1.
    const std::vector<std::int64_t>& cyclotomic_polynomial() const { return phi_; }

    /// Reduce a polynomial (any length) modulo Phi_N in place; result occupies [0, degree).
    void reduce_in_place(std::vector<std::int64_t>& poly) const {
        for (std::size_t top = poly.size(); top-- > static_cast<std::size_t>(degree_);) {
            std::int64_t c = poly[top];
            if (c == 0) continue;
            std::size_t shift = top - degree_;
            for (auto [k, coeff] : phi_terms_) poly[shift + k] -= c * coeff;
        }
        if (poly.size() > static_cast<std::size_t>(degree_)) poly.resize(degree_);
    }

    inline CyclotomicInteger from_dense(std::vector<std::int64_t> poly) const;
    inline CyclotomicInteger root(long long exponent) const;
    inline CyclotomicInteger integer(std::int64_t v) const;

private:
    explicit CyclotomicField(int order) : order_(order) {
        if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
        phi_ = compute_phi(order);
        degree_ = static_cast<int>(phi_.size()) - 1;
        for (int k = 0; k < degree_; ++k)
            if (phi_[k] != 0) phi_terms_.emplace_back(k, phi_[k]);
    }

    static std::vector<std::int64_t> compute_phi(int n) {
        // x^n - 1 divided by Phi_d for every proper divisor d.
        std::vector<std::int64_t> num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        for (int d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            num = divide_exact(num, compute_phi(d));
        }
        return num;
    }

    static std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
        const std::size_t dd = den.size() - 1;
        std::vector<std::int64_t> quot(num.size() - dd, 0);
        for (std::size_t k = num.size(); k-- > dd;) {
            std::int64_t c = num[k];  // den is monic
            quot[k - dd] = c;
            for (std::size_t t = 0; t <= dd; ++t) num[k - dd + t] -= c * den[t];
        }
        return quot;
    }

    int order_;
    int degree_ = 0;
    std::vector<std::int64_t> phi_;
    std::vector<std::pair<int, std::int64_t>> phi_terms_;  // nonzero low-order terms
};

/// Element of Z[zeta_N] in canonical form: sparse coefficients of the reduced polynomial
/// (exponents < phi(N)), sorted by exponent, no zero coefficients.
class CyclotomicInteger {
public:
    using Term = std::pair<int, std::int64_t>;

    CyclotomicInteger() = default;
    explicit CyclotomicInteger(const CyclotomicField& field) : field_(&field) {}

    const CyclotomicField& field() const { return *field_; }
    bool has_field() const { return field_ != nullptr; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_integer() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    std::int64_t constant_term() const { return !terms_.empty() && terms_[0].first == 0 ? terms_[0].second : 0; }

    std::vector<std::int64_t> dense() const {
        std::vector<std::int64_t> out(field_->degree(), 0);
        for (auto [e, c] : terms_) out[e] = c;
        return out;
    }

    friend bool operator==(const CyclotomicInteger& l, const CyclotomicInteger& r) {
        if (l.terms_.empty() && r.terms_.empty()) return true;
        return l.field_ == r.field_ && l.terms_ == r.terms_;
    }
    friend bool operator<(const CyclotomicInteger& l, const CyclotomicInteger& r) { return l.terms_ < r.terms_; }

    CyclotomicInteger operator-() const {
        CyclotomicInteger r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend CyclotomicInteger operator+(const CyclotomicInteger& l, const CyclotomicInteger& r) {
        if (!l.field_) return r;
        if (!r.field_) return l;
        require_same(l, r);
        CyclotomicInteger out(*l.field_);
        std::size_t i = 0, j = 0;
        while (i < l.terms_.size() || j < r.terms_.size()) {
            if (j == r.terms_.size() || (i < l.terms_.size() && l.terms_[i].first < r.terms_[j].first)) {
                out.terms_.push_back(l.terms_[i++]);
            } else if (i == l.terms_.size() || r.terms_[j].first < l.terms_[i].first) {
                out.terms_.push_back(r.terms_[j++]);
            } else {
                std::int64_t c = l.terms_[i].second + r.terms_[j].second;
                if (c != 0) out.terms_.emplace_back(l.terms_[i].first, c);
                ++i;
                ++j;
            }
        }
        return out;
    }

    friend CyclotomicInteger operator-(const CyclotomicInteger& l, const CyclotomicInteger& r) { return l + (-r); }

    friend CyclotomicInteger operator*(const CyclotomicInteger& l, const CyclotomicInteger& r) {
        if (!l.field_ || !r.field_ || l.is_zero() || r.is_zero())
            return CyclotomicInteger(l.field_ ? *l.field_ : *r.field_);
        require_same(l, r);
        std::vector<std::int64_t> prod(2 * l.field_->degree(), 0);
        for (auto [el, cl] : l.terms_)
            for (auto [er, cr] : r.terms_) prod[el + er] += cl * cr;
        return l.field_->from_dense(std::move(prod));
    }

    friend CyclotomicInteger operator*(std::int64_t s, const CyclotomicInteger& r) {
        CyclotomicInteger out = r;
        if (s == 0) {
            out.terms_.clear();
            return out;
        }
        for (auto& t : out.terms_) t.second *= s;
        return out;
    }

    /// Complex conjugation: zeta -> zeta^-1.
    CyclotomicInteger conj() const {
        const int n = field_->order();
        std::vector<std::int64_t> poly(n, 0);
        for (auto [e, c] : terms_) poly[(n - e) % n] += c;
        return field_->from_dense(std::move(poly));
    }

    std::pair<double, double> approx() const {
        double re = 0, im = 0;
        const int n = field_ ? field_->order() : 1;
        for (auto [e, c] : terms_) {
            double ang = 2.0 * std::numbers::pi * e / n;
            re += static_cast<double>(c) * std::cos(ang);
            im += static_cast<double>(c) * std::sin(ang);
        }
        return {re, im};
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto [e, c] : terms_) {
            h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
            h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
        }
        return h;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto [e, c] : terms_) {
            if (!s.empty()) s += c < 0 ? " - " : " + ";
            else if (c < 0) s += "-";
            std::int64_t a = c < 0 ? -c : c;
            if (e == 0) {
                s += std::to_string(a);
            } else {
                if (a != 1) s += std::to_string(a) + "*";
                s += "z^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    friend class CyclotomicField;

    static void require_same(const CyclotomicInteger& l, const CyclotomicInteger& r) {
        if (l.field_ != r.field_) throw std::invalid_argument("cyclotomic operands from different fields");
    }

    const CyclotomicField* field_ = nullptr;
    std::vector<Term> terms_;
};

inline CyclotomicInteger CyclotomicField::from_dense(std::vector<std::int64_t> poly) const {
    reduce_in_place(poly);
    CyclotomicInteger out(*this);
    for (int e = 0; e < static_cast<int>(poly.size()); ++e)
        if (poly[e] != 0) out.terms_.emplace_back(e, poly[e]);
    return out;
}

inline CyclotomicInteger CyclotomicField::root(long long exponent) const {
    std::vector<std::int64_t> poly(order_, 0);
    long long e = exponent % order_;
    if (e < 0) e += order_;
    poly[e] = 1;
    return from_dense(std::move(poly));
}

inline CyclotomicInteger CyclotomicField::integer(std::int64_t v) const {
    CyclotomicInteger out(*this);
    if (v != 0) out.terms_.emplace_back(0, v);
    return out;
}

/// Unreduced sum of roots of unity: multiplicities per exponent of zeta_N, i.e. an
/// element of the group ring Z[C_N]. Traces of monomial operators land here first.
class RootSum {
public:
    RootSum() = default;
    explicit RootSum(int order) : order_(order) {}

    int order() const { return order_; }
    const std::vector<std::pair<int, std::int64_t>>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    static RootSum from_histogram(int order, std::span<const std::int64_t> counts) {
        RootSum r(order);
        for (int e = 0; e < order; ++e)
            if (counts[e] != 0) r.terms_.emplace_back(e, counts[e]);
        return r;
    }

    CyclotomicInteger reduce() const {
        const auto& f = CyclotomicField::get(order_);
        std::vector<std::int64_t> poly(order_, 0);
        for (auto [e, c] : terms_) poly[e] += c;
        return f.from_dense(std::move(poly));
    }

    /// Accumulate scale * this * other into a length-N histogram (cyclic convolution).
    void multiply_accumulate(const RootSum& other, std::int64_t scale, std::span<std::int64_t> acc) const {
        for (auto [e1, c1] : terms_)
            for (auto [e2, c2] : other.terms_) {
                int e = e1 + e2;
                if (e >= order_) e -= order_;
                acc[e] += scale * c1 * c2;
            }
    }

    RootSum conj() const {
        std::vector<std::int64_t> h(order_, 0);
        for (auto [e, c] : terms_) h[(order_ - e) % order_] += c;
        return from_histogram(order_, h);
    }

    RootSum times(const RootSum& other) const {
        std::vector<std::int64_t> h(order_, 0);
        multiply_accumulate(other, 1, h);
        return from_histogram(order_, h);
    }

private:
    int order_ = 1;
    std::vector<std::pair<int, std::int64_t>> terms_;
};

struct CyclotomicHash {
    std::size_t operator()(const CyclotomicInteger& c) const { return c.hash(); }
};

/// Dense ids for exact values, so tensors can be compared as integer arrays.
class ValueInterner {
public:
    std::uint32_t id(const CyclotomicInteger& v) {
        auto [it, inserted] = ids_.try_emplace(v, static_cast<std::uint32_t>(values_.size()));
        if (inserted) values_.push_back(v);
        return it->second;
    }

    std::vector<std::uint32_t> ids(const std::vector<CyclotomicInteger>& vs) {
        std::vector<std::uint32_t> out;
        out.reserve(vs.size());
        for (const auto& v : vs) out.push_back(id(v));
        return out;
    }

    const CyclotomicInteger& value(std::uint32_t id) const { return values_[id]; }
    std::size_t size() const { return values_.size(); }

private:
    std::unordered_map<CyclotomicInteger, std::uint32_t, CyclotomicHash> ids_;
    std::vector<CyclotomicInteger> values_;
};

}  // namespace dwlink
