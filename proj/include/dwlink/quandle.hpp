#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "anyon.hpp"
#include "braid.hpp"
#include "cyclotomic.hpp"
#include "group.hpp"

namespace dwlink {

/// X_k = Z/q with x |> y = (1 - t) x + t y, t = n^k. Here x is the acting (over) element.
struct AlexanderQuandle {
    int modulus = 11;
    int multiplier = 3;
    int k = 1;

    int op(int x, int y) const {
        return detail::mod(static_cast<long long>(1 - multiplier) * x + static_cast<long long>(multiplier) * y, modulus);
    }

    /// Right-inverse: op(x, inverse_op(x, z)) == z.
    int inverse_op(int x, int z) const {
        int tinv = detail::pow_mod(multiplier, modulus - 2, modulus);
        return detail::mod(static_cast<long long>(1 - tinv) * x + static_cast<long long>(tinv) * z, modulus);
    }
};

inline AlexanderQuandle make_quandle(const GroupSpec& spec, int k) {
    if (k <= 0 || k >= spec.p) throw std::invalid_argument("quandle block index must lie in [1, p)");
    return {spec.q, detail::pow_mod(spec.n, k, spec.q), k};
}

namespace detail {

/// Crossing maps read top-down. Positive: (x, y) above becomes (x |> y, x) below, the over
/// strand x acting by |>. Negative: (x, y) becomes (y, y |>^-1 x), the over strand y acting by
/// the right-inverse.
inline void push_down(const AlexanderQuandle& X, BraidLetter l, std::vector<int>& c) {
    const int i = l.generator - 1;
    const int x = c[i], y = c[i + 1];
    if (l.sign > 0) {
        c[i] = X.op(x, y);
        c[i + 1] = x;
    } else {
        c[i] = y;
        c[i + 1] = X.inverse_op(y, x);
    }
}

/// Same maps as q x q integer matrices acting on column vectors of colors.
inline std::vector<std::vector<long long>> crossing_matrix(const AlexanderQuandle& X, BraidLetter l, int n) {
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int r = 0; r < n; ++r) m[r][r] = 1;
    const int i = l.generator - 1;
    const long long t = X.multiplier;
    const long long tinv = pow_mod(X.multiplier, X.modulus - 2, X.modulus);
    m[i][i] = 0;
    m[i + 1][i + 1] = 0;
    if (l.sign > 0) {
        m[i][i] = 1 - t;
        m[i][i + 1] = t;
        m[i + 1][i] = 1;
    } else {
        m[i][i + 1] = 1;
        m[i + 1][i + 1] = 1 - tinv;
        m[i + 1][i] = tinv;
    }
    return m;
}

inline int nullity_mod(std::vector<std::vector<long long>> m, int q) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (mod(m[r][c], q) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        long long inv = pow_mod(mod(m[rank][c], q), q - 2, q);
        for (auto& v : m[rank]) v = mod(v * inv, q);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            long long f = mod(m[r][c], q);
            if (f == 0) continue;
            for (int cc = 0; cc < cols; ++cc) m[r][cc] = mod(m[r][cc] - f * m[rank][cc], q);
        }
        ++rank;
    }
    return cols - rank;
}

}  // namespace detail

/// Colorings fixed by the braid, by enumerating all q^n tuples.
inline std::int64_t count_colorings_brute(const BraidWord& w, const AlexanderQuandle& X) {
    const int n = w.strands;
    std::int64_t total = 1;
    for (int s = 0; s < n; ++s) total *= X.modulus;
    std::int64_t count = 0;
    std::vector<int> c(n), start(n);
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t v = code;
        for (int s = n; s-- > 0;) {
            start[s] = static_cast<int>(v % X.modulus);
            v /= X.modulus;
        }
        c = start;
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) detail::push_down(X, *it, c);
        if (c == start) ++count;
    }
    return count;
}

/// Colorings as the kernel of (F - 1) over F_q, F the linear top-to-bottom map.
inline std::int64_t count_colorings_linear(const BraidWord& w, const AlexanderQuandle& X) {
    const int n = w.strands;
    const int q = X.modulus;
    std::vector<std::vector<long long>> f(n, std::vector<long long>(n, 0));
    for (int r = 0; r < n; ++r) f[r][r] = 1;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        auto m = detail::crossing_matrix(X, *it, n);
        std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                long long acc = 0;
                for (int t = 0; t < n; ++t) acc += m[r][t] * f[t][c];
                next[r][c] = detail::mod(acc, q);
            }
        f = std::move(next);
    }
    for (int r = 0; r < n; ++r) f[r][r] -= 1;
    int nullity = detail::nullity_mod(f, q);
    std::int64_t count = 1;
    for (int k = 0; k < nullity; ++k) count *= q;
    return count;
}

struct ColoringCounts {
    std::int64_t brute = 0;
    std::int64_t linear = 0;
    bool agree() const { return brute == linear; }
};

inline ColoringCounts count_colorings(const BraidWord& w, const AlexanderQuandle& X) {
    return {count_colorings_brute(w, X), count_colorings_linear(w, X)};
}

/// theta(B_{k,s})^writhe * C_{X_k}, from the closed-form twist.
inline CyclotomicInteger quandle_b_value(const GroupSpec& spec, const BraidWord& w, int k, int s, int u) {
    const int p = spec.p;
    const int N = std::lcm(spec.q, p * p);
    const auto& field = CyclotomicField::get(N);
    long long tw = static_cast<long long>((p * k * s + k * k * u) % (p * p)) * (N / (p * p));
    auto counts = count_colorings(w, make_quandle(spec, k));
    if (!counts.agree()) throw std::logic_error("quandle coloring backends disagree");
    return counts.linear * field.root(tw * writhe(w));
}

}  // namespace dwlink
