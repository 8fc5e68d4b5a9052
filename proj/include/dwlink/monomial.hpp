#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cyclotomic.hpp"

namespace dwlink {

/// Generalized permutation matrix: basis vector s maps to zeta^phase[s] * e_{target[s]},
/// with zeta a primitive `order`-th root of unity.
struct MonomialOperator {
    int order = 1;
    std::vector<std::uint32_t> target;
    std::vector<std::int32_t> phase;

    std::size_t dim() const { return target.size(); }

    static MonomialOperator identity(std::size_t dim, int order) {
        MonomialOperator op;
        op.order = order;
        op.target.resize(dim);
        op.phase.assign(dim, 0);
        for (std::size_t s = 0; s < dim; ++s) op.target[s] = static_cast<std::uint32_t>(s);
        return op;
    }

    /// (*this) after `first`: apply `first`, then this.
    MonomialOperator after(const MonomialOperator& first) const {
        if (first.dim() != dim() || first.order != order) throw std::invalid_argument("monomial composition shape mismatch");
        MonomialOperator out;
        out.order = order;
        out.target.resize(dim());
        out.phase.resize(dim());
        for (std::size_t s = 0; s < dim(); ++s) {
            std::uint32_t mid = first.target[s];
            out.target[s] = target[mid];
            out.phase[s] = static_cast<std::int32_t>((first.phase[s] + phase[mid]) % order);
        }
        return out;
    }

    MonomialOperator inverse() const {
        MonomialOperator out;
        out.order = order;
        out.target.resize(dim());
        out.phase.resize(dim());
        for (std::size_t s = 0; s < dim(); ++s) {
            out.target[target[s]] = static_cast<std::uint32_t>(s);
            out.phase[target[s]] = static_cast<std::int32_t>((order - phase[s]) % order);
        }
        return out;
    }

    /// Transpose: same phases on the reversed arrows.
    MonomialOperator transpose() const {
        MonomialOperator out;
        out.order = order;
        out.target.resize(dim());
        out.phase.resize(dim());
        for (std::size_t s = 0; s < dim(); ++s) {
            out.target[target[s]] = static_cast<std::uint32_t>(s);
            out.phase[target[s]] = phase[s];
        }
        return out;
    }

    bool is_bijection() const {
        std::vector<bool> hit(dim(), false);
        for (auto t : target) {
            if (t >= dim() || hit[t]) return false;
            hit[t] = true;
        }
        return true;
    }

    RootSum trace() const {
        std::vector<std::int64_t> h(order, 0);
        for (std::size_t s = 0; s < dim(); ++s)
            if (target[s] == s) ++h[phase[s]];
        return RootSum::from_histogram(order, h);
    }

    friend bool operator==(const MonomialOperator& l, const MonomialOperator& r) {
        return l.order == r.order && l.target == r.target && l.phase == r.phase;
    }
};

}  // namespace dwlink
