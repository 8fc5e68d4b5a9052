#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "group.hpp"

namespace dwlink {

/// omega^u on G: the standard generator of H^3(Z_p; U(1)) pulled back along G -> Z_p.
/// Values are exponents of exp(2 pi i / p^2).
class ThreeCocycle {
public:
    ThreeCocycle(const MetacyclicGroup& group, int u) : group_(&group), u_(u) {
        if (u < 0 || u >= group.p())
            throw std::invalid_argument("cocycle parameter u must lie in [0, p), got " + std::to_string(u));
        const int m = group.order();
        const int p = group.p();
        table_.resize(static_cast<std::size_t>(m) * m * m);
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                for (int z = 0; z < m; ++z) {
                    int jx = group.b_exponent(x), jy = group.b_exponent(y), jz = group.b_exponent(z);
                    int carry = jy + jz >= p ? 1 : 0;
                    table_[(static_cast<std::size_t>(x) * m + y) * m + z] = (u * p * jx * carry) % (p * p);
                }
    }

    const MetacyclicGroup& group() const { return *group_; }
    int u() const { return u_; }
    /// Phases are read modulo this.
    int modulus() const { return group_->p() * group_->p(); }

    int operator()(int x, int y, int z) const {
        const std::size_t m = group_->order();
        return table_[(x * m + y) * m + z];
    }

    int omega(GroupElement x, GroupElement y, GroupElement z) const {
        return (*this)(group_->index(x), group_->index(y), group_->index(z));
    }

    /// tau_x(h, l) = w(x,h,l) w(h, h^-1 x h, l)^-1 w(h, l, (hl)^-1 x hl), defined for all h, l.
    /// On a graded component of degree x the right action satisfies T_l T_h = tau_x(h,l) T_{hl}.
    int transgression(int x, int h, int l) const {
        const auto& g = *group_;
        int hx = g.mul(g.mul(g.inv(h), x), h);
        int hl = g.mul(h, l);
        int hlx = g.mul(g.mul(g.inv(hl), x), hl);
        int v = (*this)(x, h, l) - (*this)(h, hx, l) + (*this)(h, l, hlx);
        int mdl = modulus();
        return ((v % mdl) + mdl) % mdl;
    }

    /// beta_g restricted to the centralizer of g.
    int beta(GroupElement g, GroupElement h, GroupElement l) const {
        if (!group_->commute(g, h) || !group_->commute(g, l))
            throw std::invalid_argument("beta arguments must centralize the basepoint");
        return transgression(group_->index(g), group_->index(h), group_->index(l));
    }

    const std::vector<int>& table() const { return table_; }

private:
    const MetacyclicGroup* group_;
    int u_;
    std::vector<int> table_;
};

/// Exhaustive check of d(omega) = 1 on a dense |G|^3 table of exponents mod `modulus`.
inline bool verify_cocycle_table(const MetacyclicGroup& g, const std::vector<int>& table, int modulus) {
    const int m = g.order();
    auto w = [&](int x, int y, int z) { return table[(static_cast<std::size_t>(x) * m + y) * m + z]; };
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            int xy = g.mul(x, y);
            for (int z = 0; z < m; ++z) {
                int yz = g.mul(y, z);
                for (int t = 0; t < m; ++t) {
                    int zt = g.mul(z, t);
                    long long lhs = w(y, z, t) + w(x, yz, t) + w(x, y, z);
                    long long rhs = w(xy, z, t) + w(x, y, zt);
                    if ((lhs - rhs) % modulus != 0) return false;
                }
            }
        }
    return true;
}

inline bool verify_cocycle(const MetacyclicGroup& g, int u) {
    ThreeCocycle w(g, u);
    return verify_cocycle_table(g, w.table(), w.modulus());
}

}  // namespace dwlink
