#include <iostream>

#include "dwlink/braid.hpp"
#include "dwlink/quandle.hpp"

int main() {
    using namespace dwlink;
    MetacyclicGroup G;
    const BraidWord fig8 = parse_gittings("AbAb", 3);
    for (int u = 0; u < G.p(); ++u) {
        Category cat = build_category(G, u);
        BraidRepresentation rep(cat);
        std::cout << "u=" << u;
        for (int k = 1; k < G.p(); ++k) {
            auto label = cat.index_of(AnyonLabel{AnyonKind::B, k, 0});
            std::cout << "  B_" << k << "_0: " << rep.closure_invariant(fig8, {{label}}).to_string();
        }
        std::cout << '\n';
    }
    for (int k = 1; k < G.p(); ++k)
        std::cout << "colorings k=" << k << ": " << count_colorings_linear(fig8, make_quandle(G.spec(), k)) << '\n';
}
