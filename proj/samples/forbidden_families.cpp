// Sizes of the accelerator catalogs and a membership query.
#include <iostream>

#include "zft/zft.hpp"

int main() {
    using namespace zft;
    for (int k = 0; k <= 1; ++k)
        std::cout << "G_" << k << ": " << generate_Gk(k)->size() << " members, "
                  << generate_Gk(k, {true, -1})->size() << " after reduction\n";

    const Graph& ladder = named_graph("K2xP4");
    std::cout << "th(K2xP4) = " << throttling_number(Rule::Z, ladder).th << '\n';
    if (const auto hit = contains_Gk_member(ladder, 1))
        std::cout << "contains the G_1 member " << emit_graph6(hit->member.graph) << " with composition "
                  << to_json(hit->member.decomposition)["composition"].dump() << '\n';
}
