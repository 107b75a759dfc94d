// th+ of the five-vertex path, its extension, and the minor script for t = 3.
#include <iostream>

#include "zft/zft.hpp"

int main() {
    using namespace zft;
    const Graph p5 = path_graph(5);
    const auto cert = throttling_number(Rule::ZPlus, p5);
    std::cout << "th+(P5) = " << cert.th << " with B = " << format_set(cert.blue) << '\n';
    for (int t = 0; t < cert.pt; ++t) std::cout << "  layer " << t + 1 << ": " << format_set(cert.schedule.layers[t]) << '\n';

    const auto ext = build_extension(p5, cert.schedule);
    std::cout << "extension: " << to_json(ext, p5).dump() << '\n';

    if (const auto script = characterization_certificate(p5, 3, Flavor::psd))
        std::cout << "script: " << to_json(*script).dump() << "\nreproduces P5: " << std::boolalpha
                  << script_produces(*script, p5) << '\n';
}
