#include "legaug/corpus.hpp"

namespace legaug {

const std::vector<CorpusFront>& corpus_fronts() {
    static const std::vector<CorpusFront> fronts = {
        {"right-trefoil", "plat 2: 2 2 2"},
        {"unknot", "plat 1:"},
        {"stab-unknot", "plat 1: 1"},
        // tb = -6, r = 1, determinant 3, one ungraded ruling (unoriented)
        {"left-trefoil-plat", "plat 3: 2 1 1 1 2 2 4"},
    };
    return fronts;
}

FrontDiagram corpus_front(const std::string& name) {
    for (auto& f : corpus_fronts())
        if (f.name == name) {
            FrontDiagram d = parse_front(f.plat);
            d.name = name;
            return d;
        }
    throw diagram_error("no corpus front named " + name);
}

const std::string& left_trefoil_dga_text() {
    static const std::string text = R"(dga left-trefoil
modulus 2
t t 2
gen c1 -1 : 0
gen c2 -1 : 0
gen c3 1 : 0
gen c4 -1 : +1*t^1*[] +1*[c1,c2]
gen c5 1 : +1*[] +1*[c2,c3]
gen c6 1 : +1*[] +1*[c3,c1]
)";
    return text;
}

CeDga left_trefoil_dga() { return CeDga::load(left_trefoil_dga_text()); }

} // namespace legaug
