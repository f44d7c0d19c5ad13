#pragma once

#include <string>
#include <vector>

#include "legaug/dga.hpp"

namespace legaug {

// Built-in fixtures: plat fronts plus one explicit DGA given by generators
// and differentials rather than a diagram.
struct CorpusFront {
    std::string name;
    std::string plat;
};

const std::vector<CorpusFront>& corpus_fronts();
FrontDiagram corpus_front(const std::string& name);

// The standard left-trefoil DGA over Z[t,t^-1] with |t| = 2 (gradings mod 2).
const std::string& left_trefoil_dga_text();
CeDga left_trefoil_dga();

} // namespace legaug
