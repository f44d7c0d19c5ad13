#pragma once

#include "legaug/resolved.hpp"

namespace legaug {

// One type II push inside a dip: strand k passed over strand l (k > l,
// positions at the dip's entry slice), creating b (left) and a (right).
struct DipPush {
    int k = 0, l = 0;
    GenId b = -1, a = -1;
};

// Lexicographic push order (2,1),(3,1),(3,2),...,(2m,2m-1).
std::vector<std::pair<int, int>> push_order(int strands);

// Inserts the push's two crossing columns into a partially built dip whose
// columns occupy [begin, begin + 2*done); the new pair lands in the center.
DipPush insert_push(ResolvedDiagram& D, int begin, int done, int dip_index, int k, int l);

// Full dip (every strand pushed over every lower strand) right before column
// `at`; returns the pushes in creation order.
std::vector<DipPush> insert_full_dip(ResolvedDiagram& D, int at, int dip_index);

// Dips in every gap of a resolved plat: before c_1, between crossings, and
// before the right cusps.
ResolvedDiagram build_dipped(const ResolvedDiagram& base);

} // namespace legaug
