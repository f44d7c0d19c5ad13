#pragma once

#include <string>
#include <vector>

#include "legaug/field.hpp"

namespace legaug {

struct diagram_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A plat-position front: m left cusps (cusp k joins strands 2k-1, 2k), the
// same number of right cusps (cusp k joins strands 2m-2k+1, 2m-2k+2, labeled
// top to bottom), and an ordered word of crossings between adjacent strands.
// Strand positions run 1 (bottom) to 2m (top).
struct FrontDiagram {
    std::string name;
    int m = 0;
    std::vector<int> word; // p_i in 1..2m-1

    int strands() const { return 2 * m; }
    std::string to_plat() const;
    std::string to_json() const;
};

// Per-segment traversal directions from the normalized orientation: the
// bottom strand at the leftmost slice points rightward.  Segment (slice,pos)
// with slice in 0..n, pos in 1..2m; dir +1 = rightward, -1 = leftward.
struct Orientation {
    std::vector<std::vector<int8_t>> dir; // [slice][pos-1]
    int r = 0;                            // rotation number
    int down_cusps = 0;
    int up_cusps = 0;

    int at(int slice, int pos) const { return dir[slice][pos - 1]; }
};

struct ClassicalInvariants {
    int tb = 0;
    int r = 0;
};

// Z-valued Maslov potential on front segments; satisfies the cusp rule
// everywhere and jumps by 2r only across the base point.
struct MaslovPotential {
    std::vector<std::vector<int>> mu; // [slice][pos-1]
    int modulus = 0;                  // |2r|, 0 means Z-valued
    int jump_cusp = 1;                // right cusp carrying the base point

    int at(int slice, int pos) const { return mu[slice][pos - 1]; }
};

FrontDiagram parse_front(const std::string& text);
FrontDiagram front_from_json(const std::string& text);

// Throws diagram_error unless tracing the plat closure yields one component.
void validate_front(const FrontDiagram& d);
bool is_single_component(const FrontDiagram& d);

Orientation orient(const FrontDiagram& d);
ClassicalInvariants classical_invariants(const FrontDiagram& d, const Orientation& o);

// base_cusp: the right cusp (1 = top) whose neighborhood carries the base
// point; the segment entered when leaving that cusp along the orientation is
// normalized to 0.
MaslovPotential maslov_potential(const FrontDiagram& d, const Orientation& o, int base_cusp = 1);

// Crossing sign of the i-th front crossing (0-based), +1 or -1.
int crossing_sign(const FrontDiagram& d, const Orientation& o, int i);

} // namespace legaug
