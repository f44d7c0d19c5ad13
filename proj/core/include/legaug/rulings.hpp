#pragma once

#include <map>
#include <string>
#include <vector>

#include "legaug/diagram.hpp"

namespace legaug {

// Per-slice ruling state: a fixed-point-free involution of strand positions.
// state[pos-1] = partner position (1-based).
using RulingState = std::vector<int>;

// A normal ruling: the switch set, every slice's pairing, and a per-crossing
// configuration tag ("+(a)", "-(b)", "(d)", "(e)", "(f)" or "pass").
struct NormalRuling {
    std::vector<RulingState> states; // one per slice, 0..n
    std::vector<int> switches;       // 0-based crossing indices, increasing
    std::vector<std::string> configs;

    bool is_switch(int j) const;
    std::string to_json(const FrontDiagram& d) const;
};

RulingState initial_ruling_state(int m);

// Configuration of crossing j against the state just left of it; switched
// configurations get a +/- prefix from the crossing sign.
std::string classify_configuration(const FrontDiagram& d, const Orientation& o,
                                   const RulingState& before, int j, bool switched);

// Whether a switch at position p is normal for the given state: the two
// pair-intervals are disjoint or nested, never interlaced.
bool switch_is_normal(const RulingState& before, int p);

// Complete, duplicate-free enumeration of the rho-graded normal rulings.
// Requires rho | 2r (rho = 0 needs r = 0).
std::vector<NormalRuling> enumerate_rulings(const FrontDiagram& d, int rho);

// Gradings of the front crossings from the Maslov potential.
std::vector<int> front_crossing_gradings(const FrontDiagram& d, const Orientation& o,
                                         const MaslovPotential& mp);

// True iff no crossing of the ruling is a switched negative crossing.
bool is_oriented(const NormalRuling& R);

// c + s + a_- must be odd for a knot.
bool parity_check(const FrontDiagram& d, const NormalRuling& R);

// Sum over rulings of z^{switches - m}, as exponent -> coefficient.
std::map<int, int> ruling_count_polynomial(const FrontDiagram& d, int rho);

// Interlaced-pair count of a state (for the cr = s mod 2 bookkeeping).
int interlaced_pairs(const RulingState& state);

// ASCII slice-by-slice rendering of the pairing.
std::string render_ruling(const FrontDiagram& d, const NormalRuling& R);

} // namespace legaug
