#pragma once

#include "legaug/correspond.hpp"

namespace legaug {

// A Z/2 augmentation of the classical Chekanov-Eliashberg DGA (t = 1,
// coefficients mod 2), given by its support on the generators of the
// single-base-point DGA of a front.
struct Z2Augmentation {
    std::vector<int> values; // 0/1 per generator
};

// t -> 1, coefficients mod 2, gradings mod 2r.
CeDga reduce_mod2(const CeDga& dga);

// All Z/2 augmentations of the reduction, via the finite-field search.
std::vector<Z2Augmentation> enumerate_z2_augmentations(const FrontDiagram& front);

// The section 5 lift: extends the mod-2 augmentation over the dipped diagram,
// rebuilds it over the integers with the same ruling, and undips.  The result
// is integer valued, reduces to the input generator-wise, and sends t to -1.
Augmentation lift_z2_augmentation(const FrontDiagram& front, const Z2Augmentation& z2);

} // namespace legaug
