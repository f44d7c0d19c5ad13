#pragma once

#include <cstdint>
#include <vector>

#include "legaug/dga.hpp"

namespace legaug {

struct augment_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A rho-graded augmentation: unital algebra map to the field annihilating
// the differential, supported on generators of degree divisible by rho, with
// every t variable sent to a unit.
struct Augmentation {
    enum class Provenance { BruteForce, Constructed, Lifted };
    FieldSpec field;
    int rho = 0;
    std::vector<Value> values;   // aligned with CeDga::gens
    std::vector<Value> tvalues;  // aligned with CeDga::tvars
    Provenance provenance = Provenance::BruteForce;

    Value t_product() const;
    std::string to_json(const CeDga& dga) const;
};

// Divisibility of a grading class by rho; rho = 0 means grading exactly 0.
bool rho_divides(int rho, int grading, int modulus);
bool gen_eligible(const CeDga& dga, int rho, GenId g);

Value eval_element(const CeDga& dga, const Augmentation& a, const AlgebraElement& e);

// Support condition, unit t values, and eps(d g) = 0 for every generator.
bool is_augmentation(const CeDga& dga, const Augmentation& a);

uint64_t default_budget();

// Complete enumeration over a prime field, ineligible generators forced to 0,
// t values ranging over F*.  Deterministic output order.  Throws when the
// naive search space exceeds the budget or the field is infinite.
std::vector<Augmentation> enumerate_augmentations(const CeDga& dga, const FieldSpec& field, int rho,
                                                  uint64_t budget = default_budget(), int jobs = 1);

// Sorted set of eps(t) = prod eps(t_i) residues over the enumeration.
std::vector<int64_t> augmentation_variety(const CeDga& dga, const FieldSpec& field, int rho,
                                          uint64_t budget = default_budget(), int jobs = 1);

} // namespace legaug
