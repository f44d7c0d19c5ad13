#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legaug/resolved.hpp"

namespace legaug {

struct dga_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DgaGen {
    std::string name;
    int grading = 0;
};

// The Chekanov-Eliashberg DGA: free noncommutative unital algebra over
// Z[t_1^{+-1},...,t_s^{+-1}] with a degree -1 differential.  Gradings live in
// Z when modulus == 0 and in Z/modulus otherwise.
class CeDga {
public:
    std::string name;
    int modulus = 0;
    int coeff_modulus = 0; // 0 = integer coefficients, 2 = the classical mod-2 DGA
    std::vector<DgaGen> gens;
    std::vector<TVarInfo> tvars;
    std::vector<AlgebraElement> diff;

    GenId gen_index(const std::string& n) const;
    int tvar_index(const std::string& n) const;

    int term_grading(const Term& t) const;
    bool grading_equal(int a, int b) const;

    // Signed Leibniz extension of the differential to the whole algebra.
    AlgebraElement d(const AlgebraElement& x) const;

    struct DsqWitness {
        GenId gen;
        AlgebraElement residue;
    };
    // Empty when d^2 == 0 exactly on every generator.
    std::optional<DsqWitness> d_squared_witness() const;

    // Throws dga_error when some differential term does not drop degree by 1.
    void check_gradings() const;

    std::string element_str(const AlgebraElement& e) const;
    AlgebraElement element_parse(const std::string& s) const;

    std::string dump() const;
    // Parses dump() format; checks gradings and d^2 = 0.
    static CeDga load(const std::string& text);
};

CeDga dga_of_diagram(const ResolvedDiagram& D, const std::string& name = "");

} // namespace legaug
