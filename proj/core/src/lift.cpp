#include "legaug/lift.hpp"

namespace legaug {

CeDga reduce_mod2(const CeDga& dga) {
    CeDga out;
    out.name = dga.name + "-mod2";
    out.modulus = dga.modulus;
    out.coeff_modulus = 2;
    out.gens = dga.gens;
    for (auto& e : dga.diff) out.diff.push_back(e.mod2_t1());
    return out;
}

std::vector<Z2Augmentation> enumerate_z2_augmentations(const FrontDiagram& front) {
    CeDga dga = dga_of_diagram(resolve(front, BasePointMode::SingleTop));
    std::vector<Z2Augmentation> out;
    for (auto& a : enumerate_augmentations(dga, FieldSpec::prime(2), 1)) {
        Z2Augmentation z;
        for (auto& v : a.values) z.values.push_back((int)v.residue());
        out.push_back(std::move(z));
    }
    return out;
}

Augmentation lift_z2_augmentation(const FrontDiagram& front, const Z2Augmentation& z2) {
    CeDga single = dga_of_diagram(resolve(front, BasePointMode::SingleTop));
    FieldSpec F2 = FieldSpec::prime(2);
    Augmentation a2;
    a2.field = F2;
    a2.rho = 1;
    for (int v : z2.values) a2.values.push_back(Value::of_int(F2, v));
    a2.tvalues = {Value::one(F2)};
    if (!is_augmentation(single, a2))
        throw correspond_error("input is not a Z/2 augmentation of the reduced DGA");

    // Sabloff-style mod-2 extension over the dipped diagram
    CorrespondResult mod2run = augmentation_to_ruling(front, a2);

    // integer rebuild: value 1 at every originally augmented generator of the
    // mod-2 dipped augmentation (the cusp crossings appear in no differential
    // and pass straight through), driven by the same ruling
    std::vector<bool> seed(front.word.size() + front.m, false);
    for (size_t g = 0; g < seed.size(); ++g)
        seed[g] = !mod2run.dipped_aug.values[(GenId)g].is_zero();

    CorrespondResult zrun =
        ruling_to_dipped_augmentation_seeded(front, mod2run.ruling, FieldSpec::rationals(), 1, seed);

    Augmentation out = undip_augmentation(zrun);
    out.provenance = Augmentation::Provenance::Lifted;

    if (out.tvalues[0] != -Value::one(out.field))
        throw correspond_error("lift did not send t to -1");
    for (size_t g = 0; g < out.values.size(); ++g) {
        const Rational& r = out.values[g].rational();
        if (r.den != 1) throw correspond_error("lift produced a non-integer value");
        int bit = (int)(((r.num % 2) + 2) % 2);
        if (bit != z2.values[g]) throw correspond_error("lift does not reduce to the input mod 2");
    }
    return out;
}

} // namespace legaug
