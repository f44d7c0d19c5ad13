#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "legaug/field.hpp"

namespace legaug {

using GenId = int32_t;

// Laurent monomial in base-point variables t_0, t_1, ...  Exponents may be
// negative; absent variables have exponent 0.
struct LaurentMonomial {
    // sorted by variable index
    std::vector<std::pair<int, int>> exps;

    static LaurentMonomial unit() { return {}; }
    static LaurentMonomial var(int v, int e = 1);
    LaurentMonomial operator*(const LaurentMonomial& o) const;
    LaurentMonomial inverse() const;
    bool is_unit() const { return exps.empty(); }
    int exponent(int v) const;
    auto operator<=>(const LaurentMonomial&) const = default;

    std::string str(const std::function<std::string(int)>& var_name) const;
};

// One term of an algebra element: integer coefficient, t-monomial, and a word
// of generators.  The empty word is the algebra unit.
struct Term {
    int64_t coeff = 0;
    LaurentMonomial mono;
    std::vector<GenId> word;
};

// An element of the free associative unital algebra over Z[t_i^{+-1}],
// kept in canonical form: terms sorted by (word, monomial), like terms merged,
// zero terms dropped.
class AlgebraElement {
public:
    AlgebraElement() = default;
    static AlgebraElement zero() { return {}; }
    static AlgebraElement unit(int64_t coeff = 1);
    static AlgebraElement generator(GenId g);
    static AlgebraElement term(int64_t coeff, LaurentMonomial mono, std::vector<GenId> word);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(int64_t k) const;
    AlgebraElement scaled_mono(const LaurentMonomial& m) const;

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

    // Ring-homomorphic evaluation; every generator and variable that occurs
    // must have a value, and t values must be units.
    Value evaluate(const std::function<Value(GenId)>& gen_value,
                   const std::function<Value(int)>& t_value,
                   const FieldSpec& field) const;

    // Reduce coefficients mod 2 and set every t_i to 1.
    AlgebraElement mod2_t1() const;

    std::string str(const std::function<std::string(GenId)>& gen_name,
                    const std::function<std::string(int)>& var_name) const;

    // Parses the serialization produced by str(): `+2*t0^-1*[c1,c2] -1*[]`.
    static AlgebraElement parse(const std::string& text,
                                const std::function<GenId(const std::string&)>& gen_of,
                                const std::function<int(const std::string&)>& var_of);

    static void canonicalize(std::vector<Term>& ts);

private:
    std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.mono == b.mono && a.word == b.word;
}

} // namespace legaug
