#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace legaug {

struct arithmetic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact coefficient field: the rationals or a prime field F_p.
// All arithmetic is exact; construction of F_p verifies primality.
struct FieldSpec {
    enum class Kind { Rationals, Prime } kind = Kind::Rationals;
    int64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime(int64_t p);

    bool is_finite() const { return kind == Kind::Prime; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
    // Parses "Q" or "Fp:<p>".
    static FieldSpec parse(const std::string& s);
};

// A reduced fraction; denominator > 0, gcd(num, den) = 1.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n) : num(n), den(1) {}
    Rational(int64_t n, int64_t d);

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    bool operator==(const Rational&) const = default;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const { return Rational::make_raw(-num, den); }
    Rational inverse() const;

    std::string str() const;
    static Rational parse(const std::string& s);

private:
    static Rational make_raw(int64_t n, int64_t d) {
        Rational r;
        r.num = n;
        r.den = d;
        return r;
    }
};

// One element of the chosen field.  The spec is carried along so mixed-field
// arithmetic is rejected instead of silently coerced.
class Value {
public:
    Value() : spec_(FieldSpec::rationals()), rat_(0) {}
    static Value zero(const FieldSpec& f);
    static Value one(const FieldSpec& f);
    static Value of_int(const FieldSpec& f, int64_t n);
    static Value of_rational(const FieldSpec& f, const Rational& r);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;
    bool operator==(const Value& o) const;
    bool operator!=(const Value& o) const { return !(*this == o); }

    Value operator+(const Value& o) const;
    Value operator-(const Value& o) const;
    Value operator*(const Value& o) const;
    Value operator-() const;
    Value inverse() const;
    Value pow(int64_t e) const;

    // Canonical residue in {0,...,p-1} for prime fields.
    int64_t residue() const;
    const Rational& rational() const;

    std::string str() const;
    static Value parse(const FieldSpec& f, const std::string& s);

private:
    FieldSpec spec_;
    Rational rat_;     // rationals
    int64_t res_ = 0;  // prime field residue

    void check_same(const Value& o) const;
};

bool is_prime(int64_t p);

} // namespace legaug
