#include "legaug/field.hpp"

#include <numeric>

namespace legaug {

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(int64_t p) {
    if (!is_prime(p)) throw arithmetic_error("field characteristic must be prime: " + std::to_string(p));
    return FieldSpec{Kind::Prime, p};
}

std::string FieldSpec::str() const {
    return kind == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q" || s == "q") return rationals();
    if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0)
        return prime(std::stoll(s.substr(3)));
    if (s.rfind("F", 0) == 0 && s.size() > 1 && isdigit((unsigned char)s[1]))
        return prime(std::stoll(s.substr(1)));
    throw arithmetic_error("bad field spec: " + s);
}

namespace {

int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw arithmetic_error("rational overflow");
    return (int64_t)v;
}

int64_t mod_norm(int64_t v, int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

int64_t mod_inv(int64_t a, int64_t p) {
    // extended Euclid; a nonzero mod p
    int64_t t = 0, newt = 1, r = p, newr = mod_norm(a, p);
    if (newr == 0) throw arithmetic_error("inverse of zero");
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    return mod_norm(t, p);
}

} // namespace

Rational::Rational(int64_t n, int64_t d) {
    if (d == 0) throw arithmetic_error("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = (__int128)num * o.den + (__int128)o.num * den;
    __int128 d = (__int128)den * o.den;
    // reduce in 128 bits before narrowing
    auto gcd128 = [](__int128 a, __int128 b) {
        if (a < 0) a = -a;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    __int128 r = gcd128(n, d);
    if (r > 1) {
        n /= r;
        d /= r;
    }
    return Rational(checked(n), checked(d));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    Rational a(num, o.den), b(o.num, den);
    __int128 n = (__int128)a.num * b.num;
    __int128 d = (__int128)a.den * b.den;
    return Rational(checked(n), checked(d));
}

Rational Rational::inverse() const {
    if (num == 0) throw arithmetic_error("inverse of zero");
    return Rational(den, num);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

Value Value::zero(const FieldSpec& f) { return of_int(f, 0); }
Value Value::one(const FieldSpec& f) { return of_int(f, 1); }

Value Value::of_int(const FieldSpec& f, int64_t n) {
    Value v;
    v.spec_ = f;
    if (f.kind == FieldSpec::Kind::Rationals)
        v.rat_ = Rational(n);
    else
        v.res_ = mod_norm(n, f.p);
    return v;
}

Value Value::of_rational(const FieldSpec& f, const Rational& r) {
    Value v;
    v.spec_ = f;
    if (f.kind == FieldSpec::Kind::Rationals) {
        v.rat_ = r;
    } else {
        if (r.den % f.p == 0) throw arithmetic_error("denominator not invertible mod p");
        v.res_ = mod_norm(r.num, f.p) * mod_inv(r.den, f.p) % f.p;
    }
    return v;
}

bool Value::is_zero() const {
    return spec_.kind == FieldSpec::Kind::Rationals ? rat_.is_zero() : res_ == 0;
}

bool Value::operator==(const Value& o) const {
    if (spec_ != o.spec_) return false;
    return spec_.kind == FieldSpec::Kind::Rationals ? rat_ == o.rat_ : res_ == o.res_;
}

void Value::check_same(const Value& o) const {
    if (spec_ != o.spec_) throw arithmetic_error("mixed-field arithmetic");
}

Value Value::operator+(const Value& o) const {
    check_same(o);
    Value v;
    v.spec_ = spec_;
    if (spec_.kind == FieldSpec::Kind::Rationals)
        v.rat_ = rat_ + o.rat_;
    else
        v.res_ = mod_norm(res_ + o.res_, spec_.p);
    return v;
}

Value Value::operator-(const Value& o) const { return *this + (-o); }

Value Value::operator*(const Value& o) const {
    check_same(o);
    Value v;
    v.spec_ = spec_;
    if (spec_.kind == FieldSpec::Kind::Rationals)
        v.rat_ = rat_ * o.rat_;
    else
        v.res_ = (int64_t)((__int128)res_ * o.res_ % spec_.p);
    return v;
}

Value Value::operator-() const {
    Value v;
    v.spec_ = spec_;
    if (spec_.kind == FieldSpec::Kind::Rationals)
        v.rat_ = -rat_;
    else
        v.res_ = mod_norm(-res_, spec_.p);
    return v;
}

Value Value::inverse() const {
    Value v;
    v.spec_ = spec_;
    if (spec_.kind == FieldSpec::Kind::Rationals)
        v.rat_ = rat_.inverse();
    else
        v.res_ = mod_inv(res_, spec_.p);
    return v;
}

Value Value::pow(int64_t e) const {
    Value base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    Value acc = one(spec_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int64_t Value::residue() const {
    if (spec_.kind != FieldSpec::Kind::Prime) throw arithmetic_error("residue() needs a prime field");
    return res_;
}

const Rational& Value::rational() const {
    if (spec_.kind != FieldSpec::Kind::Rationals) throw arithmetic_error("rational() needs Q");
    return rat_;
}

std::string Value::str() const {
    return spec_.kind == FieldSpec::Kind::Rationals ? rat_.str() : std::to_string(res_);
}

Value Value::parse(const FieldSpec& f, const std::string& s) {
    return of_rational(f, Rational::parse(s));
}

} // namespace legaug
