#include "legaug/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace legaug {

LaurentMonomial LaurentMonomial::var(int v, int e) {
    LaurentMonomial m;
    if (e != 0) m.exps.push_back({v, e});
    return m;
}

LaurentMonomial LaurentMonomial::operator*(const LaurentMonomial& o) const {
    LaurentMonomial out;
    size_t i = 0, j = 0;
    while (i < exps.size() || j < o.exps.size()) {
        if (j == o.exps.size() || (i < exps.size() && exps[i].first < o.exps[j].first)) {
            out.exps.push_back(exps[i++]);
        } else if (i == exps.size() || o.exps[j].first < exps[i].first) {
            out.exps.push_back(o.exps[j++]);
        } else {
            int e = exps[i].second + o.exps[j].second;
            if (e != 0) out.exps.push_back({exps[i].first, e});
            ++i;
            ++j;
        }
    }
    return out;
}

LaurentMonomial LaurentMonomial::inverse() const {
    LaurentMonomial out = *this;
    for (auto& [v, e] : out.exps) e = -e;
    return out;
}

int LaurentMonomial::exponent(int v) const {
    for (auto& [w, e] : exps)
        if (w == v) return e;
    return 0;
}

std::string LaurentMonomial::str(const std::function<std::string(int)>& var_name) const {
    std::string s;
    for (auto& [v, e] : exps) {
        if (!s.empty()) s += "*";
        s += var_name(v) + "^" + std::to_string(e);
    }
    return s;
}

namespace {

bool term_key_less(const Term& a, const Term& b) {
    if (a.word != b.word) return a.word < b.word;
    return a.mono < b.mono;
}

} // namespace

void AlgebraElement::canonicalize(std::vector<Term>& ts) {
    std::sort(ts.begin(), ts.end(), term_key_less);
    std::vector<Term> out;
    for (auto& t : ts) {
        if (!out.empty() && out.back().word == t.word && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(t);
        }
    }
    ts = std::move(out);
}

AlgebraElement AlgebraElement::unit(int64_t coeff) {
    return term(coeff, LaurentMonomial::unit(), {});
}

AlgebraElement AlgebraElement::generator(GenId g) {
    return term(1, LaurentMonomial::unit(), {g});
}

AlgebraElement AlgebraElement::term(int64_t coeff, LaurentMonomial mono, std::vector<GenId> word) {
    AlgebraElement e;
    if (coeff != 0) e.terms_.push_back(Term{coeff, std::move(mono), std::move(word)});
    return e;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    std::vector<Term> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    canonicalize(ts);
    AlgebraElement e;
    e.terms_ = std::move(ts);
    return e;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement e = *this;
    for (auto& t : e.terms_) t.coeff = -t.coeff;
    return e;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_) {
        for (auto& b : o.terms_) {
            Term t;
            t.coeff = a.coeff * b.coeff;
            t.mono = a.mono * b.mono;
            t.word = a.word;
            t.word.insert(t.word.end(), b.word.begin(), b.word.end());
            ts.push_back(std::move(t));
        }
    }
    canonicalize(ts);
    AlgebraElement e;
    e.terms_ = std::move(ts);
    return e;
}

AlgebraElement AlgebraElement::scaled(int64_t k) const {
    if (k == 0) return {};
    AlgebraElement e = *this;
    for (auto& t : e.terms_) t.coeff *= k;
    return e;
}

AlgebraElement AlgebraElement::scaled_mono(const LaurentMonomial& m) const {
    AlgebraElement e = *this;
    for (auto& t : e.terms_) t.mono = t.mono * m;
    return e;
}

Value AlgebraElement::evaluate(const std::function<Value(GenId)>& gen_value,
                               const std::function<Value(int)>& t_value,
                               const FieldSpec& field) const {
    Value acc = Value::zero(field);
    for (auto& t : terms_) {
        Value v = Value::of_int(field, t.coeff);
        for (auto& [var, e] : t.mono.exps) {
            Value tv = t_value(var);
            if (tv.is_zero()) throw arithmetic_error("t variable evaluated to zero");
            v = v * tv.pow(e);
        }
        for (GenId g : t.word) v = v * gen_value(g);
        acc = acc + v;
    }
    return acc;
}

AlgebraElement AlgebraElement::mod2_t1() const {
    std::vector<Term> ts;
    for (auto& t : terms_) {
        Term u;
        u.coeff = ((t.coeff % 2) + 2) % 2;
        u.word = t.word;
        if (u.coeff != 0) ts.push_back(std::move(u));
    }
    canonicalize(ts);
    // merge may produce coefficient 2 after collapsing distinct monomials
    for (auto& t : ts) t.coeff = ((t.coeff % 2) + 2) % 2;
    std::erase_if(ts, [](const Term& t) { return t.coeff == 0; });
    AlgebraElement e;
    e.terms_ = std::move(ts);
    return e;
}

std::string AlgebraElement::str(const std::function<std::string(GenId)>& gen_name,
                                const std::function<std::string(int)>& var_name) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& t : terms_) {
        if (!s.empty()) s += " ";
        s += (t.coeff >= 0 ? "+" : "") + std::to_string(t.coeff);
        std::string m = t.mono.str(var_name);
        if (!m.empty()) s += "*" + m;
        s += "*[";
        for (size_t i = 0; i < t.word.size(); ++i) {
            if (i) s += ",";
            s += gen_name(t.word[i]);
        }
        s += "]";
    }
    return s;
}

AlgebraElement AlgebraElement::parse(const std::string& text,
                                     const std::function<GenId(const std::string&)>& gen_of,
                                     const std::function<int(const std::string&)>& var_of) {
    std::vector<Term> ts;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "0") continue;
        // split on '*'
        std::vector<std::string> parts;
        size_t start = 0;
        while (start <= tok.size()) {
            size_t star = tok.find('*', start);
            if (star == std::string::npos) {
                parts.push_back(tok.substr(start));
                break;
            }
            parts.push_back(tok.substr(start, star - start));
            start = star + 1;
        }
        if (parts.empty()) throw arithmetic_error("bad term: " + tok);
        Term t;
        t.coeff = std::stoll(parts[0]);
        for (size_t i = 1; i < parts.size(); ++i) {
            const std::string& p = parts[i];
            if (p.empty()) throw arithmetic_error("bad term: " + tok);
            if (p.front() == '[') {
                if (p.back() != ']') throw arithmetic_error("bad word: " + p);
                std::string inner = p.substr(1, p.size() - 2);
                size_t pos = 0;
                while (pos < inner.size()) {
                    size_t comma = inner.find(',', pos);
                    std::string name =
                        comma == std::string::npos ? inner.substr(pos) : inner.substr(pos, comma - pos);
                    t.word.push_back(gen_of(name));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            } else {
                size_t caret = p.find('^');
                if (caret == std::string::npos) throw arithmetic_error("bad monomial: " + p);
                int v = var_of(p.substr(0, caret));
                int e = std::stoi(p.substr(caret + 1));
                t.mono = t.mono * LaurentMonomial::var(v, e);
            }
        }
        ts.push_back(std::move(t));
    }
    canonicalize(ts);
    AlgebraElement e;
    e.terms_ = std::move(ts);
    return e;
}

} // namespace legaug
