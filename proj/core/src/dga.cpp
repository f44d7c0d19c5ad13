#include "legaug/dga.hpp"

#include <sstream>

namespace legaug {

GenId CeDga::gen_index(const std::string& n) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == n) return (GenId)i;
    throw dga_error("unknown generator: " + n);
}

int CeDga::tvar_index(const std::string& n) const {
    for (size_t i = 0; i < tvars.size(); ++i)
        if (tvars[i].name == n) return (int)i;
    throw dga_error("unknown variable: " + n);
}

int CeDga::term_grading(const Term& t) const {
    int g = 0;
    for (auto& [v, e] : t.mono.exps) g += e * tvars[v].grading;
    for (GenId x : t.word) g += gens[x].grading;
    return g;
}

bool CeDga::grading_equal(int a, int b) const {
    if (modulus == 0) return a == b;
    return ((a - b) % modulus + modulus) % modulus == 0;
}

AlgebraElement CeDga::d(const AlgebraElement& x) const {
    AlgebraElement out;
    for (const Term& t : x.terms()) {
        int prefix_parity = 0;
        for (size_t i = 0; i < t.word.size(); ++i) {
            AlgebraElement left = AlgebraElement::term(t.coeff, t.mono, {t.word.begin(), t.word.begin() + i});
            AlgebraElement right =
                AlgebraElement::term(1, LaurentMonomial::unit(), {t.word.begin() + i + 1, t.word.end()});
            AlgebraElement mid = diff[t.word[i]];
            AlgebraElement piece = left * mid * right;
            out = out + (prefix_parity ? -piece : piece);
            prefix_parity = (prefix_parity + gens[t.word[i]].grading) & 1;
            if (prefix_parity < 0) prefix_parity += 2;
        }
    }
    return out;
}

std::optional<CeDga::DsqWitness> CeDga::d_squared_witness() const {
    for (size_t g = 0; g < gens.size(); ++g) {
        AlgebraElement dd = d(diff[g]);
        if (coeff_modulus == 2) dd = dd.mod2_t1();
        if (!dd.is_zero()) return DsqWitness{(GenId)g, dd};
    }
    return std::nullopt;
}

void CeDga::check_gradings() const {
    for (size_t g = 0; g < gens.size(); ++g)
        for (const Term& t : diff[g].terms())
            if (!grading_equal(term_grading(t), gens[g].grading - 1))
                throw dga_error("differential of " + gens[g].name + " has a term of wrong degree");
}

std::string CeDga::element_str(const AlgebraElement& e) const {
    return e.str([&](GenId g) { return gens[g].name; }, [&](int v) { return tvars[v].name; });
}

AlgebraElement CeDga::element_parse(const std::string& s) const {
    return AlgebraElement::parse(
        s, [&](const std::string& n) { return gen_index(n); },
        [&](const std::string& n) { return tvar_index(n); });
}

std::string CeDga::dump() const {
    std::ostringstream out;
    out << "dga " << (name.empty() ? "unnamed" : name) << "\n";
    out << "modulus " << modulus << "\n";
    if (coeff_modulus != 0) out << "coeffmod " << coeff_modulus << "\n";
    for (auto& t : tvars) out << "t " << t.name << " " << t.grading << "\n";
    for (size_t g = 0; g < gens.size(); ++g)
        out << "gen " << gens[g].name << " " << gens[g].grading << " : " << element_str(diff[g]) << "\n";
    return out.str();
}

CeDga CeDga::load(const std::string& text) {
    CeDga dga;
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<std::string, std::string>> pending; // gen name -> diff text
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "dga") {
            ls >> dga.name;
        } else if (kw == "modulus") {
            ls >> dga.modulus;
            if (dga.modulus < 0) throw dga_error("negative modulus");
        } else if (kw == "coeffmod") {
            ls >> dga.coeff_modulus;
        } else if (kw == "t") {
            TVarInfo t;
            ls >> t.name >> t.grading;
            dga.tvars.push_back(t);
        } else if (kw == "gen") {
            DgaGen g;
            std::string colon;
            ls >> g.name >> g.grading >> colon;
            if (colon != ":") throw dga_error("expected ':' in gen line: " + line);
            std::string rest;
            std::getline(ls, rest);
            dga.gens.push_back(g);
            pending.push_back({g.name, rest});
        } else {
            throw dga_error("bad line in dga file: " + line);
        }
    }
    for (auto& [gname, dtext] : pending) dga.diff.push_back(dga.element_parse(dtext));
    dga.check_gradings();
    if (auto w = dga.d_squared_witness())
        throw dga_error("d^2 != 0 at " + dga.gens[w->gen].name + ": " + dga.element_str(w->residue));
    return dga;
}

CeDga dga_of_diagram(const ResolvedDiagram& D, const std::string& name) {
    CeDga dga;
    dga.name = name;
    dga.modulus = 0; // plat-built DGAs carry the full Z-grading
    for (auto& g : D.gens) dga.gens.push_back({g.name, g.grading});
    dga.tvars = D.tvars;
    for (size_t g = 0; g < D.gens.size(); ++g) dga.diff.push_back(D.differential((GenId)g));
    return dga;
}

} // namespace legaug
