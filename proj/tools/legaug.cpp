#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "legaug/corpus.hpp"
#include "legaug/correspond.hpp"
#include "legaug/lift.hpp"

using namespace legaug;

namespace {

struct Input {
    std::optional<FrontDiagram> front;
    std::optional<CeDga> dga;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw diagram_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Input load_input(const std::string& spec) {
    Input in;
    std::string text;
    if (spec.rfind("corpus:", 0) == 0) {
        std::string name = spec.substr(7);
        if (name == "left-trefoil-dga") {
            in.dga = left_trefoil_dga();
            return in;
        }
        in.front = corpus_front(name);
        return in;
    }
    text = slurp(spec);
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw diagram_error("empty input file");
    if (text.compare(i, 4, "plat") == 0) {
        size_t e = text.find('\n', i);
        in.front = parse_front(text.substr(i, e == std::string::npos ? e : e - i));
    } else if (text[i] == '{') {
        in.front = front_from_json(text);
    } else if (text.compare(i, 3, "dga") == 0) {
        in.dga = CeDga::load(text);
    } else {
        throw diagram_error("unrecognized input format in " + spec);
    }
    return in;
}

FrontDiagram need_front(const Input& in, const std::string& op) {
    if (!in.front) throw diagram_error(op + " needs a plat front, not an explicit DGA");
    return *in.front;
}

CeDga dga_of_input(const Input& in, BasePointMode mode = BasePointMode::SingleTop) {
    if (in.dga) return *in.dga;
    return dga_of_diagram(resolve(*in.front, mode), in.front->name);
}

Augmentation aug_from_json(const CeDga& dga, const std::string& text, int rho) {
    auto j = nlohmann::json::parse(text);
    FieldSpec F = FieldSpec::parse(j.at("field").get<std::string>());
    Augmentation a;
    a.field = F;
    a.rho = j.contains("rho") ? j.at("rho").get<int>() : rho;
    a.values.assign(dga.gens.size(), Value::zero(F));
    for (auto& [name, v] : j.at("values").items())
        a.values[dga.gen_index(name)] = Value::parse(F, v.get<std::string>());
    a.tvalues.assign(dga.tvars.size(), Value::one(F));
    for (auto& [name, v] : j.at("t").items())
        a.tvalues[dga.tvar_index(name)] = Value::parse(F, v.get<std::string>());
    return a;
}

nlohmann::json ruling_json(const NormalRuling& R) {
    nlohmann::json j;
    std::vector<int> sw;
    for (int s : R.switches) sw.push_back(s + 1);
    j["configurations"] = R.configs;
    j["switches"] = sw;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Chekanov-Eliashberg DGA, normal rulings and augmentations of plat-position "
                 "Legendrian fronts"};
    app.require_subcommand(1);

    std::string input, field_s = "Q", format = "text", aug_json, switches_s, z2_s;
    int rho = 0;
    uint64_t budget = default_budget();
    int jobs = 1;
    bool render = false, dipped = false, percusp = false, undip = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "plat/json/dga file or corpus:<name>")->required();
        sub->add_option("--format", format, "text or json");
    };

    auto* inv = app.add_subcommand("invariants", "tb and rotation number of a front");
    add_common(inv);

    auto* dgac = app.add_subcommand("dga", "print the Chekanov-Eliashberg DGA");
    add_common(dgac);
    dgac->add_flag("--dipped", dipped, "dump the fully dipped diagram's DGA");
    dgac->add_flag("--per-cusp", percusp, "one base point per right cusp");

    auto* check = app.add_subcommand("check", "validate gradings and d^2 = 0");
    add_common(check);

    auto* rul = app.add_subcommand("rulings", "enumerate rho-graded normal rulings");
    add_common(rul);
    rul->add_option("--rho", rho, "grading divisor");
    rul->add_flag("--render", render, "slice-by-slice pairing picture");

    auto* augs = app.add_subcommand("augs", "enumerate rho-graded augmentations");
    add_common(augs);
    augs->add_option("--rho", rho);
    augs->add_option("--field", field_s, "Q or Fp:<p>");
    augs->add_option("--budget", budget, "evaluation budget");
    augs->add_option("--jobs", jobs, "parallel workers");

    auto* var = app.add_subcommand("variety", "augmentation variety {eps(t)}");
    add_common(var);
    var->add_option("--rho", rho);
    var->add_option("--field", field_s);
    var->add_option("--budget", budget);
    var->add_option("--jobs", jobs);

    auto* a2r = app.add_subcommand("aug2ruling", "normal ruling and dipped augmentation from an augmentation");
    add_common(a2r);
    a2r->add_option("--aug", aug_json, "augmentation JSON (inline or @file)")->required();
    a2r->add_option("--rho", rho);

    auto* r2a = app.add_subcommand("ruling2aug", "dipped augmentation from a normal ruling");
    add_common(r2a);
    r2a->add_option("--switches", switches_s, "comma-separated 1-based switched crossings");
    r2a->add_option("--rho", rho);
    r2a->add_option("--field", field_s);
    r2a->add_flag("--undip", undip, "also undip to the original DGA");

    auto* lift = app.add_subcommand("lift", "lift a Z/2 augmentation to the integers");
    add_common(lift);
    lift->add_option("--z2", z2_s, "support bits over c1..cn,q1..qm")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bool json = format == "json";
    std::ostringstream out;

    if (*inv) {
        FrontDiagram d = need_front(load_input(input), "invariants");
        auto ci = classical_invariants(d, orient(d));
        if (json) {
            nlohmann::json j;
            j["r"] = ci.r;
            j["tb"] = ci.tb;
            out << j.dump() << "\n";
        } else {
            out << "tb=" << ci.tb << " r=" << ci.r << "\n";
        }
    } else if (*dgac) {
        Input in = load_input(input);
        CeDga dga;
        if (in.dga) {
            dga = *in.dga;
        } else {
            auto mode = percusp || dipped ? BasePointMode::PerCusp : BasePointMode::SingleTop;
            ResolvedDiagram R = resolve(*in.front, mode);
            if (dipped) R = build_dipped(R);
            dga = dga_of_diagram(R, in.front->name);
        }
        if (json) {
            nlohmann::json j;
            j["modulus"] = dga.modulus;
            j["name"] = dga.name;
            nlohmann::json gens, ts;
            for (size_t g = 0; g < dga.gens.size(); ++g) {
                nlohmann::json e;
                e["d"] = dga.element_str(dga.diff[g]);
                e["grading"] = dga.gens[g].grading;
                gens[dga.gens[g].name] = e;
            }
            for (auto& t : dga.tvars) ts[t.name] = t.grading;
            j["generators"] = gens;
            j["t"] = ts;
            out << j.dump() << "\n";
        } else {
            out << dga.dump();
        }
    } else if (*check) {
        CeDga dga = dga_of_input(load_input(input));
        dga.check_gradings();
        if (auto w = dga.d_squared_witness())
            throw dga_error("d^2 != 0 at " + dga.gens[w->gen].name + ": " +
                            dga.element_str(w->residue));
        out << "ok: " << dga.gens.size() << " generators, gradings consistent, d^2 = 0\n";
    } else if (*rul) {
        FrontDiagram d = need_front(load_input(input), "rulings");
        auto rulings = enumerate_rulings(d, rho);
        if (json) {
            nlohmann::json j = nlohmann::json::array();
            for (auto& R : rulings) j.push_back(ruling_json(R));
            out << j.dump() << "\n";
        } else {
            out << rulings.size() << " rulings\n";
            for (auto& R : rulings) {
                out << "switches:";
                for (int s : R.switches) out << " c" << s + 1;
                if (R.switches.empty()) out << " (none)";
                out << "\n";
                if (render) out << render_ruling(d, R);
            }
        }
    } else if (*augs) {
        CeDga dga = dga_of_input(load_input(input));
        auto list = enumerate_augmentations(dga, FieldSpec::parse(field_s), rho, budget, jobs);
        if (json) {
            nlohmann::json j = nlohmann::json::array();
            for (auto& a : list) j.push_back(nlohmann::json::parse(a.to_json(dga)));
            out << j.dump() << "\n";
        } else {
            out << list.size() << " augmentations\n";
            for (auto& a : list) out << a.to_json(dga) << "\n";
        }
    } else if (*var) {
        CeDga dga = dga_of_input(load_input(input));
        auto v = augmentation_variety(dga, FieldSpec::parse(field_s), rho, budget, jobs);
        if (json) {
            nlohmann::json j = v;
            out << j.dump() << "\n";
        } else {
            out << "{";
            for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
            out << "}\n";
        }
    } else if (*a2r) {
        FrontDiagram d = need_front(load_input(input), "aug2ruling");
        CeDga dga = dga_of_diagram(resolve(d, BasePointMode::SingleTop), d.name);
        std::string atext = aug_json.rfind("@", 0) == 0 ? slurp(aug_json.substr(1)) : aug_json;
        Augmentation a = aug_from_json(dga, atext, rho);
        CorrespondResult res = augmentation_to_ruling(d, a);
        if (json) {
            nlohmann::json j;
            j["base_points"] = base_point_count(res);
            j["dipped"] = nlohmann::json::parse(res.dipped_aug.to_json(res.dipped_dga));
            j["plan"] = res.plan.str();
            j["ruling"] = ruling_json(res.ruling);
            out << j.dump() << "\n";
        } else {
            out << "ruling switches:";
            for (int s : res.ruling.switches) out << " c" << s + 1;
            out << "\nbase points: " << base_point_count(res) << "\n";
            out << "dipped augmentation: " << res.dipped_aug.to_json(res.dipped_dga) << "\n";
            out << "base point plan:\n" << res.plan.str();
        }
    } else if (*r2a) {
        FrontDiagram d = need_front(load_input(input), "ruling2aug");
        std::vector<int> want;
        std::stringstream ss(switches_s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) want.push_back(std::stoi(tok) - 1);
        std::sort(want.begin(), want.end());
        auto rulings = enumerate_rulings(d, rho);
        const NormalRuling* R = nullptr;
        for (auto& r : rulings)
            if (r.switches == want) R = &r;
        if (!R) throw diagram_error("no enumerated ruling has that switch set");
        CorrespondResult res = ruling_to_dipped_augmentation(d, *R, FieldSpec::parse(field_s), rho);
        if (json) {
            nlohmann::json j;
            j["base_points"] = base_point_count(res);
            j["dipped"] = nlohmann::json::parse(res.dipped_aug.to_json(res.dipped_dga));
            if (undip) {
                Augmentation back = undip_augmentation(res);
                CeDga single = dga_of_diagram(resolve(d, BasePointMode::SingleTop), d.name);
                j["undipped"] = nlohmann::json::parse(back.to_json(single));
            }
            out << j.dump() << "\n";
        } else {
            out << "dipped augmentation: " << res.dipped_aug.to_json(res.dipped_dga) << "\n";
            out << "base points: " << base_point_count(res) << "\n";
            if (undip) {
                Augmentation back = undip_augmentation(res);
                CeDga single = dga_of_diagram(resolve(d, BasePointMode::SingleTop), d.name);
                out << "undipped augmentation: " << back.to_json(single) << "\n";
            }
        }
    } else if (*lift) {
        FrontDiagram d = need_front(load_input(input), "lift");
        CeDga dga = dga_of_diagram(resolve(d, BasePointMode::SingleTop), d.name);
        if (z2_s.size() != dga.gens.size())
            throw diagram_error("--z2 needs one bit per generator (" +
                                std::to_string(dga.gens.size()) + ")");
        Z2Augmentation z2;
        for (char c : z2_s) {
            if (c != '0' && c != '1') throw diagram_error("--z2 bits must be 0 or 1");
            z2.values.push_back(c - '0');
        }
        Augmentation lifted = lift_z2_augmentation(d, z2);
        out << lifted.to_json(dga) << "\n";
    }

    std::cout << out.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
