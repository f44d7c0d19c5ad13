#include "legaug/rulings.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace legaug {

bool NormalRuling::is_switch(int j) const {
    return std::find(switches.begin(), switches.end(), j) != switches.end();
}

std::string NormalRuling::to_json(const FrontDiagram&) const {
    nlohmann::json j;
    std::vector<int> sw;
    for (int s : switches) sw.push_back(s + 1); // 1-based crossing labels
    j["configurations"] = configs;
    j["switches"] = sw;
    return j.dump();
}

RulingState initial_ruling_state(int m) {
    RulingState st(2 * m);
    for (int k = 1; k <= m; ++k) {
        st[2 * k - 2] = 2 * k;
        st[2 * k - 1] = 2 * k - 1;
    }
    return st;
}

std::vector<int> front_crossing_gradings(const FrontDiagram& d, const Orientation&,
                                         const MaslovPotential& mp) {
    std::vector<int> g;
    for (int i = 0; i < (int)d.word.size(); ++i) {
        int p = d.word[i];
        g.push_back(mp.at(i, p + 1) - mp.at(i, p));
    }
    return g;
}

bool switch_is_normal(const RulingState& before, int p) {
    int i = p, j = p + 1;
    int X = before[i - 1], Y = before[j - 1];
    if (X == j) return false; // mutually paired strands may not cross at all
    int a1 = std::min(i, X), b1 = std::max(i, X);
    int a2 = std::min(j, Y), b2 = std::max(j, Y);
    bool interlaced = (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
    return !interlaced;
}

std::string classify_configuration(const FrontDiagram& d, const Orientation& o,
                                   const RulingState& before, int j, bool switched) {
    int p = d.word[j];
    int i = p, ip = p + 1;
    int X = before[i - 1], Y = before[ip - 1];
    std::string sign = crossing_sign(d, o, j) > 0 ? "+" : "-";
    if (switched) {
        if (X < i && Y > ip) return sign + "(a)";
        if (Y < X && X < i) return sign + "(b)";
        if (ip < Y && Y < X) return sign + "(c)";
        throw diagram_error("switch at interlaced crossing");
    }
    if (X > ip && Y < i) return "(d)";
    if (X < Y && Y < i) return "(e)";
    if (ip < X && X < Y) return "(f)";
    return "pass";
}

namespace {

RulingState conjugate(const RulingState& st, int p) {
    RulingState out = st;
    std::swap(out[p - 1], out[p]);
    for (auto& v : out) {
        if (v == p)
            v = p + 1;
        else if (v == p + 1)
            v = p;
    }
    return out;
}

} // namespace

std::vector<NormalRuling> enumerate_rulings(const FrontDiagram& d, int rho) {
    Orientation o = orient(d);
    if (rho < 0) throw diagram_error("rho must be nonnegative");
    if (rho == 0 && o.r != 0) throw diagram_error("rho = 0 requires rotation number 0");
    if (rho != 0 && (2 * o.r) % rho != 0) throw diagram_error("rho must divide 2r");
    MaslovPotential mp = maslov_potential(d, o);
    std::vector<int> grading = front_crossing_gradings(d, o, mp);

    auto graded = [&](int j) {
        if (rho == 0) return grading[j] == 0;
        return ((grading[j] % rho) + rho) % rho == 0;
    };

    int n = (int)d.word.size();
    RulingState final_state = initial_ruling_state(d.m);
    std::vector<NormalRuling> out;

    std::vector<RulingState> states(n + 1);
    std::vector<int> switches;
    std::vector<std::string> configs(n);

    std::function<void(RulingState, int)> walk = [&](RulingState st, int j) {
        states[j] = st;
        if (j == n) {
            if (st == final_state) {
                NormalRuling R;
                R.states = states;
                R.switches = switches;
                R.configs = configs;
                out.push_back(std::move(R));
            }
            return;
        }
        int p = d.word[j];
        if (st[p - 1] == p + 1) return; // paired strands may not cross
        configs[j] = classify_configuration(d, o, st, j, false);
        walk(conjugate(st, p), j + 1);
        if (graded(j) && switch_is_normal(st, p)) {
            configs[j] = classify_configuration(d, o, st, j, true);
            switches.push_back(j);
            walk(st, j + 1);
            switches.pop_back();
        }
    };
    walk(initial_ruling_state(d.m), 0);
    return out;
}

bool is_oriented(const NormalRuling& R) {
    for (int j : R.switches)
        if (!R.configs[j].empty() && R.configs[j][0] == '-') return false;
    return true;
}

bool parity_check(const FrontDiagram& d, const NormalRuling& R) {
    int a_minus = 0;
    for (int j : R.switches)
        if (R.configs[j] == "-(a)") ++a_minus;
    int total = d.m + (int)R.switches.size() + a_minus;
    return total % 2 == 1;
}

std::map<int, int> ruling_count_polynomial(const FrontDiagram& d, int rho) {
    std::map<int, int> poly;
    for (auto& R : enumerate_rulings(d, rho)) poly[(int)R.switches.size() - d.m] += 1;
    return poly;
}

int interlaced_pairs(const RulingState& state) {
    int n = (int)state.size();
    int count = 0;
    for (int a = 1; a <= n; ++a) {
        int b = state[a - 1];
        if (b <= a) continue;
        for (int c = a + 1; c < b; ++c) {
            int e = state[c - 1];
            if (e > b) ++count; // pair (c,e) interlaces (a,b)
        }
    }
    return count;
}

std::string render_ruling(const FrontDiagram& d, const NormalRuling& R) {
    std::ostringstream out;
    int n = (int)d.word.size();
    for (int s = 0; s <= n; ++s) {
        out << "slice " << s << ":";
        for (int p = 1; p <= d.strands(); ++p)
            if (R.states[s][p - 1] > p) out << " (" << p << "," << R.states[s][p - 1] << ")";
        if (s < n) out << "   c" << s + 1 << " " << (R.is_switch(s) ? "switch " : "pass ") << R.configs[s];
        out << "\n";
    }
    return out.str();
}

} // namespace legaug
