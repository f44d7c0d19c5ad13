#include "legaug/diagram.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace legaug {

std::string FrontDiagram::to_plat() const {
    std::string s = "plat " + std::to_string(m) + ":";
    for (int p : word) s += " " + std::to_string(p);
    return s;
}

std::string FrontDiagram::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["name"] = name;
    j["word"] = word;
    return j.dump();
}

FrontDiagram front_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    FrontDiagram d;
    d.m = j.at("m").get<int>();
    if (j.contains("name")) d.name = j.at("name").get<std::string>();
    d.word = j.at("word").get<std::vector<int>>();
    validate_front(d);
    return d;
}

FrontDiagram parse_front(const std::string& text) {
    std::istringstream in(text);
    std::string kw;
    in >> kw;
    if (kw != "plat") throw diagram_error("expected 'plat <m>: ...', got: " + text);
    std::string mtok;
    in >> mtok;
    if (mtok.empty() || mtok.back() != ':') throw diagram_error("expected 'plat <m>:' header");
    FrontDiagram d;
    try {
        d.m = std::stoi(mtok.substr(0, mtok.size() - 1));
    } catch (...) {
        throw diagram_error("bad cusp count in: " + text);
    }
    if (d.m < 1) throw diagram_error("need at least one cusp");
    int p;
    while (in >> p) d.word.push_back(p);
    if (!in.eof()) throw diagram_error("trailing junk in plat word");
    validate_front(d);
    return d;
}

namespace {

// One step of the plat trace.  State: slice 0..n, pos, dir (+1 right).
// Returns false when a turn happened at a cusp (pos/dir updated in place);
// cusp_delta reports the Maslov jump of the turn (+1 lower->upper).
struct TraceState {
    int slice;
    int pos;
    int dir;
};

void trace_step(const FrontDiagram& d, TraceState& s, int* cusp_delta = nullptr) {
    int n = (int)d.word.size();
    if (cusp_delta) *cusp_delta = 0;
    if (s.dir > 0) {
        if (s.slice == n) {
            // right cusp turn
            int k = (2 * d.m - s.pos) / 2 + 1; // cusp index, 1 = top
            int lo = 2 * d.m - 2 * k + 1;
            int partner = s.pos == lo ? lo + 1 : lo;
            if (cusp_delta) *cusp_delta = partner > s.pos ? 1 : -1;
            s.pos = partner;
            s.dir = -1;
        } else {
            int p = d.word[s.slice];
            if (s.pos == p)
                s.pos = p + 1;
            else if (s.pos == p + 1)
                s.pos = p;
            ++s.slice;
        }
    } else {
        if (s.slice == 0) {
            int k = (s.pos + 1) / 2;
            int lo = 2 * k - 1;
            int partner = s.pos == lo ? lo + 1 : lo;
            if (cusp_delta) *cusp_delta = partner > s.pos ? 1 : -1;
            s.pos = partner;
            s.dir = 1;
        } else {
            int p = d.word[s.slice - 1];
            if (s.pos == p)
                s.pos = p + 1;
            else if (s.pos == p + 1)
                s.pos = p;
            --s.slice;
        }
    }
}

} // namespace

bool is_single_component(const FrontDiagram& d) {
    int n = (int)d.word.size();
    int total = (n + 1) * d.strands();
    TraceState s{0, 1, 1};
    int visited = 0;
    do {
        ++visited;
        trace_step(d, s);
    } while (!(s.slice == 0 && s.pos == 1 && s.dir == 1));
    return visited == total;
}

void validate_front(const FrontDiagram& d) {
    if (d.m < 1) throw diagram_error("need at least one cusp");
    for (int p : d.word)
        if (p < 1 || p >= d.strands())
            throw diagram_error("crossing position out of range: " + std::to_string(p));
    if (!is_single_component(d)) throw diagram_error("front traces to more than one component");
}

Orientation orient(const FrontDiagram& d) {
    int n = (int)d.word.size();
    Orientation o;
    o.dir.assign(n + 1, std::vector<int8_t>(d.strands(), 0));
    TraceState s{0, 1, 1};
    do {
        o.dir[s.slice][s.pos - 1] = (int8_t)s.dir;
        int delta;
        trace_step(d, s, &delta);
        if (delta != 0) (delta < 0 ? o.down_cusps : o.up_cusps)++; // upper->lower is a down cusp
    } while (!(s.slice == 0 && s.pos == 1 && s.dir == 1));
    o.r = (o.down_cusps - o.up_cusps) / 2;
    return o;
}

int crossing_sign(const FrontDiagram& d, const Orientation& o, int i) {
    int p = d.word[i];
    // positive iff the two strands are parallel
    return o.at(i, p) == o.at(i, p + 1) ? 1 : -1;
}

ClassicalInvariants classical_invariants(const FrontDiagram& d, const Orientation& o) {
    ClassicalInvariants ci;
    int writhe = 0;
    for (int i = 0; i < (int)d.word.size(); ++i) writhe += crossing_sign(d, o, i);
    ci.tb = writhe - d.m;
    ci.r = o.r;
    return ci;
}

MaslovPotential maslov_potential(const FrontDiagram& d, const Orientation& o, int base_cusp) {
    int n = (int)d.word.size();
    MaslovPotential mp;
    mp.mu.assign(n + 1, std::vector<int>(d.strands(), 0));
    mp.modulus = 2 * (o.r < 0 ? -o.r : o.r);
    mp.jump_cusp = base_cusp;

    // start just after the base cusp, following the orientation
    int lo = 2 * d.m - 2 * base_cusp + 1;
    // the knot leaves the cusp leftward on one of the two strands; find it
    TraceState s{n, 0, -1};
    if (o.at(n, lo) < 0)
        s.pos = lo;
    else if (o.at(n, lo + 1) < 0)
        s.pos = lo + 1;
    else
        throw diagram_error("orientation inconsistent at base cusp");

    int mu = 0;
    TraceState start = s;
    do {
        mp.mu[s.slice][s.pos - 1] = mu;
        int delta;
        trace_step(d, s, &delta);
        mu += delta;
    } while (!(s.slice == start.slice && s.pos == start.pos && s.dir == start.dir));
    // the residual holonomy is the base-point jump, forced to be +-2r
    if (mu != 2 * o.r && mu != -2 * o.r)
        throw diagram_error("Maslov potential inconsistent: residual " + std::to_string(mu));
    return mp;
}

} // namespace legaug
