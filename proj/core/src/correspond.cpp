#include "legaug/correspond.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace legaug {

std::string BasePointPlan::str() const {
    std::ostringstream out;
    for (auto& e : events) out << e.action << " " << e.detail << "\n";
    return out.str();
}

namespace {

struct EngState {
    ResolvedDiagram D;
    std::vector<Value> gval;
    std::vector<Value> tval;
};

RulingState conj(const RulingState& st, int p) {
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

class Engine {
public:
    enum class Mode { ByValue, ByRuling };

    Engine(const FrontDiagram& front, FieldSpec F, int rho, Mode mode)
        : front_(front), F_(F), rho_(rho), mode_(mode), ofront_(orient(front)) {}

    // section 3 entry: augmentation of the single-base-point DGA
    void seed_from_single(const Augmentation& aug) {
        st_.D = resolve(front_, BasePointMode::PerCusp);
        st_.gval.assign(st_.D.gens.size(), Value::zero(F_));
        CeDga single = dga_of_diagram(resolve(front_, BasePointMode::SingleTop));
        for (size_t g = 0; g < st_.D.gens.size(); ++g)
            st_.gval[g] = aug.values[single.gen_index(st_.D.gens[g].name)];
        st_.tval.assign(st_.D.tvars.size(), Value::one(F_));
        // the per-cusp t values are forced by the cusp equations
        int n = (int)front_.word.size();
        for (int k = 1; k <= front_.m; ++k) {
            GenId q = (GenId)(n + k - 1);
            solve_cusp_t(q, k);
        }
        validate(false);
    }

    // section 4 / section 5 entry: values decreed from a ruling
    void seed_from_ruling(const NormalRuling& R, const std::vector<bool>& augmented,
                          const std::map<int, Value>& overrides) {
        given_ = &R;
        st_.D = resolve(front_, BasePointMode::PerCusp);
        st_.gval.assign(st_.D.gens.size(), Value::zero(F_));
        // one flag per original generator: the crossings, then the cusps
        for (size_t g = 0; g < augmented.size() && g < st_.D.gens.size(); ++g)
            if (augmented[g]) st_.gval[g] = Value::one(F_);
        for (auto& [j, v] : overrides) st_.gval[j] = v;
        st_.tval.assign(st_.D.tvars.size(), -Value::one(F_));
    }

    void run() {
        int n = (int)front_.word.size();
        state_ = initial_ruling_state(front_.m);
        states_.assign(n + 1, state_);
        configs_.assign(n, "");
        knobs_.assign(n + 1, {});
        if (mode_ == Mode::ByValue) {
            // section 3: incremental extension with the type II transport
            process_dip(0);
            for (int j = 1; j <= n; ++j) {
                process_crossing(j);
                process_dip(j);
            }
        } else {
            // section 4: the values are decreed on the finished dipped diagram,
            // so build all of it first and then solve the lattice values
            insert_dip_structural(0);
            for (int j = 1; j <= n; ++j) {
                process_crossing(j);
                insert_dip_structural(j);
            }
            for (int gap = 0; gap <= n; ++gap) solve_dip_values(gap);
        }
        finish();
    }

    CorrespondResult result() {
        CorrespondResult res;
        res.front = front_;
        res.rho = rho_;
        res.ruling.states = states_;
        res.ruling.switches = switches_;
        res.ruling.configs = configs_;
        res.dipped = st_.D;
        res.dipped_dga = dga_of_diagram(st_.D, front_.name + "-dipped");
        res.dipped_aug.field = F_;
        res.dipped_aug.rho = rho_;
        res.dipped_aug.values = st_.gval;
        res.dipped_aug.tvalues = st_.tval;
        res.dipped_aug.provenance = Augmentation::Provenance::Constructed;
        res.plan = plan_;
        res.log = log_;
        return res;
    }

    bool normalize_t = true; // force cusp t values to -1 when they land on +1

private:
    FrontDiagram front_;
    FieldSpec F_;
    int rho_;
    Mode mode_;
    Orientation ofront_;
    const NormalRuling* given_ = nullptr;
    EngState st_;
    RulingState state_;
    std::vector<RulingState> states_;
    std::vector<int> switches_;
    std::vector<std::string> configs_;
    BasePointPlan plan_;
    std::vector<BuildEvent> log_;
    std::map<GenId, int> dip_height_;
    std::vector<std::vector<std::pair<int, int>>> knobs_; // per gap: pushes allowed nonzero b

    Value eval(const AlgebraElement& e) const {
        return e.evaluate([&](GenId g) { return st_.gval[g]; }, [&](int v) { return st_.tval[v]; },
                          F_);
    }

    Value eval_mono(const LaurentMonomial& m) const {
        Value v = Value::one(F_);
        for (auto& [var, e] : m.exps) v = v * st_.tval[var].pow(e);
        return v;
    }

    bool rho_ok(int grading) const { return rho_divides(rho_, grading, st_.D.modulus); }

    void validate(bool skip_cusps) const {
        for (size_t g = 0; g < st_.D.gens.size(); ++g) {
            if (st_.D.gens[g].col < 0) continue;
            if (skip_cusps && st_.D.gens[g].cls == GenClass::Cusp) continue;
            if (!eval(st_.D.differential((GenId)g)).is_zero())
                throw correspond_error("eps accedes d at " + st_.D.gens[g].name);
        }
    }

    // eps(t_k) from the cusp equation eps(d q) = 0
    void solve_cusp_t(GenId q, int k) {
        const AlgebraElement& dq = st_.D.differential(q);
        int var = k - 1;
        Value rest = Value::zero(F_);
        int64_t coeff = 0;
        LaurentMonomial mono;
        for (const Term& t : dq.terms()) {
            if (t.word.empty() && t.mono.exponent(var) != 0) {
                if (coeff != 0) throw correspond_error("two loop terms at q" + std::to_string(k));
                coeff = t.coeff;
                mono = t.mono;
            } else {
                rest = rest + eval(AlgebraElement::term(t.coeff, t.mono, t.word));
            }
        }
        if (coeff == 0) throw correspond_error("no loop term at q" + std::to_string(k));
        int eta = mono.exponent(var);
        if (eta != 1 && eta != -1) throw correspond_error("loop term with |exponent| != 1");
        Value others = Value::of_int(F_, coeff);
        for (auto& [v, e] : mono.exps)
            if (v != var) others = others * st_.tval[v].pow(e);
        if (rest.is_zero()) throw correspond_error("cusp equation forces eps(t)=0 at q" + std::to_string(k));
        // coeff * others * eps(t_k)^eta + rest = 0
        st_.tval[var] = ((-rest) * others.inverse()).pow(eta);
    }

    int dip_begin_column(int gap) const {
        if (gap == 0) {
            int at = 0;
            while (at < (int)st_.D.cols.size() && st_.D.cols[at].kind == ColKind::LeftCap) ++at;
            return at;
        }
        return st_.D.gens[gap - 1].col + 1; // right after c_gap
    }

    DipPush do_push(int begin, int done, int gap, int k, int l, const Value& x) {
        DipPush pr = insert_push(st_.D, begin, done, gap, k, l);
        st_.gval.push_back(Value::zero(F_));
        st_.gval.push_back(Value::zero(F_));
        st_.D.finalize();
        dip_height_[pr.b] = k - l;
        dip_height_[pr.a] = k - l;

        const AlgebraElement& db = st_.D.differential(pr.b);
        Value uval = Value::zero(F_);
        AlgebraElement v;
        bool found = false;
        for (const Term& t : db.terms()) {
            bool has_a = std::find(t.word.begin(), t.word.end(), pr.a) != t.word.end();
            if (t.word.size() == 1 && t.word[0] == pr.a) {
                if (found) throw correspond_error("two bigon terms in db");
                found = true;
                uval = Value::of_int(F_, t.coeff) * eval_mono(t.mono);
            } else if (has_a) {
                throw correspond_error("composite a-term in db");
            } else {
                v = v + AlgebraElement::term(t.coeff, t.mono, t.word);
            }
        }
        if (!found) throw correspond_error("push without bigon");
        if (!x.is_zero() && !rho_ok(st_.D.gens[pr.b].grading))
            throw correspond_error("ungraded dip value requested");
        st_.gval[pr.b] = x;
        st_.gval[pr.a] = -(uval.inverse() * eval(v));
        if (!x.is_zero()) apply_corrections(pr, k - l, begin, done + 1, uval, x);
        return pr;
    }

    // Type II transport: choosing eps(b) = x adjusts every generator above the
    // move whose differential has terms through the new crossing a.
    void apply_corrections(const DipPush& pr, int height, int begin, int count, const Value& uval,
                           const Value& x) {
        int end = begin + 2 * count;
        Value uinv = uval.inverse();
        for (size_t y = 0; y < st_.D.gens.size(); ++y) {
            if ((GenId)y == pr.a || (GenId)y == pr.b) continue;
            int col = st_.D.gens[y].col;
            if (col < 0 || col < begin) continue;
            if (col < end) {
                auto it = dip_height_.find((GenId)y);
                if (it != dip_height_.end() && it->second <= height) continue;
            }
            Value delta = Value::zero(F_);
            for (const Term& t : st_.D.differential((GenId)y).terms()) {
                int idx = -1, cnt = 0;
                for (int i = 0; i < (int)t.word.size(); ++i)
                    if (t.word[i] == pr.a) {
                        idx = i;
                        ++cnt;
                    }
                if (cnt == 0) continue;
                if (cnt > 1) throw correspond_error("a appears twice in a term");
                int parity = 0;
                Value qv = Value::one(F_), rv = Value::one(F_);
                for (int i = 0; i < idx; ++i) {
                    if (t.word[i] == pr.b) throw correspond_error("a together with its b");
                    parity ^= st_.D.gens[t.word[i]].grading & 1;
                    qv = qv * st_.gval[t.word[i]];
                }
                for (int i = idx + 1; i < (int)t.word.size(); ++i) {
                    if (t.word[i] == pr.b) throw correspond_error("a together with its b");
                    rv = rv * st_.gval[t.word[i]];
                }
                Value term = Value::of_int(F_, t.coeff) * eval_mono(t.mono) * qv * x * rv;
                delta = delta + (parity ? -term : term);
            }
            if (!delta.is_zero()) st_.gval[y] = st_.gval[y] + uinv * delta;
        }
    }

    void process_dip(int gap) {
        EngState snap = st_;
        auto order = push_order(st_.D.strands);
        std::map<int, Value> forced;
        std::vector<DipPush> pushes;

        auto run_all = [&](const std::map<int, Value>& fx) {
            st_ = snap;
            dip_height_.clear();
            pushes.clear();
            int begin = dip_begin_column(gap);
            for (int ord = 0; ord < (int)order.size(); ++ord) {
                auto [k, l] = order[ord];
                auto it = fx.find(ord);
                Value x = it == fx.end() ? Value::zero(F_) : it->second;
                pushes.push_back(do_push(begin, ord, gap, k, l, x));
            }
        };

        auto first_violation = [&]() -> int {
            for (int ord = 0; ord < (int)order.size(); ++ord) {
                auto [k, l] = order[ord];
                bool ruled = state_[k - 1] == l;
                bool nz = !st_.gval[pushes[ord].a].is_zero();
                if (ruled && !nz)
                    throw correspond_error("ruled pair (" + std::to_string(k) + "," +
                                           std::to_string(l) + ") unaugmented in dip " +
                                           std::to_string(gap));
                if (!ruled && nz) return ord;
            }
            return -1;
        };

        for (int iter = 0;; ++iter) {
            if (iter > 2 * (int)order.size())
                throw correspond_error("dip solver failed to converge at dip " + std::to_string(gap));
            run_all(forced);
            int bad = first_violation();
            if (bad < 0) break;
            Value v0 = st_.gval[pushes[bad].a];
            GenId target_name_gen = pushes[bad].a;
            bool fixed = false;
            for (int s = (int)order.size() - 1; s >= 0 && !fixed; --s) {
                if (forced.count(s) || s == bad) continue;
                if (!rho_ok(st_.D.gens[pushes[s].b].grading)) continue;
                std::map<int, Value> probe = forced;
                probe[s] = Value::one(F_);
                run_all(probe);
                Value v1 = st_.gval[pushes[bad].a];
                if (v1 == v0) continue;
                // affine guess, verified by replay
                Value xg = v0 * (v0 - v1).inverse();
                probe[s] = xg;
                run_all(probe);
                if (st_.gval[pushes[bad].a].is_zero()) {
                    forced = probe;
                    fixed = true;
                    plan_.events.push_back(
                        {"solve", st_.D.gens[pushes[s].b].name + " = " + xg.str() + " zeroing " +
                                      st_.D.gens[target_name_gen].name});
                    break;
                }
                if (F_.is_finite()) {
                    for (int64_t c = 0; c < F_.p && !fixed; ++c) {
                        probe[s] = Value::of_int(F_, c);
                        run_all(probe);
                        if (st_.gval[pushes[bad].a].is_zero()) {
                            forced = probe;
                            fixed = true;
                            plan_.events.push_back({"solve", st_.D.gens[pushes[s].b].name + " = " +
                                                                 probe[s].str()});
                        }
                    }
                }
                if (!fixed) {
                    probe.erase(s);
                    run_all(probe);
                }
            }
            if (!fixed)
                throw correspond_error("Property (R) violation at dip " + std::to_string(gap) +
                                       " generator " + st_.D.gens[target_name_gen].name);
        }

        for (auto& p : pushes) {
            BuildEvent ev;
            ev.kind = BuildEvent::Kind::Push;
            ev.gap = gap;
            ev.push = p;
            log_.push_back(ev);
        }
        validate(mode_ == Mode::ByRuling);
    }

    void process_crossing(int j) {
        int p = front_.word[j - 1];
        GenId cj = (GenId)(j - 1);
        if (state_[p - 1] == p + 1)
            throw correspond_error("paired strands cross at c" + std::to_string(j) +
                                   "; input is not an augmentation of a knot ruling");
        bool sw;
        if (mode_ == Mode::ByValue)
            sw = !st_.gval[cj].is_zero() && switch_is_normal(state_, p);
        else
            sw = given_->is_switch(j - 1);
        configs_[j - 1] = classify_configuration(front_, ofront_, state_, j - 1, sw);
        if (sw) switches_.push_back(j - 1);

        const std::string& cfg = configs_[j - 1];
        if (sw || !st_.gval[cj].is_zero()) {
            // designated nonzero lattice values for the dip right of c_j
            int X = state_[p - 1], Y = state_[p];
            if (cfg.size() >= 3) {
                std::string pat = cfg.substr(cfg.size() - 3);
                if (pat == "(a)") {
                    knobs_[j].push_back({p + 1, p});
                } else if (pat == "(b)" || pat == "(c)") {
                    knobs_[j].push_back({std::max(X, Y), std::min(X, Y)});
                    knobs_[j].push_back({p + 1, p});
                } else if (pat == "(e)" || pat == "(f)") {
                    knobs_[j].push_back({std::max(X, Y), std::min(X, Y)});
                }
            }
        }
        if (sw) {
            // section 3 base-point schedule (the pair insertions for negative
            // configurations keep the count parity; their walks cancel)
            if (cfg == "+(a)" || cfg == "+(b)") {
                add_walk_point(j, p, true);
            } else if (cfg == "+(c)") {
                add_walk_point(j, p + 1, true);
            } else if (cfg == "-(a)") {
                add_walk_point(j, p + 1, false);
                add_walk_point(j, p + 1, false);
            } else if (cfg == "-(b)") {
                add_companion_point(j, state_[p]); // companion of the upper strand
                add_walk_point(j, p + 1, false);
                add_walk_point(j, p + 1, false);
            } else if (cfg == "-(c)") {
                add_companion_point(j, state_[p - 1]);
                add_walk_point(j, p, false);
                add_walk_point(j, p, false);
            }
        }
        if (!sw) state_ = conj(state_, p);
        states_[j] = state_;
    }

    // Adds a base point at the right cusp reached by following the strand
    // entering c_j at position `enter_pos`, then walks it back.  `thru` walks
    // through c_j itself (the point ends just left of it), flipping every
    // crossing passed; paired insertions call this twice so their flips cancel.
    void add_walk_point(int j, int enter_pos, bool thru) {
        GenId cj = (GenId)(j - 1);
        int col = st_.D.gens[cj].col;
        int target_col, target_pos;
        if (thru) {
            target_col = col;
            target_pos = enter_pos;
        } else {
            target_col = col + 1;
            target_pos = enter_pos == front_.word[j - 1] ? enter_pos + 1 : enter_pos - 1;
        }
        place_point(target_col, target_pos);
    }

    void add_companion_point(int j, int companion_pos) {
        GenId cj = (GenId)(j - 1);
        place_point(st_.D.gens[cj].col + 1, companion_pos);
    }

    // Shared placement: trace right to a cusp, create the variable there
    // (flipping the cusp's t), insert the column at the target and flip every
    // crossing the walk passed.
    void place_point(int target_col, int target_pos) {
        int slice = target_col, pos = target_pos, dir = 1;
        std::vector<GenId> passed;
        int cusp = -1;
        for (;;) {
            const Column& c = st_.D.cols[slice];
            if (c.kind == ColKind::Cross && (pos == c.pos || pos == c.pos + 1)) {
                passed.push_back(c.gen);
                pos = pos == c.pos ? c.pos + 1 : c.pos;
                ++slice;
            } else if (c.kind == ColKind::RightCap && (pos == c.pos || pos == c.pos + 1)) {
                cusp = c.cusp;
                break;
            } else {
                ++slice;
            }
        }
        int var = (int)st_.D.tvars.size();
        st_.D.tvars.push_back({"s" + std::to_string(var - front_.m + 1), 0});
        st_.tval.push_back(-Value::one(F_));
        st_.tval[cusp - 1] = -st_.tval[cusp - 1];
        plan_.events.push_back({"add", st_.D.tvars[var].name + " at cusp " + std::to_string(cusp) +
                                           ", eps(t" + std::to_string(cusp) + ") flips"});
        for (GenId g : passed) {
            st_.gval[g] = -st_.gval[g];
            plan_.events.push_back({"flip", st_.D.gens[g].name});
        }
        st_.D.cols.insert(st_.D.cols.begin() + target_col,
                          {ColKind::BasePoint, target_pos, -1, var, 0});
        st_.D.finalize();
        BuildEvent ev;
        ev.kind = BuildEvent::Kind::Point;
        ev.var = var;
        ev.cusp = cusp;
        log_.push_back(ev);
    }

    void insert_dip_structural(int gap) {
        int begin = dip_begin_column(gap);
        int done = 0;
        for (auto [k, l] : push_order(st_.D.strands)) {
            DipPush p = insert_push(st_.D, begin, done++, gap, k, l);
            st_.gval.push_back(Value::zero(F_));
            st_.gval.push_back(Value::zero(F_));
            BuildEvent ev;
            ev.kind = BuildEvent::Kind::Push;
            ev.gap = gap;
            ev.push = p;
            log_.push_back(ev);
        }
        st_.D.finalize();
    }

    // Section 4 value assignment: on the finished diagram the unknowns are the
    // ruled a-values and the designated b-knobs; every eps(d b) = 0 equation
    // that isolates one of them linearly gets solved, until the dip closes.
    void solve_dip_values(int gap) {
        std::vector<DipPush> pushes;
        for (auto& ev : log_)
            if (ev.kind == BuildEvent::Kind::Push && ev.gap == gap) pushes.push_back(ev.push);
        std::set<GenId> unknown;
        for (auto& p : pushes) {
            if (states_[gap][p.k - 1] == p.l) unknown.insert(p.a);
            for (auto& [kk, ll] : knobs_[gap])
                if (p.k == kk && p.l == ll) unknown.insert(p.b);
        }
        while (!unknown.empty()) {
            bool progress = false;
            for (auto& p : pushes) {
                Value coeff = Value::zero(F_);
                Value con = Value::zero(F_);
                GenId freevar = -1;
                bool usable = true;
                for (const Term& t : st_.D.differential(p.b).terms()) {
                    GenId tu = -1;
                    int tu_count = 0;
                    Value prod = Value::of_int(F_, t.coeff) * eval_mono(t.mono);
                    for (GenId w : t.word) {
                        if (unknown.count(w)) {
                            tu = w;
                            ++tu_count;
                        } else {
                            prod = prod * st_.gval[w];
                        }
                    }
                    if (tu_count == 0) {
                        con = con + prod;
                    } else if (tu_count == 1 && (freevar < 0 || freevar == tu)) {
                        freevar = tu;
                        coeff = coeff + prod;
                    } else {
                        usable = false;
                        break;
                    }
                }
                if (!usable || freevar < 0 || coeff.is_zero()) continue;
                if (st_.D.gens[freevar].cls == GenClass::DipB &&
                    !rho_ok(st_.D.gens[freevar].grading))
                    throw correspond_error("construction needs an ungraded lattice value");
                st_.gval[freevar] = -(con * coeff.inverse());
                unknown.erase(freevar);
                progress = true;
            }
            if (!progress)
                throw correspond_error("dip value system did not resolve at dip " +
                                       std::to_string(gap));
        }
        // Property (R) sanity for this dip
        for (auto& p : pushes) {
            bool ruled = states_[gap][p.k - 1] == p.l;
            if (ruled == st_.gval[p.a].is_zero())
                throw correspond_error("Property (R) violation at dip " + std::to_string(gap) +
                                       " generator " + st_.D.gens[p.a].name);
        }
    }

    void finish() {
        if (state_ != initial_ruling_state(front_.m))
            throw correspond_error("construction did not close into a ruling");
        int n = (int)front_.word.size();
        if (mode_ == Mode::ByRuling) {
            for (int k = 1; k <= front_.m; ++k) solve_cusp_t((GenId)(n + k - 1), k);
            if (normalize_t) {
                for (int k = 1; k <= front_.m; ++k) {
                    if (st_.tval[k - 1] == -Value::one(F_)) continue;
                    if (st_.tval[k - 1] == Value::one(F_)) {
                        // a fresh -1 base point on the loop flips the cusp value
                        int var = (int)st_.D.tvars.size();
                        st_.D.tvars.push_back({"s" + std::to_string(var - front_.m + 1), 0});
                        st_.tval.push_back(-Value::one(F_));
                        st_.tval[k - 1] = -st_.tval[k - 1];
                        for (int i = 0; i < (int)st_.D.cols.size(); ++i)
                            if (st_.D.cols[i].kind == ColKind::RightCap && st_.D.cols[i].cusp == k) {
                                st_.D.cols.insert(st_.D.cols.begin() + i,
                                                  {ColKind::BasePoint, st_.D.cols[i].pos + 1, -1, var, 0});
                                break;
                            }
                        st_.D.finalize();
                        BuildEvent ev;
                        ev.kind = BuildEvent::Kind::Point;
                        ev.var = var;
                        ev.cusp = k;
                        log_.push_back(ev);
                        plan_.events.push_back({"add", "normalization point at cusp " + std::to_string(k)});
                    }
                }
            }
        }
        validate(false);
    }
};

std::vector<bool> switch_seed(const FrontDiagram& front, const NormalRuling& R) {
    std::vector<bool> seed(front.word.size() + front.m, false);
    for (int j : R.switches) seed[j] = true;
    return seed;
}

} // namespace

CorrespondResult augmentation_to_ruling(const FrontDiagram& front, const Augmentation& aug) {
    CeDga single = dga_of_diagram(resolve(front, BasePointMode::SingleTop));
    if (!is_augmentation(single, aug)) throw correspond_error("input is not an augmentation");
    Engine e(front, aug.field, aug.rho, Engine::Mode::ByValue);
    e.seed_from_single(aug);
    e.run();
    return e.result();
}

CorrespondResult ruling_to_dipped_augmentation(const FrontDiagram& front, const NormalRuling& R,
                                               const FieldSpec& field, int rho) {
    return ruling_to_dipped_augmentation_seeded(front, R, field, rho, switch_seed(front, R));
}

CorrespondResult ruling_to_dipped_augmentation_seeded(const FrontDiagram& front,
                                                      const NormalRuling& R, const FieldSpec& field,
                                                      int rho, const std::vector<bool>& augmented) {
    Engine e(front, field, rho, Engine::Mode::ByRuling);
    e.seed_from_ruling(R, augmented, {});
    e.run();
    return e.result();
}

CorrespondResult construct_odd_variety_augmentation(const FrontDiagram& front, const NormalRuling& R,
                                                    const Value& x, int rho) {
    if (rho % 2 == 0) throw correspond_error("rho must be odd");
    if (x.is_zero()) throw correspond_error("x must be a unit");
    int last = -1;
    for (int j : R.switches)
        if (!R.configs[j].empty() && R.configs[j][0] == '-') last = std::max(last, j);
    if (last < 0) throw correspond_error("ruling is oriented; the construction needs an unoriented one");

    Orientation o = orient(front);
    int p = front.word[last];
    const std::string& cfg = R.configs[last];
    int strand = cfg == "-(b)" ? p : R.states[last][p]; // companion of the upper strand for -(a),-(c)
    int sgn = o.at(last + 1, strand);
    std::map<int, Value> overrides;
    overrides[last] = x.pow(sgn);

    Engine e(front, x.spec(), rho, Engine::Mode::ByRuling);
    e.normalize_t = false;
    e.seed_from_ruling(R, switch_seed(front, R), overrides);
    e.run();
    return e.result();
}

Augmentation undip_augmentation(const CorrespondResult& res) {
    const FieldSpec& F = res.dipped_aug.field;
    EngState st{res.dipped, res.dipped_aug.values, res.dipped_aug.tvalues};

    auto eval_word = [&](const std::vector<GenId>& w, int from, int to) {
        Value v = Value::one(F);
        for (int i = from; i < to; ++i) v = v * st.gval[w[i]];
        return v;
    };
    auto eval_mono = [&](const LaurentMonomial& m) {
        Value v = Value::one(F);
        for (auto& [var, e] : m.exps) v = v * st.tval[var].pow(e);
        return v;
    };
    auto eval_elem = [&](const AlgebraElement& e) {
        return e.evaluate([&](GenId g) { return st.gval[g]; }, [&](int v) { return st.tval[v]; }, F);
    };

    // heights of dip generators, for the transport class split
    std::map<GenId, int> height;
    std::map<int, std::vector<DipPush>> dip_pushes;
    for (auto& ev : res.log)
        if (ev.kind == BuildEvent::Kind::Push) {
            height[ev.push.b] = ev.push.k - ev.push.l;
            height[ev.push.a] = ev.push.k - ev.push.l;
            dip_pushes[ev.gap].push_back(ev.push);
        }

    for (auto it = res.log.rbegin(); it != res.log.rend(); ++it) {
        if (it->kind == BuildEvent::Kind::Point) {
            // walk the point back to its cusp and merge it there
            int var = it->var;
            int colpt = -1;
            for (int i = 0; i < (int)st.D.cols.size(); ++i)
                if (st.D.cols[i].kind == ColKind::BasePoint && st.D.cols[i].var == var) colpt = i;
            if (colpt < 0) throw correspond_error("lost a base point during undip");
            int slice = colpt + 1, pos = st.D.cols[colpt].pos;
            st.D.cols.erase(st.D.cols.begin() + colpt);
            --slice;
            for (;;) {
                const Column& c = st.D.cols[slice];
                if (c.kind == ColKind::Cross && (pos == c.pos || pos == c.pos + 1)) {
                    st.gval[c.gen] = -st.gval[c.gen];
                    pos = pos == c.pos ? c.pos + 1 : c.pos;
                    ++slice;
                } else if (c.kind == ColKind::RightCap && (pos == c.pos || pos == c.pos + 1)) {
                    break;
                } else {
                    ++slice;
                }
            }
            st.tval[it->cusp - 1] = -st.tval[it->cusp - 1];
            if (var != (int)st.D.tvars.size() - 1)
                throw correspond_error("base points must be removed innermost first");
            st.D.tvars.pop_back();
            st.tval.pop_back();
            st.D.finalize();
            continue;
        }

        // undo one push: reverse the transport, then delete the two columns
        const DipPush& pr = it->push;
        const AlgebraElement& db = st.D.differential(pr.b);
        Value uval = Value::zero(F);
        bool found = false;
        for (const Term& t : db.terms())
            if (t.word.size() == 1 && t.word[0] == pr.a) {
                uval = Value::of_int(F, t.coeff) * eval_mono(t.mono);
                found = true;
            }
        if (!found) throw correspond_error("undip: no bigon for " + st.D.gens[pr.b].name);
        Value x = st.gval[pr.b];
        if (!x.is_zero()) {
            // column range of the remaining part of this dip
            int begin = INT32_MAX, end = -1;
            for (auto& q : dip_pushes[it->gap]) {
                for (GenId g : {q.b, q.a}) {
                    int c = st.D.gens[g].col;
                    if (c >= 0) {
                        begin = std::min(begin, c);
                        end = std::max(end, c + 1);
                    }
                }
            }
            Value uinv = uval.inverse();
            int h = pr.k - pr.l;
            for (size_t y = 0; y < st.D.gens.size(); ++y) {
                if ((GenId)y == pr.a || (GenId)y == pr.b) continue;
                int col = st.D.gens[y].col;
                if (col < 0 || col < begin) continue;
                if (col < end) {
                    auto hy = height.find((GenId)y);
                    if (hy != height.end() && hy->second <= h) continue;
                }
                Value delta = Value::zero(F);
                for (const Term& t : st.D.differential((GenId)y).terms()) {
                    int idx = -1, cnt = 0;
                    for (int i = 0; i < (int)t.word.size(); ++i)
                        if (t.word[i] == pr.a) {
                            idx = i;
                            ++cnt;
                        }
                    if (!cnt) continue;
                    if (cnt > 1) throw correspond_error("a appears twice in a term");
                    int parity = 0;
                    for (int i = 0; i < idx; ++i) parity ^= st.D.gens[t.word[i]].grading & 1;
                    Value term = Value::of_int(F, t.coeff) * eval_mono(t.mono) *
                                 eval_word(t.word, 0, idx) * x * eval_word(t.word, idx + 1, (int)t.word.size());
                    delta = delta + (parity ? -term : term);
                }
                if (!delta.is_zero()) st.gval[y] = st.gval[y] - uinv * delta;
            }
        }
        int ca = st.D.gens[pr.a].col, cb = st.D.gens[pr.b].col;
        st.D.cols.erase(st.D.cols.begin() + std::max(ca, cb));
        st.D.cols.erase(st.D.cols.begin() + std::min(ca, cb));
        st.D.gens[pr.a].col = -1;
        st.D.gens[pr.b].col = -1;
        st.D.finalize();
        st.D.gens[pr.a].col = -1;
        st.D.gens[pr.b].col = -1;
    }

    // sanity: every generator still present satisfies eps(d g) = 0
    for (size_t g = 0; g < st.D.gens.size(); ++g) {
        if (st.D.gens[g].col < 0) continue;
        if (!eval_elem(st.D.differential((GenId)g)).is_zero())
            throw correspond_error("undip produced a non-augmentation at " + st.D.gens[g].name);
    }

    auto validate_all = [&]() {
        for (size_t g = 0; g < st.D.gens.size(); ++g) {
            if (st.D.gens[g].col < 0) continue;
            if (!eval_elem(st.D.differential((GenId)g)).is_zero()) return false;
        }
        return true;
    };

    // walk the lower-cusp base points onto the top loop; passing a crossing
    // multiplies its value by eps(t_k)^{+-1} (the base-point-move isomorphism)
    int m = res.front.m;
    for (int k = 2; k <= m; ++k) {
        int var = k - 1;
        Value tk = st.tval[var];
        bool done = false;
        for (int guard = 0; guard < 8 * (int)st.D.cols.size() && !done; ++guard) {
            int colpt = -1;
            for (int i = 0; i < (int)st.D.cols.size(); ++i)
                if (st.D.cols[i].kind == ColKind::BasePoint && st.D.cols[i].var == var) colpt = i;
            if (colpt < 0) throw correspond_error("lost base point t" + std::to_string(k));
            int pos = st.D.cols[colpt].pos;
            // resting on the loop of the top cusp?
            int next = colpt + 1;
            while (next < (int)st.D.cols.size() && st.D.cols[next].kind == ColKind::BasePoint) ++next;
            if (next < (int)st.D.cols.size() && st.D.cols[next].kind == ColKind::RightCap &&
                st.D.cols[next].cusp == 1 &&
                (pos == st.D.cols[next].pos || pos == st.D.cols[next].pos + 1)) {
                done = true;
                break;
            }
            int d = st.D.dir[colpt][pos - 1];
            Column moving = st.D.cols[colpt];
            st.D.cols.erase(st.D.cols.begin() + colpt);
            int at = colpt; // slice index: the point sits between cols[at-1] and cols[at]
            int newpos = pos;
            for (;;) {
                int idx = d > 0 ? at : at - 1;
                if (idx < 0 || idx >= (int)st.D.cols.size())
                    throw correspond_error("base point walked off the diagram");
                const Column& c = st.D.cols[idx];
                bool hits = newpos == c.pos || newpos == c.pos + 1;
                if (c.kind == ColKind::Cross && hits) {
                    GenId x = c.gen;
                    newpos = newpos == c.pos ? c.pos + 1 : c.pos;
                    moving.pos = newpos;
                    st.D.cols.insert(st.D.cols.begin() + (d > 0 ? idx + 1 : idx), moving);
                    Value old = st.gval[x];
                    st.gval[x] = old * tk;
                    st.D.finalize();
                    if (!validate_all()) {
                        st.gval[x] = old * tk.inverse();
                        if (!validate_all())
                            throw correspond_error("base point move lost the augmentation at " +
                                                   st.D.gens[x].name);
                    }
                    break;
                }
                if (c.kind == ColKind::RightCap && hits) {
                    newpos = newpos == c.pos ? c.pos + 1 : c.pos;
                    d = -1;
                    moving.pos = newpos;
                    st.D.cols.insert(st.D.cols.begin() + idx, moving);
                    st.D.finalize();
                    break;
                }
                if (c.kind == ColKind::LeftCap && hits) {
                    newpos = newpos == c.pos ? c.pos + 1 : c.pos;
                    d = 1;
                    moving.pos = newpos;
                    st.D.cols.insert(st.D.cols.begin() + idx + 1, moving);
                    st.D.finalize();
                    break;
                }
                at = d > 0 ? at + 1 : at - 1;
            }
        }
        if (!done) throw correspond_error("base point walk did not reach the top cusp");
    }

    // consolidate onto the single-base-point DGA
    CeDga single = dga_of_diagram(resolve(res.front, BasePointMode::SingleTop));
    Augmentation out;
    out.field = F;
    out.rho = res.rho;
    out.provenance = Augmentation::Provenance::Constructed;
    out.values.assign(single.gens.size(), Value::zero(F));
    for (size_t g = 0; g < single.gens.size(); ++g)
        out.values[g] = st.gval[st.D.find_gen(single.gens[g].name)];
    Value t = Value::one(F);
    for (auto& v : st.tval) t = t * v;
    out.tvalues = {t};
    for (size_t g = 0; g < single.gens.size(); ++g)
        if (!eval_element(single, out, single.diff[g]).is_zero())
            throw correspond_error("undipped values fail eps(d " + single.gens[g].name +
                                   ") = 0 with eps(t) = " + t.str());
    if (!is_augmentation(single, out))
        throw correspond_error("undipped values fail the augmentation equations");
    return out;
}

bool property_r_holds(const CorrespondResult& res) {
    for (auto& ev : res.log) {
        if (ev.kind != BuildEvent::Kind::Push) continue;
        bool ruled = res.ruling.states[ev.gap][ev.push.k - 1] == ev.push.l;
        bool nz = !res.dipped_aug.values[ev.push.a].is_zero();
        if (ruled != nz) return false;
    }
    return true;
}

int base_point_count(const CorrespondResult& res) {
    int n = 0;
    for (auto& c : res.dipped.cols)
        if (c.kind == ColKind::BasePoint) ++n;
    return n;
}

} // namespace legaug
