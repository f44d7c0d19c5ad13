#include "legaug/augment.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <atomic>
#include <thread>

#include "json.hpp"

namespace legaug {

Value Augmentation::t_product() const {
    Value v = Value::one(field);
    for (auto& t : tvalues) v = v * t;
    return v;
}

std::string Augmentation::to_json(const CeDga& dga) const {
    nlohmann::json j;
    j["field"] = field.str();
    j["rho"] = rho;
    nlohmann::json vals;
    for (size_t g = 0; g < values.size(); ++g) vals[dga.gens[g].name] = values[g].str();
    j["values"] = vals;
    nlohmann::json ts;
    for (size_t i = 0; i < tvalues.size(); ++i) ts[dga.tvars[i].name] = tvalues[i].str();
    j["t"] = ts;
    return j.dump();
}

bool rho_divides(int rho, int grading, int modulus) {
    if (rho == 0) return modulus == 0 ? grading == 0 : grading % modulus == 0;
    return ((grading % rho) + rho) % rho == 0;
}

bool gen_eligible(const CeDga& dga, int rho, GenId g) {
    if (rho != 0 && dga.modulus != 0 && dga.modulus % rho != 0)
        throw augment_error("rho must divide 2r");
    return rho_divides(rho, dga.gens[g].grading, dga.modulus);
}

Value eval_element(const CeDga& dga, const Augmentation& a, const AlgebraElement& e) {
    (void)dga;
    return e.evaluate([&](GenId g) { return a.values[g]; }, [&](int v) { return a.tvalues[v]; },
                      a.field);
}

bool is_augmentation(const CeDga& dga, const Augmentation& a) {
    if (a.values.size() != dga.gens.size() || a.tvalues.size() != dga.tvars.size()) return false;
    for (auto& t : a.tvalues)
        if (t.is_zero()) return false;
    for (size_t g = 0; g < dga.gens.size(); ++g)
        if (!gen_eligible(dga, a.rho, (GenId)g) && !a.values[g].is_zero()) return false;
    for (size_t g = 0; g < dga.gens.size(); ++g)
        if (!eval_element(dga, a, dga.diff[g]).is_zero()) return false;
    return true;
}

uint64_t default_budget() {
    if (const char* env = std::getenv("LEGAUG_BUDGET")) {
        uint64_t v = std::strtoull(env, nullptr, 10);
        if (v > 0) return v;
    }
    return 100000000ULL; // 1e8 evaluations
}

namespace {

struct SearchPlan {
    // slot order: t variables first, then eligible generators
    int nt = 0;
    std::vector<GenId> elig;
    // for each generator, the last slot its differential depends on (-1: none)
    std::vector<std::vector<int>> check_after; // per slot, generators ready to check
    std::vector<int> check_upfront;
};

SearchPlan make_plan(const CeDga& dga, int rho) {
    SearchPlan plan;
    plan.nt = (int)dga.tvars.size();
    std::vector<int> slot_of_gen(dga.gens.size(), -1);
    for (size_t g = 0; g < dga.gens.size(); ++g)
        if (gen_eligible(dga, rho, (GenId)g)) {
            slot_of_gen[g] = plan.nt + (int)plan.elig.size();
            plan.elig.push_back((GenId)g);
        }
    int nslots = plan.nt + (int)plan.elig.size();
    plan.check_after.assign(nslots, {});
    for (size_t g = 0; g < dga.gens.size(); ++g) {
        int dep = -1;
        for (const Term& t : dga.diff[g].terms()) {
            for (auto& [v, e] : t.mono.exps) dep = std::max(dep, v);
            for (GenId w : t.word)
                if (slot_of_gen[w] >= 0) dep = std::max(dep, slot_of_gen[w]);
        }
        if (dep < 0)
            plan.check_upfront.push_back((int)g);
        else
            plan.check_after[dep].push_back((int)g);
    }
    return plan;
}

} // namespace

std::vector<Augmentation> enumerate_augmentations(const CeDga& dga, const FieldSpec& field, int rho,
                                                  uint64_t budget, int jobs) {
    if (!field.is_finite())
        throw augment_error("enumeration needs a finite field; over Q only is_augmentation is offered");
    SearchPlan plan = make_plan(dga, rho);
    int64_t p = field.p;

    long double space = 1;
    for (int i = 0; i < plan.nt; ++i) space *= (long double)(p - 1);
    for (size_t i = 0; i < plan.elig.size(); ++i) space *= (long double)p;
    if (space > (long double)budget)
        throw augment_error("search space exceeds budget of " + std::to_string(budget) +
                            " evaluations");

    Augmentation proto;
    proto.field = field;
    proto.rho = rho;
    proto.values.assign(dga.gens.size(), Value::zero(field));
    proto.tvalues.assign(dga.tvars.size(), Value::one(field));

    // trivially-checkable differentials: reject everything early when nonzero
    for (int g : plan.check_upfront)
        if (!eval_element(dga, proto, dga.diff[g]).is_zero()) return {};

    int nslots = plan.nt + (int)plan.elig.size();

    auto search = [&](Augmentation& cur, int from_slot, std::vector<Augmentation>& out,
                      auto&& self) -> void {
        if (from_slot == nslots) {
            out.push_back(cur);
            return;
        }
        bool is_t = from_slot < plan.nt;
        int64_t lo = is_t ? 1 : 0;
        for (int64_t v = lo; v < p; ++v) {
            Value val = Value::of_int(field, v);
            if (is_t)
                cur.tvalues[from_slot] = val;
            else
                cur.values[plan.elig[from_slot - plan.nt]] = val;
            bool ok = true;
            for (int g : plan.check_after[from_slot])
                if (!eval_element(dga, cur, dga.diff[g]).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok) self(cur, from_slot + 1, out, self);
        }
        if (is_t)
            cur.tvalues[from_slot] = Value::one(field);
        else
            cur.values[plan.elig[from_slot - plan.nt]] = Value::zero(field);
    };

    if (jobs <= 1 || nslots == 0) {
        std::vector<Augmentation> out;
        Augmentation cur = proto;
        search(cur, 0, out, search);
        return out;
    }

    // partition on the first slot, keep per-branch output order
    bool is_t0 = plan.nt > 0;
    int64_t lo = is_t0 ? 1 : 0;
    std::vector<std::vector<Augmentation>> buckets(p - lo);
    std::vector<std::thread> workers;
    std::atomic<int64_t> next{lo};
    int nworkers = std::min<int>(jobs, (int)(p - lo));
    for (int w = 0; w < nworkers; ++w) {
        workers.emplace_back([&]() {
            for (;;) {
                int64_t v = next.fetch_add(1);
                if (v >= p) break;
                Augmentation cur = proto;
                if (is_t0)
                    cur.tvalues[0] = Value::of_int(field, v);
                else
                    cur.values[plan.elig[0]] = Value::of_int(field, v);
                bool ok = true;
                for (int g : plan.check_after[0])
                    if (!eval_element(dga, cur, dga.diff[g]).is_zero()) {
                        ok = false;
                        break;
                    }
                if (ok) search(cur, 1, buckets[v - lo], search);
            }
        });
    }
    for (auto& t : workers) t.join();
    std::vector<Augmentation> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<int64_t> augmentation_variety(const CeDga& dga, const FieldSpec& field, int rho,
                                          uint64_t budget, int jobs) {
    std::set<int64_t> vals;
    for (auto& a : enumerate_augmentations(dga, field, rho, budget, jobs))
        vals.insert(a.t_product().residue());
    return {vals.begin(), vals.end()};
}

} // namespace legaug
