#include "legaug/resolved.hpp"

#include <algorithm>
#include <cassert>

namespace legaug {

namespace {

struct St {
    int slice;
    int pos;
    int dir;
    bool operator==(const St&) const = default;
};

// One trace step along the knot; returns the Maslov delta (+1 when the walk
// turns from a lower strand onto the upper one at a cusp).
int step(const std::vector<Column>& cols, St& s) {
    if (s.dir > 0) {
        const Column& c = cols[s.slice];
        if (c.kind == ColKind::Cross && (s.pos == c.pos || s.pos == c.pos + 1)) {
            s.pos = s.pos == c.pos ? c.pos + 1 : c.pos;
            ++s.slice;
            return 0;
        }
        if (c.kind == ColKind::RightCap && (s.pos == c.pos || s.pos == c.pos + 1)) {
            // the loop crossing q swapped the strands, so the lower teardrop
            // arc is the continuation of the upper front strand
            int partner = s.pos == c.pos ? c.pos + 1 : c.pos;
            int delta = partner > s.pos ? -1 : 1;
            s.pos = partner;
            s.dir = -1;
            return delta;
        }
        ++s.slice;
        return 0;
    }
    const Column& c = cols[s.slice - 1];
    if (c.kind == ColKind::Cross && (s.pos == c.pos || s.pos == c.pos + 1)) {
        s.pos = s.pos == c.pos ? c.pos + 1 : c.pos;
        --s.slice;
        return 0;
    }
    if (c.kind == ColKind::LeftCap && (s.pos == c.pos || s.pos == c.pos + 1)) {
        int partner = s.pos == c.pos ? c.pos + 1 : c.pos;
        int delta = partner > s.pos ? 1 : -1;
        s.pos = partner;
        s.dir = 1;
        return delta;
    }
    --s.slice;
    return 0;
}

} // namespace

GenId ResolvedDiagram::find_gen(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return (GenId)i;
    throw diagram_error("no generator named " + name);
}

int ResolvedDiagram::find_tvar(const std::string& name) const {
    for (size_t i = 0; i < tvars.size(); ++i)
        if (tvars[i].name == name) return (int)i;
    throw diagram_error("no variable named " + name);
}

void ResolvedDiagram::finalize() {
    disks_ready_ = false;
    disks_.clear();
    diff_.clear();

    birth.assign(strands, -1);
    death.assign(strands, -1);
    for (int i = 0; i < (int)cols.size(); ++i) {
        Column& c = cols[i];
        if (c.gen >= 0) gens[c.gen].col = i;
        if (c.kind == ColKind::LeftCap) {
            birth[c.pos - 1] = i;
            birth[c.pos] = i;
        } else if (c.kind == ColKind::RightCap) {
            death[c.pos - 1] = i;
            death[c.pos] = i;
        }
    }
    for (int p = 0; p < strands; ++p)
        if (birth[p] < 0 || death[p] < 0) throw diagram_error("strand without caps");

    dir.assign(slices(), std::vector<int8_t>(strands, 0));
    mu.assign(slices(), std::vector<int>(strands, 0));

    // orientation trace from the bottom strand of the leftmost slice
    int total_edges = 0;
    for (int p = 0; p < strands; ++p) total_edges += death[p] - birth[p];
    St start{birth[0] + 1, 1, 1};
    St s = start;
    int visited = 0, down = 0, up = 0;
    do {
        dir[s.slice][s.pos - 1] = (int8_t)s.dir;
        ++visited;
        int delta = step(cols, s);
        if (delta != 0) (delta < 0 ? down : up)++;
    } while (!(s == start));
    if (visited != total_edges) throw diagram_error("diagram traces to more than one component");
    r = (down - up) / 2;
    modulus = 2 * (r < 0 ? -r : r);

    // Maslov walk from the primary base point, following the orientation
    int bp_col = -1;
    for (int i = 0; i < (int)cols.size(); ++i)
        if (cols[i].kind == ColKind::BasePoint && cols[i].var == 0) bp_col = i;
    if (bp_col < 0) throw diagram_error("no primary base point");
    {
        int q = cols[bp_col].pos;
        int d = dir[bp_col][q - 1];
        St ms = d > 0 ? St{bp_col + 1, q, 1} : St{bp_col, q, -1};
        St mstart = ms;
        int val = 0;
        do {
            mu[ms.slice][ms.pos - 1] = val;
            val += step(cols, ms);
        } while (!(ms == mstart));
        if (val != 2 * r && val != -2 * r)
            throw diagram_error("Maslov residual " + std::to_string(val) + " != +-2r");
    }

    // gradings
    for (int i = 0; i < (int)cols.size(); ++i) {
        const Column& c = cols[i];
        if (c.kind != ColKind::Cross) continue;
        GenInfo& g = gens[c.gen];
        int lo = mu[i][c.pos - 1], hi = mu[i][c.pos];
        g.grading = g.cls == GenClass::DipA ? lo - hi - 1 : hi - lo;
        if (g.cls == GenClass::Cusp) {
            // exactly 1 unless the base-point jump sits on this cusp's loop,
            // where the Z-lift shifts by 2r; always 1 mod 2r
            bool ok = g.grading == 1 || (modulus > 0 && ((g.grading - 1) % modulus) == 0);
            if (!ok) throw diagram_error("cusp crossing " + g.name + " has grading != 1 mod 2r");
        }
        // even grading must match a positive (parallel-strand) crossing
        bool parallel = dir[i][c.pos - 1] == dir[i][c.pos];
        bool even = ((g.grading % 2) + 2) % 2 == 0;
        bool positive = g.cls == GenClass::DipA ? !parallel : parallel;
        if (even != positive) throw diagram_error("grading/sign parity mismatch at " + g.name);
    }
    if (!tvars.empty()) {
        tvars[0].grading = -2 * r;
        for (size_t i = 1; i < tvars.size(); ++i) tvars[i].grading = 0;
    }
}

// Orientation signs, a lookup over (crossing flavor, degree parity, quadrant).
// Odd-degree crossings carry +1 everywhere; even-degree crossings have two
// -1 quadrants.  Dip crossings take their own assignments (the middle panel
// of the sign figure): the b-lattice one is the original table negated, a
// gauge that d^2 = 0 cannot see but the pinned dipped-diagram values can.
// The whole table is pinned by the right-trefoil differentials and the
// published dipped-trefoil augmentation; d^2 = 0 over random plats and dips
// exercises every case.
int ResolvedDiagram::orientation_sign(GenId g, int quadrant) const {
    const GenInfo& gi = gens[g];
    bool odd = ((gi.grading % 2) + 2) % 2 == 1;
    if (odd) return 1;
    static const int std_even[4] = {+1, -1, -1, +1}; // N,S,E,W
    static const int b_even[4] = {-1, +1, +1, -1};
    static const int a_even[4] = {+1, -1, +1, -1};
    switch (gi.cls) {
    case GenClass::DipA:
        return a_even[quadrant];
    case GenClass::DipB:
        return b_even[quadrant];
    default:
        return std_even[quadrant];
    }
}

namespace {

constexpr int QN = 0, QS = 1, QE = 2, QW = 3;

struct CornerRec {
    GenId g;
    int where; // 0 = left end, 1 = lower boundary, 2 = right end, 3 = upper boundary
    int col;
};

struct SwState {
    int lo = 0, hi = 0;
    GenId pos_corner = -1;
    int sign = 1;
    std::vector<CornerRec> corners;
    LaurentMonomial mono;
};

} // namespace

void ResolvedDiagram::enumerate_disks_impl() const {
    disks_.clear();

    auto complete = [&](const SwState& st) {
        // CCW cycle: right end, upper boundary right-to-left, left end,
        // lower boundary left-to-right.
        std::vector<CornerRec> cyc = st.corners;
        std::stable_sort(cyc.begin(), cyc.end(), [](const CornerRec& a, const CornerRec& b) {
            auto stage = [](const CornerRec& c) { return c.where == 2 ? 0 : c.where == 3 ? 1 : c.where == 0 ? 2 : 3; };
            if (stage(a) != stage(b)) return stage(a) < stage(b);
            if (a.where == 3) return a.col > b.col; // upper: decreasing x
            return a.col < b.col;                   // lower: increasing x
        });
        size_t pidx = 0;
        for (size_t i = 0; i < cyc.size(); ++i)
            if (cyc[i].g == st.pos_corner) pidx = i;
        Disk d;
        d.pos_corner = st.pos_corner;
        d.sign = st.sign;
        d.mono = st.mono;
        for (size_t i = 1; i < cyc.size(); ++i) d.word.push_back(cyc[(pidx + i) % cyc.size()].g);
        disks_.push_back(std::move(d));
    };

    // Depth-first sweep; branches only at optional side corners, so the state
    // space stays small.
    std::function<void(int, SwState)> run = [&](int from, SwState st) {
        for (int j = from; j < (int)cols.size(); ++j) {
            const Column& c = cols[j];
            switch (c.kind) {
            case ColKind::LeftCap: {
                if (st.hi < c.pos || st.lo > c.pos + 1) break;
                return; // disks cannot wrap around or contain a left cap
            }
            case ColKind::RightCap: {
                if (st.lo == c.pos && st.hi == c.pos + 1) {
                    if (st.pos_corner >= 0) complete(st);
                    return;
                }
                if (st.hi < c.pos || st.lo > c.pos + 1) break;
                return;
            }
            case ColKind::BasePoint: {
                int q = c.pos;
                if (st.lo == q || st.hi == q) {
                    int d = dir[j][q - 1];
                    // lower boundary is traversed rightward, upper leftward
                    int e = st.lo == q ? (d > 0 ? 1 : -1) : (d < 0 ? 1 : -1);
                    st.mono = st.mono * LaurentMonomial::var(c.var, e);
                }
                break;
            }
            case ColKind::Cross: {
                int p = c.pos;
                if (st.hi < p || st.lo > p + 1) break;
                if (st.lo < p && st.hi > p + 1) break; // crossing interior to the disk
                bool at = gens[c.gen].cls == GenClass::DipA;
                if (st.lo == p && st.hi == p + 1) {
                    // terminal wedge covering the W quadrant
                    if (at) {
                        if (st.pos_corner < 0) return;
                        st.sign *= orientation_sign(c.gen, QW);
                        st.corners.push_back({c.gen, 2, j});
                        complete(st);
                    } else {
                        if (st.pos_corner >= 0) return;
                        st.pos_corner = c.gen;
                        st.sign *= orientation_sign(c.gen, QW);
                        st.corners.push_back({c.gen, 2, j});
                        complete(st);
                    }
                    return;
                }
                if (st.lo == p) {
                    st.lo = p + 1;
                    break;
                }
                if (st.hi == p + 1) {
                    st.hi = p;
                    break;
                }
                if (st.lo == p + 1) {
                    // optional corner covering the N quadrant, on the lower boundary
                    bool corner_ok = at ? st.pos_corner < 0 : true;
                    if (corner_ok) {
                        SwState cs = st;
                        cs.sign *= orientation_sign(c.gen, QN);
                        cs.corners.push_back({c.gen, 1, j});
                        if (at) cs.pos_corner = c.gen;
                        run(j + 1, std::move(cs));
                    }
                    st.lo = p;
                    break;
                }
                if (st.hi == p) {
                    // optional corner covering the S quadrant, on the upper boundary
                    bool corner_ok = at ? st.pos_corner < 0 : true;
                    if (corner_ok) {
                        SwState cs = st;
                        cs.sign *= orientation_sign(c.gen, QS);
                        cs.corners.push_back({c.gen, 3, j});
                        if (at) cs.pos_corner = c.gen;
                        run(j + 1, std::move(cs));
                    }
                    st.hi = p + 1;
                    break;
                }
                break;
            }
            }
        }
    };

    for (int i = 0; i < (int)cols.size(); ++i) {
        const Column& c = cols[i];
        if (c.kind == ColKind::LeftCap) {
            SwState st;
            st.lo = c.pos;
            st.hi = c.pos + 1;
            run(i + 1, std::move(st));
        } else if (c.kind == ColKind::Cross) {
            SwState st;
            st.lo = c.pos;
            st.hi = c.pos + 1;
            st.sign = orientation_sign(c.gen, QE);
            st.corners.push_back({c.gen, 0, i});
            if (gens[c.gen].cls != GenClass::DipA) st.pos_corner = c.gen;
            run(i + 1, std::move(st));
        }
    }

    diff_.assign(gens.size(), AlgebraElement::zero());
    for (const Disk& d : disks_)
        diff_[d.pos_corner] = diff_[d.pos_corner] + AlgebraElement::term(d.sign, d.mono, d.word);
    disks_ready_ = true;
}

const std::vector<Disk>& ResolvedDiagram::disks() const {
    if (!disks_ready_) enumerate_disks_impl();
    return disks_;
}

const AlgebraElement& ResolvedDiagram::differential(GenId g) const {
    if (!disks_ready_) enumerate_disks_impl();
    return diff_[g];
}

std::vector<Disk> ResolvedDiagram::disks_of(GenId g) const {
    std::vector<Disk> out;
    for (const Disk& d : disks())
        if (d.pos_corner == g) out.push_back(d);
    return out;
}

ResolvedDiagram resolve(const FrontDiagram& front, BasePointMode mode, const std::string& tname) {
    validate_front(front);
    ResolvedDiagram D;
    D.strands = front.strands();
    for (int k = 1; k <= front.m; ++k)
        D.cols.push_back({ColKind::LeftCap, 2 * k - 1, -1, -1, k});
    for (size_t i = 0; i < front.word.size(); ++i) {
        GenId g = (GenId)D.gens.size();
        D.gens.push_back({"c" + std::to_string(i + 1), GenClass::Crossing, 0, -1});
        D.cols.push_back({ColKind::Cross, front.word[i], g, -1, 0});
    }
    for (int k = 1; k <= front.m; ++k) {
        int lo = 2 * front.m - 2 * k + 1;
        GenId g = (GenId)D.gens.size();
        D.gens.push_back({"q" + std::to_string(k), GenClass::Cusp, 1, -1});
        D.cols.push_back({ColKind::Cross, lo, g, -1, k});
        if (mode == BasePointMode::PerCusp) {
            int var = (int)D.tvars.size();
            D.tvars.push_back({"t" + std::to_string(k), 0});
            D.cols.push_back({ColKind::BasePoint, lo + 1, -1, var, k});
        } else if (k == 1) {
            D.tvars.push_back({tname, 0});
            D.cols.push_back({ColKind::BasePoint, lo + 1, -1, 0, k});
        }
        D.cols.push_back({ColKind::RightCap, lo, -1, -1, k});
    }
    D.finalize();
    return D;
}

} // namespace legaug
