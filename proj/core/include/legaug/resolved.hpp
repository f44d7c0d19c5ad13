#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "legaug/algebra.hpp"
#include "legaug/diagram.hpp"

namespace legaug {

// The Lagrangian resolution of a plat front, and every diagram derived from
// it by dipping or base-point moves, is a sequence of elementary columns on a
// fixed set of strand positions 1..2m:
//   LeftCap   - smoothed left cusp creating positions (pos, pos+1)
//   Cross     - a crossing of adjacent positions (pos, pos+1)
//   RightCap  - the cap of a resolved right cusp; the loop crossing q_k is a
//               separate Cross column immediately to its left
//   BasePoint - a marked point on one strand carrying an invertible variable
// Left caps form a prefix block, right caps (with their q's) a suffix block.
enum class ColKind : uint8_t { LeftCap, Cross, RightCap, BasePoint };

// Crossing flavors.  DipA crossings have the rotated Reeb structure: their
// over-strand ascends, so north/south quadrants are the positive ones.
enum class GenClass : uint8_t { Crossing, Cusp, DipB, DipA };

struct Column {
    ColKind kind = ColKind::Cross;
    int pos = 0;
    GenId gen = -1;
    int var = -1;
    int cusp = 0; // 1-based, top to bottom, for caps and cusp crossings
};

struct GenInfo {
    std::string name;
    GenClass cls = GenClass::Crossing;
    int grading = 0;
    int col = -1;
};

struct TVarInfo {
    std::string name;
    int grading = 0;
};

// A disk contributing to the differential: one positive corner, negative
// corners listed counterclockwise from it, the product of orientation signs,
// and the signed base-point traversal exponents.
struct Disk {
    GenId pos_corner = -1;
    std::vector<GenId> word;
    int sign = 1;
    LaurentMonomial mono;
};

enum class BasePointMode { SingleTop, PerCusp };

class ResolvedDiagram {
public:
    int strands = 0;
    std::vector<Column> cols;
    std::vector<GenInfo> gens;
    std::vector<TVarInfo> tvars;
    int r = 0;
    int modulus = 0;

    // per-slice data; slice s sits left of column s, slices run 0..cols.size()
    std::vector<std::vector<int8_t>> dir;
    std::vector<std::vector<int>> mu;
    std::vector<int> birth, death; // per position: creating/destroying column

    int slices() const { return (int)cols.size() + 1; }
    bool edge_exists(int slice, int pos) const {
        return slice > birth[pos - 1] && slice <= death[pos - 1];
    }
    bool atype(GenId g) const { return gens[g].cls == GenClass::DipA; }
    GenId find_gen(const std::string& name) const;
    int find_tvar(const std::string& name) const;
    const GenInfo& info(GenId g) const { return gens[g]; }

    // Recomputes trace-derived data (directions, potentials, gradings) and
    // runs structural sanity checks.  Must be called after column edits.
    void finalize();

    // Complete embedded-disk enumeration and the induced differential.
    const std::vector<Disk>& disks() const;
    const AlgebraElement& differential(GenId g) const;
    std::vector<Disk> disks_of(GenId g) const;

    // Orientation sign of a quadrant (0=N,1=S,2=E,3=W) at a crossing.
    int orientation_sign(GenId g, int quadrant) const;

private:
    mutable bool disks_ready_ = false;
    mutable std::vector<Disk> disks_;
    mutable std::vector<AlgebraElement> diff_;
    void enumerate_disks_impl() const;
};

ResolvedDiagram resolve(const FrontDiagram& front, BasePointMode mode, const std::string& tname = "t");

} // namespace legaug
