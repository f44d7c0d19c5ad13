#pragma once

#include "legaug/augment.hpp"
#include "legaug/dipped.hpp"
#include "legaug/rulings.hpp"

namespace legaug {

struct correspond_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BasePointPlan {
    struct Event {
        std::string action; // "add" | "flip" | "solve" | "merge"
        std::string detail;
    };
    std::vector<Event> events;
    std::string str() const;
};

// Creation log entries, unwound in reverse by undip_augmentation.
struct BuildEvent {
    enum class Kind { Push, Point } kind = Kind::Push;
    int gap = -1; // dip index for pushes
    DipPush push;
    int var = -1, cusp = -1; // walked base point
};

struct CorrespondResult {
    FrontDiagram front;
    int rho = 0;
    NormalRuling ruling;
    ResolvedDiagram dipped;
    CeDga dipped_dga;
    Augmentation dipped_aug;
    BasePointPlan plan;
    std::vector<BuildEvent> log;
};

// Augmentation -> ruling (section 3 machinery).  The input augmentation lives
// on the single-base-point DGA of the front; it is converted to the DGA with
// one base point per right cusp, extended over dips added left to right, and
// returned together with the induced normal ruling.
CorrespondResult augmentation_to_ruling(const FrontDiagram& front, const Augmentation& aug);

// Ruling -> dipped augmentation (section 4): switch values pinned to 1,
// every base point sent to -1.
CorrespondResult ruling_to_dipped_augmentation(const FrontDiagram& front, const NormalRuling& R,
                                               const FieldSpec& field, int rho);

// Same driver with an explicit set of value-1 original crossings (the lift
// needs augmented non-switches as well).
CorrespondResult ruling_to_dipped_augmentation_seeded(const FrontDiagram& front,
                                                      const NormalRuling& R, const FieldSpec& field,
                                                      int rho, const std::vector<bool>& augmented);

// Odd-variety constructor: given an unoriented rho-graded ruling and x != 0,
// builds an augmentation whose undipped eps(t) is -x^2.
CorrespondResult construct_odd_variety_augmentation(const FrontDiagram& front, const NormalRuling& R,
                                                    const Value& x, int rho);

// Removes the dips via the type II correction formula, walks added base
// points back to their cusps, and consolidates everything onto the
// single-base-point DGA of the front.
Augmentation undip_augmentation(const CorrespondResult& res);

// a^j_{rs} is augmented exactly when strands r,s are paired at that slice.
bool property_r_holds(const CorrespondResult& res);

// Number of base points in the final dipped diagram.
int base_point_count(const CorrespondResult& res);

} // namespace legaug
