#pragma once

#include <string>
#include <vector>

#include "apery/semigroup.hpp"

namespace apery {

enum class TriState { False, True, NotEvaluated };

struct RouteCheck {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// Classification of the associated graded ring of the semigroup ring and of
/// the Artinian quotient Gbar, with every equivalence route recorded.
struct GradedClassification {
    Int r = 0;  // reduction number
    Int s = 0;  // index of nilpotency (max Apery order)
    bool gr_cm = false;
    bool gr_gorenstein = false;
    bool gr_ci = false;
    bool gbar_ci = false;
    bool gbar_gorenstein = false;
    // Buchsbaumness is only ever derived (equivalent to gr_ci under
    // gamma-rectangularity), never computed independently.
    TriState buchsbaum_derived = TriState::NotEvaluated;
    std::vector<RouteCheck> route_agreement;
};

/// Least h with m + hM = (h+1)M, decided on the finite window
/// [0, f+(h+1)m+1]; 0 for S = N.
Int reduction_number(const NumericalSemigroup& s);

/// Largest order of an Apery element.
Int nilpotency_index(const NumericalSemigroup& s);

/// ord(x+m) = ord(x)+1 for every member x <= f + r*m. Elements above the
/// window have order >= r and are regular automatically. Cross-checked:
/// CM implies r = s, and for M-pure semigroups CM iff r = s.
bool is_gr_cohen_macaulay(const NumericalSemigroup& s);

GradedClassification classify(const NumericalSemigroup& s);

}  // namespace apery
