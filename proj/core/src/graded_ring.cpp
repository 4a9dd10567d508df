#include "apery/graded_ring.hpp"

#include <algorithm>

#include "apery/order.hpp"
#include "apery/rectangularity.hpp"

namespace apery {

Int nilpotency_index(const NumericalSemigroup& s) {
    return *std::max_element(s.apery_set().orders.begin(), s.apery_set().orders.end());
}

namespace {

// m + hM = (h+1)M as sets. The left side is always contained in the right,
// and above f + (h+1)m both sides contain every integer, so only the window
// needs checking: every y with ord(y) >= h+1 must satisfy y - m in S with
// ord(y-m) >= h. (hM is exactly the set of members of order >= h; 0M = S.)
bool reduction_reached(const NumericalSemigroup& s, Int h) {
    const Int m = s.multiplicity();
    const Int window = s.frobenius() + (h + 1) * m + 1;
    s.ensure_order_table(window);
    for (Int y = 0; y <= window; ++y) {
        if (!s.contains(y) || s.order(y) < h + 1) continue;
        if (!s.contains(y - m) || s.order(y - m) < h) return false;
    }
    return true;
}

}  // namespace

Int reduction_number(const NumericalSemigroup& s) {
    const Int cap = s.frobenius() + 2 * s.multiplicity();
    for (Int h = nilpotency_index(s); h <= cap; ++h) {
        if (reduction_reached(s, h)) return h;
    }
    throw InternalInconsistency("reduction number not found below the safety cap");
}

bool is_gr_cohen_macaulay(const NumericalSemigroup& s) {
    const Int m = s.multiplicity();
    const Int r = reduction_number(s);
    const Int window = s.frobenius() + r * m;
    s.ensure_order_table(window + m);
    bool cm = true;
    for (Int x = 0; x <= window; ++x) {
        if (!s.contains(x)) continue;
        if (s.order(x + m) != s.order(x) + 1) {
            cm = false;
            break;
        }
    }
    // regularity of the multiplicity form forces r = s; the converse holds
    // under M-purity
    const Int nil = nilpotency_index(s);
    if (cm && r != nil)
        throw InternalInconsistency("Cohen-Macaulay but r != s");
    if (is_M_pure(s) && cm != (r == nil))
        throw InternalInconsistency("M-pure cross-check: CM verdict disagrees with r == s");
    return cm;
}

GradedClassification classify(const NumericalSemigroup& s) {
    GradedClassification c;
    c.s = nilpotency_index(s);
    c.r = reduction_number(s);
    if (c.s > c.r) throw InternalInconsistency("s > r");

    const bool gamma_rect = is_gamma_rectangular(s).value;
    const bool mps = is_M_pure_symmetric(s);
    c.gr_cm = is_gr_cohen_macaulay(s);
    c.gbar_ci = gamma_rect;
    c.gbar_gorenstein = mps;
    c.gr_gorenstein = mps && (c.r == c.s);
    c.gr_ci = gamma_rect && c.gr_cm;
    c.buchsbaum_derived = gamma_rect ? (c.gr_ci ? TriState::True : TriState::False)
                                     : TriState::NotEvaluated;

    // equivalence routes under gamma-rectangularity: CM, r = s and
    // Gorensteinness of the graded ring must coincide
    if (gamma_rect) {
        const bool via_cm = c.gr_cm;
        const bool via_rs = (c.r == c.s);
        const bool via_gor = c.gr_gorenstein;
        c.route_agreement.push_back({"gamma-rect: CM <=> (r=s)", via_cm == via_rs, ""});
        c.route_agreement.push_back({"gamma-rect: (r=s) <=> gr Gorenstein", via_rs == via_gor, ""});
        if (via_cm != via_rs || via_rs != via_gor)
            throw InternalInconsistency("equivalence routes disagree under gamma-rectangularity");
    } else {
        c.route_agreement.push_back({"gamma-rect routes", true, "not gamma-rectangular; skipped"});
    }
    if (c.gr_ci && !c.gr_gorenstein)
        throw InternalInconsistency("Complete Intersection but not Gorenstein");
    if (c.gr_gorenstein && !c.gr_cm)
        throw InternalInconsistency("Gorenstein but not Cohen-Macaulay");
    return c;
}

}  // namespace apery
