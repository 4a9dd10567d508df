#pragma once

#include <vector>

#include "apery/semigroup.hpp"

namespace apery {

/// Verdicts about the Apery poset under divisibility and its order-additive
/// refinement.
struct PosetVerdicts {
    std::vector<Int> max_ap;    // sorted
    std::vector<Int> max_ap_M;  // sorted; always a superset of max_ap
    bool symmetric = false;
    bool m_pure = false;
    bool m_pure_symmetric = false;
};

/// s <= t in the divisibility order: t - s in S.
bool divides_S(const NumericalSemigroup& s, Int a, Int b);

/// The order-additive refinement: t - s in S and ord(s) + ord(t-s) = ord(t).
bool divides_M(const NumericalSemigroup& s, Int a, Int b);

std::vector<Int> max_ap(const NumericalSemigroup& s);
std::vector<Int> max_ap_M(const NumericalSemigroup& s);

/// Two routes, cross-checked: f+m is the unique divisibility-maximal Apery
/// element, and the gap test (f-x not in S implies x in S).
bool is_symmetric(const NumericalSemigroup& s);

/// ord is constant on max_ap_M.
bool is_M_pure(const NumericalSemigroup& s);

/// Every Apery element omega satisfies omega <=_M f+m; cross-checked against
/// is_symmetric && is_M_pure.
bool is_M_pure_symmetric(const NumericalSemigroup& s);

PosetVerdicts poset_verdicts(const NumericalSemigroup& s);

}  // namespace apery
