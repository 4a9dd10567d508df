#include "apery/order.hpp"

#include <algorithm>

namespace apery {

bool divides_S(const NumericalSemigroup& s, Int a, Int b) {
    if (!s.contains(a)) throw NotInSemigroup(a);
    if (!s.contains(b)) throw NotInSemigroup(b);
    return s.contains(b - a);
}

bool divides_M(const NumericalSemigroup& s, Int a, Int b) {
    if (!s.contains(a)) throw NotInSemigroup(a);
    if (!s.contains(b)) throw NotInSemigroup(b);
    if (!s.contains(b - a)) return false;
    return s.order(a) + s.order(b - a) == s.order(b);
}

namespace {

// O(m^2) pairwise scan over the Apery table; divisors of Apery elements
// stay inside the table, so comparing Apery pairs is enough.
template <typename Less>
std::vector<Int> maximal_elements(const std::vector<Int>& elems, Less strictly_below) {
    std::vector<Int> out;
    for (Int a : elems) {
        bool dominated = false;
        for (Int b : elems) {
            if (a != b && strictly_below(a, b)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Int> max_ap(const NumericalSemigroup& s) {
    return maximal_elements(s.apery_set().elements,
                            [&](Int a, Int b) { return divides_S(s, a, b); });
}

std::vector<Int> max_ap_M(const NumericalSemigroup& s) {
    return maximal_elements(s.apery_set().elements,
                            [&](Int a, Int b) { return divides_M(s, a, b); });
}

bool is_symmetric(const NumericalSemigroup& s) {
    const Int fm = s.frobenius() + s.multiplicity();
    auto maxima = max_ap(s);
    bool via_poset = (maxima.size() == 1 && maxima.front() == fm);

    bool via_gaps = true;
    for (Int x = 0; x <= s.frobenius(); ++x) {
        if (!s.contains(s.frobenius() - x) && !s.contains(x)) {
            via_gaps = false;
            break;
        }
    }
    if (via_poset != via_gaps)
        throw InternalInconsistency("symmetry: poset route and gap route disagree");
    return via_poset;
}

bool is_M_pure(const NumericalSemigroup& s) {
    auto maxima = max_ap_M(s);
    const Int first = s.order(maxima.front());
    return std::all_of(maxima.begin(), maxima.end(),
                       [&](Int w) { return s.order(w) == first; });
}

bool is_M_pure_symmetric(const NumericalSemigroup& s) {
    const Int fm = s.frobenius() + s.multiplicity();
    bool direct = std::all_of(s.apery_set().elements.begin(), s.apery_set().elements.end(),
                              [&](Int w) { return divides_M(s, w, fm); });
    bool combined = is_symmetric(s) && is_M_pure(s);
    if (direct != combined)
        throw InternalInconsistency("M-pure symmetric: direct route and combined route disagree");
    return direct;
}

PosetVerdicts poset_verdicts(const NumericalSemigroup& s) {
    PosetVerdicts v;
    v.max_ap = max_ap(s);
    v.max_ap_M = max_ap_M(s);
    v.symmetric = is_symmetric(s);
    v.m_pure = is_M_pure(s);
    v.m_pure_symmetric = is_M_pure_symmetric(s);
    if (!std::includes(v.max_ap_M.begin(), v.max_ap_M.end(),
                       v.max_ap.begin(), v.max_ap.end()))
        throw InternalInconsistency("max_ap is not contained in max_ap_M");
    return v;
}

}  // namespace apery
