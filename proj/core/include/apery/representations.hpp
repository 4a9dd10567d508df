#pragma once

#include <span>
#include <string>
#include <vector>

#include "apery/semigroup.hpp"

namespace apery {

/// A tuple of nonnegative coefficients over a generator range, normally
/// (lambda_2, ..., lambda_nu) aligned with g_2..g_nu.
struct RepresentationTuple {
    std::vector<Int> coefficients;
    Int value = 0;   // sum lambda_i * g_i
    Int length = 0;  // sum lambda_i

    bool operator==(const RepresentationTuple&) const = default;
};

// Both orders compare the coordinate of the smallest generator in the
// range first (lambda_2 when g_1 is excluded).
bool lex_less(const RepresentationTuple& a, const RepresentationTuple& b);
bool grlex_less(const RepresentationTuple& a, const RepresentationTuple& b);

std::string render(const RepresentationTuple& t, const NumericalSemigroup& s,
                   bool include_g1);

struct RepresentationSet {
    Int target = 0;
    bool include_g1 = false;
    std::vector<RepresentationTuple> all;      // lex-descending
    std::vector<RepresentationTuple> maximal;  // those with length == ord(target)
};

/// All coefficient tuples with value s, over g_2..g_nu (include_g1 = false)
/// or g_1..g_nu. Emitted lex-descending, so all.front() is the lex maximum.
RepresentationSet representations_of(const NumericalSemigroup& s, Int target,
                                     bool include_g1);

/// The maximal representations of an Apery element (g_1 never appears).
std::vector<RepresentationTuple> maximal_representations(const NumericalSemigroup& s,
                                                         Int omega);

/// Lex maximum of the maximal representations; also the grlex maximum over
/// all representations of omega.
RepresentationTuple lexmax_maximal_representation(const NumericalSemigroup& s, Int omega);

/// True iff every Apery element has exactly one maximal representation.
bool is_unique_maximal_expression(const NumericalSemigroup& s);

}  // namespace apery
