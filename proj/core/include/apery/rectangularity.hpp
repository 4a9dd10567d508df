#pragma once

#include <span>
#include <string>
#include <vector>

#include "apery/semigroup.hpp"

namespace apery {

/// One checked identity behind a rectangularity verdict, with both sides.
struct IdentityWitness {
    std::string name;
    Int lhs = 0;
    Int rhs = 0;
    bool holds = false;
};

struct RectVerdict {
    bool value = false;
    std::vector<IdentityWitness> witnesses;
};

/// beta_i = max{ h : h*g_i is an Apery element of order h }, i = 2..nu.
/// Empty for nu = 1.
std::vector<Int> beta_profile(const NumericalSemigroup& s);

/// gamma_i additionally requires a unique maximal representation of h*g_i.
std::vector<Int> gamma_profile(const NumericalSemigroup& s);

/// Distinct values of sum lambda_i g_i over 0 <= lambda_i <= profile_i,
/// sorted ascending. profile must have length nu-1.
std::vector<Int> rectangle_set(const NumericalSemigroup& s, std::span<const Int> profile);

/// Three routes, all required to agree: Ap(S) equals the beta rectangle set,
/// f+m = sum beta_i g_i, and m = prod(beta_i + 1). A true verdict is further
/// checked against its poset consequences (unique <=_M-maximal element with
/// unique maximal representation; M-pure symmetric with unique maximal
/// expression).
RectVerdict is_beta_rectangular(const NumericalSemigroup& s);

/// Same three routes with gamma; a true verdict additionally requires every
/// Apery element to have exactly one representation inside the gamma
/// rectangle.
RectVerdict is_gamma_rectangular(const NumericalSemigroup& s);

struct RectangularityProfile {
    std::vector<Int> beta;
    std::vector<Int> gamma;
    std::vector<Int> set_B;      // sorted
    std::vector<Int> set_Gamma;  // sorted
    bool beta_rectangular = false;
    bool gamma_rectangular = false;
    std::vector<IdentityWitness> beta_witnesses;
    std::vector<IdentityWitness> gamma_witnesses;
};

RectangularityProfile rectangularity_profile(const NumericalSemigroup& s);

}  // namespace apery
