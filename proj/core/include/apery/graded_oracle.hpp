#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "apery/semigroup.hpp"

namespace apery {

/**
 * Combinatorial model of the Artinian quotient Gbar as a monomial quotient
 * k[x_2..x_nu]/J: every exponent tuple of total degree <= s+1 is classified
 * as zero in Gbar or as a named Apery class. All algebra downstream is
 * linear algebra over these indexed monomial bases; no polynomial
 * arithmetic is ever constructed.
 */
struct GradedQuotientModel {
    struct Monomial {
        std::vector<std::int32_t> exps;  // lambda_2..lambda_nu
        Int value = 0;                   // sum lambda_i g_i
        int image = -1;                  // Apery residue class, or -1 for zero
    };

    Int degree_cap = 0;  // s + 1
    std::vector<std::vector<Monomial>> by_degree;  // [0..s+1], lex-descending
    std::vector<std::map<std::vector<std::int32_t>, int>> index_of;  // per degree
    std::vector<Int> hilbert;  // h_0..h_s, h_d = #{omega : ord(omega) = d}
};

/// Enumerates and classifies all monomials up to degree s+1 and checks the
/// two Hilbert computations (Apery order histogram vs. distinct nonzero
/// images per degree) against each other.
GradedQuotientModel build_model(const NumericalSemigroup& s);

struct MuResult {
    Int mu = 0;
    std::vector<Int> degrees;  // sorted multiset, one entry per generator
};

/// Minimal number of generators of J by graded Nakayama:
/// mu(J) = sum_d [dim J_d - dim (x*J)_d], ranks by exact linear algebra.
MuResult mu_J(const NumericalSemigroup& s);
MuResult mu_J(const NumericalSemigroup& s, const GradedQuotientModel& model);

struct IdealGenerator {
    enum class Kind { Monomial, Binomial };
    Kind kind = Kind::Monomial;
    std::vector<Int> lead_exponents;   // x_i^{gamma_i+1}
    std::vector<Int> trail_exponents;  // binomial only; homogeneous with lead
    Int degree = 0;
};

std::string render(const IdealGenerator& g);

/// The predicted generators x_i^{gamma_i+1} - rho_i prod_{j != i} x_j^{lambda_j},
/// rho_i = 0 iff beta_i = gamma_i. When gamma_i < beta_i the trail is the
/// lex-largest maximal representation of (gamma_i+1) g_i avoiding g_i; its
/// exponents never exceed the gamma bounds, and rho_2 = rho_nu = 0 always.
std::vector<IdealGenerator> tilde_J_generators(const NumericalSemigroup& s);

struct OracleCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct OracleReport {
    MuResult mu;
    std::vector<Int> hilbert;
    std::vector<IdealGenerator> tilde_J;
    bool gamma_rectangular = false;
    std::vector<OracleCheck> checks;
};

/// Confirms the Complete Intersection verdict for Gbar independently:
/// mu(J) = nu-1 iff gamma-rectangular; under gamma-rectangularity the
/// generator degrees are {gamma_i+1}, the predicted generators all vanish in
/// the model, and the Hilbert function is the coefficient vector of
/// prod_i (1 + z + ... + z^{gamma_i}). Throws OracleMismatch on any failure.
OracleReport verify_ci_oracle(const NumericalSemigroup& s);

}  // namespace apery
