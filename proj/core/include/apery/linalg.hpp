#pragma once

#include <cstdint>
#include <vector>

#include "apery/semigroup.hpp"

namespace apery {

/// Dense row-major matrix with small integer entries.
using IntMatrix = std::vector<std::vector<Int>>;

/// Rank over the prime field F_p by Gaussian elimination. Never exceeds the
/// rational rank.
int rank_mod_p(const IntMatrix& rows, std::uint64_t p);

/// Rank over Q (GMP rational elimination).
int rank_rational(const IntMatrix& rows);

/// Exact rank: two prime-field passes (primes > max(m, 2^20)); on
/// disagreement, escalate to rational arithmetic. Throws RankDisagreement
/// only if escalation is impossible, which cannot happen in this build.
int exact_rank(const IntMatrix& rows);

}  // namespace apery
