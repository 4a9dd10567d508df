#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "apery/analysis.hpp"

namespace apery {

/// All numerical semigroups of genus <= genus_max as generator lists, in
/// depth-first preorder of the semigroup tree rooted at N (children remove
/// one minimal generator greater than the Frobenius number, smallest first).
std::vector<std::vector<Int>> enumerate_tree(int genus_max);

/// One generator list per line; '#' starts a comment, blank lines ignored.
std::vector<std::vector<Int>> read_generator_file(const std::string& path);

struct SurveyOptions {
    int jobs = 1;
    OracleMode oracle = OracleMode::Auto;
};

struct BatchSummary {
    std::size_t rows = 0;
    std::size_t consistency_failures = 0;
    std::map<std::string, std::size_t> counts;  // verdict tallies
};

std::string csv_header();

/// Fixed schema:
/// generators;m;nu;f;genus;beta;gamma;beta_rect;gamma_rect;r;s;gr_cm;
/// gr_gorenstein;gr_ci;mu_J;consistency -- vectors hyphen-joined.
std::string csv_row(const AnalysisReport& report, const std::string& consistency_cell);

/// Analyzes every semigroup, emitting CSV rows to `out` in input order
/// regardless of the number of worker threads. An InternalInconsistency in
/// one row is recorded in its consistency cell and counted; an
/// OracleMismatch aborts the whole run.
BatchSummary run_batch(const std::vector<std::vector<Int>>& generator_lists,
                       std::ostream& out, const SurveyOptions& options);

/// Generators N/n_i for pairwise coprime n_i (each >= 2, at least two of
/// them), N = prod n_i. Throws NotCoprime.
std::vector<Int> bf_generators(std::span<const Int> n);

}  // namespace apery
