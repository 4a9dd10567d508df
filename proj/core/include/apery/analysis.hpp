#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apery/graded_ring.hpp"
#include "apery/semigroup.hpp"

namespace apery {

enum class OracleMode { Auto, On, Off };  // Auto: on iff m <= 40

struct ConsistencyEntry {
    std::string name;
    enum class Status { Pass, Skipped } status = Status::Pass;
    std::string detail;
};

/// Everything the CLI reports about one semigroup. Every equivalence
/// exercised on the way is listed in `consistency`; a disagreement never
/// reaches this struct (the computation throws instead).
struct AnalysisReport {
    std::vector<Int> generators;
    Int m = 0;
    int nu = 0;
    Int f = 0;
    Int genus = 0;
    std::vector<Int> apery;         // sorted ascending
    std::vector<Int> apery_orders;  // parallel to apery
    std::vector<Int> max_ap;
    std::vector<Int> max_ap_M;
    bool symmetric = false;
    bool m_pure = false;
    bool unique_maximal_expression = false;
    std::vector<Int> beta;
    std::vector<Int> gamma;
    bool beta_rectangular = false;
    bool gamma_rectangular = false;
    Int r = 0;
    Int s = 0;
    bool gr_cm = false;
    bool gr_gorenstein = false;
    bool gr_ci = false;
    bool gbar_ci = false;
    bool gbar_gorenstein = false;
    bool oracle_run = false;
    std::optional<Int> mu_J;          // empty when the oracle was skipped
    std::vector<Int> mu_J_degrees;
    std::vector<std::string> tilde_J;
    std::vector<Int> hilbert_gbar;
    std::vector<ConsistencyEntry> consistency;
};

bool oracle_enabled(const NumericalSemigroup& s, OracleMode mode);

AnalysisReport analyze(const NumericalSemigroup& s, OracleMode mode = OracleMode::Auto);

std::string render_text(const AnalysisReport& report);
std::string render_structured(const AnalysisReport& report);  // JSON

/// "8,10,15" with tolerated whitespace; throws ParseError.
std::vector<Int> parse_generator_list(std::string_view text);

}  // namespace apery
