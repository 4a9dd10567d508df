#include "apery/survey.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

namespace apery {

namespace {

// Minimal generators of S \ {g} for a minimal generator g > f(S). The child
// is again a numerical semigroup; its Frobenius number is g and its
// generators are bounded by g + m'.
std::vector<Int> child_generators(const NumericalSemigroup& s, Int g) {
    const Int new_frob = g;
    auto member = [&](Int x) { return x != g && x >= 0 && s.contains(x); };

    Int new_mult = new_frob + 1;  // g+1 > f(S) is always a member
    for (Int x = 1; x <= new_frob; ++x) {
        if (member(x)) {
            new_mult = x;
            break;
        }
    }

    std::vector<Int> gens;
    for (Int x = 1; x <= new_frob + new_mult; ++x) {
        if (!member(x)) continue;
        bool minimal = true;
        for (Int a = new_mult; a + a <= x; ++a) {
            if (member(a) && member(x - a)) {
                minimal = false;
                break;
            }
        }
        if (minimal) gens.push_back(x);
    }
    return gens;
}

void tree_visit(const NumericalSemigroup& s, int genus_left,
                std::vector<std::vector<Int>>& out) {
    out.push_back(s.generators());
    if (genus_left == 0) return;
    for (Int g : s.generators()) {
        if (g <= s.frobenius()) continue;
        auto child = NumericalSemigroup::from_generators(child_generators(s, g));
        tree_visit(child, genus_left - 1, out);
    }
}

}  // namespace

std::vector<std::vector<Int>> enumerate_tree(int genus_max) {
    if (genus_max < 0) throw Error("genus bound must be nonnegative");
    std::vector<std::vector<Int>> out;
    tree_visit(NumericalSemigroup::from_generators({1}), genus_max, out);
    return out;
}

std::vector<std::vector<Int>> read_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open '" + path + "'");
    std::vector<std::vector<Int>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        try {
            out.push_back(parse_generator_list(line.substr(first, last - first + 1)));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string csv_header() {
    return "generators;m;nu;f;genus;beta;gamma;beta_rect;gamma_rect;r;s;"
           "gr_cm;gr_gorenstein;gr_ci;mu_J;consistency";
}

namespace {

std::string hyphen_join(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += "-";
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::string csv_row(const AnalysisReport& r, const std::string& consistency_cell) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string row;
    row += hyphen_join(r.generators);
    row += ";" + std::to_string(r.m);
    row += ";" + std::to_string(r.nu);
    row += ";" + std::to_string(r.f);
    row += ";" + std::to_string(r.genus);
    row += ";" + hyphen_join(r.beta);
    row += ";" + hyphen_join(r.gamma);
    row += ";"; row += b(r.beta_rectangular);
    row += ";"; row += b(r.gamma_rectangular);
    row += ";" + std::to_string(r.r);
    row += ";" + std::to_string(r.s);
    row += ";"; row += b(r.gr_cm);
    row += ";"; row += b(r.gr_gorenstein);
    row += ";"; row += b(r.gr_ci);
    row += ";"; row += r.mu_J ? std::to_string(*r.mu_J) : "skipped";
    row += ";" + consistency_cell;
    return row;
}

BatchSummary run_batch(const std::vector<std::vector<Int>>& generator_lists,
                       std::ostream& out, const SurveyOptions& options) {
    struct RowResult {
        std::string csv;
        bool failed = false;
        bool gr_ci = false, gr_gorenstein = false, gr_cm = false;
        bool beta_rect = false, gamma_rect = false;
    };
    std::vector<RowResult> rows(generator_lists.size());

    std::atomic<std::size_t> next{0};
    std::atomic<bool> aborted{false};
    std::exception_ptr fatal;
    std::mutex fatal_mutex;

    auto describe = [&](std::size_t i) {
        std::string g;
        for (std::size_t k = 0; k < generator_lists[i].size(); ++k) {
            if (k) g += ",";
            g += std::to_string(generator_lists[i][k]);
        }
        return "<" + g + ">";
    };

    auto worker = [&] {
        while (!aborted.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= generator_lists.size()) return;
            RowResult& row = rows[i];
            try {
                auto s = NumericalSemigroup::from_generators(generator_lists[i]);
                try {
                    auto report = analyze(s, options.oracle);
                    row.csv = csv_row(report, "pass");
                    row.gr_ci = report.gr_ci;
                    row.gr_gorenstein = report.gr_gorenstein;
                    row.gr_cm = report.gr_cm;
                    row.beta_rect = report.beta_rectangular;
                    row.gamma_rect = report.gamma_rectangular;
                } catch (const OracleMismatch& e) {
                    throw OracleMismatch(describe(i) + ": " + e.what());
                } catch (const InternalInconsistency& e) {
                    AnalysisReport stub;
                    stub.generators = s.generators();
                    stub.m = s.multiplicity();
                    stub.nu = s.embedding_dimension();
                    stub.f = s.frobenius();
                    stub.genus = s.genus();
                    row.csv = csv_row(stub, std::string("fail:") + e.what());
                    row.failed = true;
                }
            } catch (...) {
                std::scoped_lock lock(fatal_mutex);
                if (!fatal) fatal = std::current_exception();
                aborted.store(true);
            }
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (fatal) std::rethrow_exception(fatal);

    out << csv_header() << "\n";
    BatchSummary summary;
    summary.rows = rows.size();
    for (const auto& row : rows) {
        out << row.csv << "\n";
        if (row.failed) ++summary.consistency_failures;
        if (row.gr_ci) ++summary.counts["gr_ci"];
        if (row.gr_gorenstein) ++summary.counts["gr_gorenstein"];
        if (row.gr_cm) ++summary.counts["gr_cm"];
        if (row.beta_rect) ++summary.counts["beta_rectangular"];
        if (row.gamma_rect) ++summary.counts["gamma_rectangular"];
    }
    return summary;
}

std::vector<Int> bf_generators(std::span<const Int> n) {
    if (n.size() < 2) throw NotCoprime("need at least two factors");
    for (Int v : n) {
        if (v < 2) throw NotCoprime("factors must be >= 2, got " + std::to_string(v));
    }
    for (std::size_t i = 0; i < n.size(); ++i) {
        for (std::size_t j = i + 1; j < n.size(); ++j) {
            if (std::gcd(n[i], n[j]) != 1)
                throw NotCoprime(std::to_string(n[i]) + " and " + std::to_string(n[j]) +
                                 " are not coprime");
        }
    }
    Int product = 1;
    for (Int v : n) {
        if (product > std::numeric_limits<Int>::max() / v)
            throw Error("product of the factors overflows");
        product *= v;
    }
    std::vector<Int> gens;
    gens.reserve(n.size());
    for (Int v : n) gens.push_back(product / v);
    std::sort(gens.begin(), gens.end());
    return gens;
}

}  // namespace apery
