#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "apery/analysis.hpp"
#include "apery/fixtures.hpp"
#include "apery/survey.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInconsistency = 2;

apery::OracleMode oracle_mode(bool force_on, bool force_off) {
    if (force_on) return apery::OracleMode::On;
    if (force_off) return apery::OracleMode::Off;
    return apery::OracleMode::Auto;
}

int cmd_analyze(const std::string& gens_text, bool force_on, bool force_off,
                const std::string& format) {
    auto gens = apery::parse_generator_list(gens_text);
    auto s = apery::NumericalSemigroup::from_generators(gens);
    const auto mode = oracle_mode(force_on, force_off);
    if (mode == apery::OracleMode::Auto && !apery::oracle_enabled(s, mode)) {
        std::cerr << "warning: oracle disabled for m = " << s.multiplicity()
                  << " > 40 (pass --oracle to force)\n";
    }
    auto report = apery::analyze(s, mode);
    if (format == "structured") {
        std::cout << apery::render_structured(report) << "\n";
    } else {
        std::cout << apery::render_text(report);
    }
    return kExitOk;
}

int cmd_batch(int genus_max, const std::string& file, const std::string& out_path,
              int jobs, bool force_on, bool force_off) {
    std::vector<std::vector<apery::Int>> lists;
    if (genus_max >= 0) {
        lists = apery::enumerate_tree(genus_max);
    } else {
        lists = apery::read_generator_file(file);
    }

    apery::SurveyOptions options;
    options.jobs = jobs;
    options.oracle = oracle_mode(force_on, force_off);

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) throw apery::IOError("cannot write '" + out_path + "'");
        out = &file_out;
    }

    auto summary = apery::run_batch(lists, *out, options);
    std::cerr << "rows: " << summary.rows << "\n";
    for (const auto& [name, count] : summary.counts)
        std::cerr << name << ": " << count << "\n";
    std::cerr << "consistency failures: " << summary.consistency_failures << "\n";
    return summary.consistency_failures == 0 ? kExitOk : kExitInconsistency;
}

int cmd_verify_paper() {
    auto results = apery::run_reference_fixtures();
    std::size_t failures = 0;
    std::string current;
    for (const auto& r : results) {
        if (r.semigroup != current) {
            current = r.semigroup;
            std::cout << current << ":\n";
        }
        std::cout << "  " << (r.pass ? "✓" : "✗") << " " << r.fact;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << results.size() << " facts checked, " << failures << " failed\n";
    return failures == 0 ? kExitOk : kExitInconsistency;
}

int cmd_bf_family(const std::vector<apery::Int>& factors) {
    auto gens = apery::bf_generators(factors);
    auto s = apery::NumericalSemigroup::from_generators(gens);
    auto report = apery::analyze(s, apery::OracleMode::Auto);
    if (!report.gr_ci)
        throw apery::OracleMismatch("coprime family instance is not Complete Intersection");
    std::cout << apery::render_text(report);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroups: Complete Intersection classification of the "
                 "associated graded ring via rectangular Apery sets"};
    app.require_subcommand(1);

    std::string gens_text;
    std::string format = "text";
    bool force_on = false;
    bool force_off = false;
    auto* analyze = app.add_subcommand("analyze", "full report for one semigroup");
    analyze->add_option("gens", gens_text, "comma-separated generators, e.g. 8,10,15")
        ->required();
    analyze->add_flag("--oracle", force_on, "force the Gbar oracle on");
    analyze->add_flag("--no-oracle", force_off, "force the Gbar oracle off");
    analyze->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));

    int genus_max = -1;
    std::string file;
    std::string out_path;
    int jobs = 1;
    bool batch_on = false;
    bool batch_off = false;
    auto* batch = app.add_subcommand("batch", "CSV survey over many semigroups");
    auto* genus_opt = batch->add_option("--genus-max", genus_max,
                                        "enumerate all semigroups of genus <= G");
    auto* file_opt = batch->add_option("--file", file, "one generator list per line");
    genus_opt->excludes(file_opt);
    batch->add_option("--out", out_path, "output path (default stdout)");
    batch->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    batch->add_flag("--oracle", batch_on, "force the Gbar oracle on");
    batch->add_flag("--no-oracle", batch_off, "force the Gbar oracle off");

    auto* verify = app.add_subcommand(
        "verify-paper", "check the published worked examples this library reproduces");

    std::vector<apery::Int> factors;
    auto* bf = app.add_subcommand("bf-family",
                                  "analyze <N/n_1,...,N/n_k> for pairwise coprime n_i");
    bf->add_option("factors", factors, "pairwise coprime integers >= 2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (app.got_subcommand(analyze))
            return cmd_analyze(gens_text, force_on, force_off, format);
        if (app.got_subcommand(batch)) {
            if (genus_max < 0 && file.empty())
                throw apery::ParseError("batch needs --genus-max or --file");
            return cmd_batch(genus_max, file, out_path, jobs, batch_on, batch_off);
        }
        if (app.got_subcommand(verify)) return cmd_verify_paper();
        if (app.got_subcommand(bf)) return cmd_bf_family(factors);
    } catch (const apery::InternalInconsistency& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitInconsistency;
    } catch (const apery::OracleMismatch& e) {
        std::cerr << "oracle mismatch: " << e.what() << "\n";
        return kExitInconsistency;
    } catch (const apery::RankDisagreement& e) {
        std::cerr << "rank disagreement: " << e.what() << "\n";
        return kExitInconsistency;
    } catch (const apery::NoAlternativeRepresentation& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitInconsistency;
    } catch (const apery::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
