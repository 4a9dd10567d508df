#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "apery/analysis.hpp"
#include "apery/fixtures.hpp"
#include "apery/survey.hpp"
#include "util.hpp"

using apery::Int;
using apery::NumericalSemigroup;

namespace {

// independent enumeration: count gap sets G of size g inside [1, 2g-1]
// whose complement is closed under addition
std::size_t count_by_gapsets(int genus) {
    if (genus == 0) return 1;
    const int limit = 2 * genus - 1;
    std::size_t count = 0;
    for (unsigned mask = 0; mask < (1u << limit); ++mask) {
        if (__builtin_popcount(mask) != genus) continue;
        auto is_gap = [&](int x) {
            return x >= 1 && x <= limit && (mask >> (x - 1)) & 1u;
        };
        bool closed = true;
        for (int x = 1; x <= limit && closed; ++x) {
            if (is_gap(x)) continue;
            for (int y = x; x + y <= limit; ++y) {
                if (!is_gap(y) && is_gap(x + y)) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) ++count;
    }
    return count;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("tree enumeration counts per genus") {
    const std::vector<std::size_t> expected = {1, 1, 2, 4, 7, 12, 23, 39, 67};
    auto lists = apery::enumerate_tree(8);
    std::vector<std::size_t> per_genus(9, 0);
    for (const auto& gens : lists) {
        auto s = NumericalSemigroup::from_generators(gens);
        ++per_genus[static_cast<std::size_t>(s.genus())];
    }
    CHECK(per_genus == expected);
    CHECK(apery::enumerate_tree(3).size() == 8);
    CHECK(apery::enumerate_tree(0).size() == 1);
}

TEST_CASE("tree enumeration matches the gap-set enumerator") {
    auto lists = apery::enumerate_tree(6);
    std::vector<std::size_t> per_genus(7, 0);
    for (const auto& gens : lists)
        ++per_genus[static_cast<std::size_t>(NumericalSemigroup::from_generators(gens).genus())];
    for (int g = 0; g <= 6; ++g)
        CHECK(per_genus[static_cast<std::size_t>(g)] == count_by_gapsets(g));
}

TEST_CASE("tree enumeration has no duplicates") {
    auto lists = apery::enumerate_tree(9);
    auto sorted = lists;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("csv schema") {
    CHECK(apery::csv_header() ==
          "generators;m;nu;f;genus;beta;gamma;beta_rect;gamma_rect;r;s;"
          "gr_cm;gr_gorenstein;gr_ci;mu_J;consistency");
    auto s = NumericalSemigroup::from_generators({8, 10, 15});
    auto row = apery::csv_row(apery::analyze(s, apery::OracleMode::On), "pass");
    CHECK(row == "8-10-15;8;3;37;19;3-1;3-1;true;true;4;4;true;true;true;2;pass");
    auto skipped = apery::csv_row(apery::analyze(s, apery::OracleMode::Off), "pass");
    CHECK(skipped.find(";skipped;pass") != std::string::npos);
}

TEST_CASE("batch output is deterministic across parallelism") {
    auto lists = apery::enumerate_tree(7);
    apery::SurveyOptions serial;
    serial.jobs = 1;
    std::ostringstream a;
    auto summary_a = apery::run_batch(lists, a, serial);

    apery::SurveyOptions parallel;
    parallel.jobs = 4;
    std::ostringstream b;
    auto summary_b = apery::run_batch(lists, b, parallel);

    CHECK(a.str() == b.str());
    CHECK(summary_a.rows == lists.size());
    CHECK(summary_a.consistency_failures == 0);
    CHECK(summary_b.consistency_failures == 0);
    CHECK(summary_a.counts == summary_b.counts);
    CHECK(split_lines(a.str()).size() == lists.size() + 1);
}

TEST_CASE("batch over a generator file") {
    const std::string path = "survey_input_test.txt";
    {
        std::ofstream out(path);
        out << "# worked examples\n";
        out << "8,10,15\n";
        out << "\n";
        out << "5, 6, 9  # spaces are fine\n";
        out << "16,18,21,27\n";
    }
    auto lists = apery::read_generator_file(path);
    REQUIRE(lists.size() == 3);
    CHECK(lists[1] == std::vector<Int>{5, 6, 9});

    std::ostringstream out;
    auto summary = apery::run_batch(lists, out, {});
    CHECK(summary.rows == 3);
    CHECK(summary.consistency_failures == 0);
    auto lines = split_lines(out.str());
    CHECK(lines[1].substr(0, 8) == "8-10-15;");
    std::remove(path.c_str());

    CHECK_THROWS_AS(apery::read_generator_file("does_not_exist.txt"), apery::IOError);
}

TEST_CASE("coprime family generators") {
    CHECK(apery::bf_generators(std::vector<Int>{5, 3, 2}) == std::vector<Int>{6, 10, 15});
    CHECK(apery::bf_generators(std::vector<Int>{3, 2}) == std::vector<Int>{2, 3});
    CHECK(apery::bf_generators(std::vector<Int>{7, 5, 2}) == std::vector<Int>{10, 14, 35});
    CHECK_THROWS_AS(apery::bf_generators(std::vector<Int>{4, 6}), apery::NotCoprime);
    CHECK_THROWS_AS(apery::bf_generators(std::vector<Int>{5}), apery::NotCoprime);
    CHECK_THROWS_AS(apery::bf_generators(std::vector<Int>{1, 3}), apery::NotCoprime);
}

TEST_CASE("generator list parsing") {
    CHECK(apery::parse_generator_list("8,10,15") == std::vector<Int>{8, 10, 15});
    CHECK(apery::parse_generator_list(" 8 , 10 , 15 ") == std::vector<Int>{8, 10, 15});
    CHECK(apery::parse_generator_list("7") == std::vector<Int>{7});
    CHECK_THROWS_AS(apery::parse_generator_list(""), apery::ParseError);
    CHECK_THROWS_AS(apery::parse_generator_list("8,,15"), apery::ParseError);
    CHECK_THROWS_AS(apery::parse_generator_list("8,x"), apery::ParseError);
    CHECK_THROWS_AS(apery::parse_generator_list("8,-3"), apery::ParseError);
    CHECK_THROWS_AS(apery::parse_generator_list("8 10"), apery::ParseError);
}

TEST_CASE("structured report has the stable keys") {
    auto s = NumericalSemigroup::from_generators({8, 10, 11, 12});
    auto json = nlohmann::json::parse(apery::render_structured(apery::analyze(s)));
    for (const char* key :
         {"generators", "m", "nu", "f", "genus", "apery", "apery_orders", "max_ap",
          "max_ap_M", "symmetric", "m_pure", "unique_maximal_expression", "beta",
          "gamma", "beta_rectangular", "gamma_rectangular", "r", "s", "gr_cm",
          "gr_gorenstein", "gr_ci", "gbar_ci", "gbar_gorenstein", "mu_J",
          "mu_J_degrees", "tilde_J", "hilbert_gbar", "consistency"}) {
        CAPTURE(key);
        CHECK(json.contains(key));
    }
    CHECK(json["gr_ci"] == true);
    CHECK(json["mu_J"] == 3);
    CHECK(json["generators"] == nlohmann::json({8, 10, 11, 12}));
}

TEST_CASE("analysis consistency entries are exhaustive and pass") {
    std::mt19937 rng(167);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = testutil::random_semigroup(rng);
        auto rep = apery::analyze(s, apery::OracleMode::On);
        CHECK(rep.consistency.size() >= 12);
        for (const auto& c : rep.consistency)
            CHECK(c.status == apery::ConsistencyEntry::Status::Pass);
        CHECK(rep.oracle_run);
    }
}

TEST_CASE("skipped oracle is marked skipped, never passed") {
    auto s = NumericalSemigroup::from_generators({8, 10, 15});
    auto rep = apery::analyze(s, apery::OracleMode::Off);
    CHECK_FALSE(rep.oracle_run);
    CHECK_FALSE(rep.mu_J.has_value());
    bool found_skip = false;
    for (const auto& c : rep.consistency) {
        if (c.status == apery::ConsistencyEntry::Status::Skipped) {
            found_skip = true;
            CHECK(c.name == "oracle");
        }
    }
    CHECK(found_skip);
}

TEST_CASE("reference fixtures all pass") {
    auto results = apery::run_reference_fixtures();
    CHECK(results.size() > 70);
    std::size_t failures = 0, notes = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failures;
        if (r.detail.find("paper-discrepancy") != std::string::npos) ++notes;
    }
    CHECK(failures == 0);
    CHECK(notes == 2);  // the published beta triple and the published r value
}
