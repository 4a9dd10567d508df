#include "apery/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "apery/graded_oracle.hpp"
#include "apery/order.hpp"
#include "apery/rectangularity.hpp"
#include "apery/representations.hpp"

namespace apery {

namespace {

// number of prime factors counted with multiplicity
Int factor_length(Int n) {
    Int count = 0;
    for (Int p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            n /= p;
            ++count;
        }
    }
    if (n > 1) ++count;
    return count;
}

}  // namespace

bool oracle_enabled(const NumericalSemigroup& s, OracleMode mode) {
    switch (mode) {
        case OracleMode::On: return true;
        case OracleMode::Off: return false;
        case OracleMode::Auto: return s.multiplicity() <= 40;
    }
    return false;
}

AnalysisReport analyze(const NumericalSemigroup& s, OracleMode mode) {
    AnalysisReport rep;
    rep.generators = s.generators();
    rep.m = s.multiplicity();
    rep.nu = s.embedding_dimension();
    rep.f = s.frobenius();
    rep.genus = s.genus();
    rep.apery = s.apery_set().sorted();
    for (Int w : rep.apery) rep.apery_orders.push_back(s.order(w));

    auto pass = [&](const std::string& name, const std::string& detail = "") {
        rep.consistency.push_back({name, ConsistencyEntry::Status::Pass, detail});
    };
    auto skipped = [&](const std::string& name, const std::string& detail) {
        rep.consistency.push_back({name, ConsistencyEntry::Status::Skipped, detail});
    };

    auto poset = poset_verdicts(s);
    rep.max_ap = poset.max_ap;
    rep.max_ap_M = poset.max_ap_M;
    rep.symmetric = poset.symmetric;
    rep.m_pure = poset.m_pure;
    rep.unique_maximal_expression = is_unique_maximal_expression(s);
    pass("symmetry: poset route = gap route");
    pass("M-pure symmetric: direct route = symmetric && M-pure");
    pass("maxAp contained in maxAp_M");

    auto rect = rectangularity_profile(s);
    rep.beta = rect.beta;
    rep.gamma = rect.gamma;
    rep.beta_rectangular = rect.beta_rectangular;
    rep.gamma_rectangular = rect.gamma_rectangular;
    pass("beta-rectangularity: set, weighted-sum and product routes agree");
    pass("gamma-rectangularity: set, weighted-sum and product routes agree");
    pass("gamma_i <= beta_i and Ap(S) within Gamma within B");
    if (rect.gamma_rectangular && !poset.m_pure_symmetric)
        throw InternalInconsistency("gamma-rectangular but not M-pure symmetric");
    pass("gamma-rectangular implies M-pure symmetric");

    auto cls = classify(s);
    rep.r = cls.r;
    rep.s = cls.s;
    rep.gr_cm = cls.gr_cm;
    rep.gr_gorenstein = cls.gr_gorenstein;
    rep.gr_ci = cls.gr_ci;
    rep.gbar_ci = cls.gbar_ci;
    rep.gbar_gorenstein = cls.gbar_gorenstein;
    pass("s <= r");
    pass("CM implies r = s; under M-purity CM iff r = s");
    for (const auto& route : cls.route_agreement) pass(route.name, route.detail);

    if (rep.gr_ci && rep.nu > factor_length(rep.m) + 1)
        throw InternalInconsistency("Complete Intersection but nu exceeds l(m)+1");
    pass("gr CI implies nu <= l(m)+1");

    if (oracle_enabled(s, mode)) {
        rep.oracle_run = true;
        auto oracle = verify_ci_oracle(s);
        rep.mu_J = oracle.mu.mu;
        rep.mu_J_degrees = oracle.mu.degrees;
        rep.hilbert_gbar = oracle.hilbert;
        for (const auto& g : oracle.tilde_J) rep.tilde_J.push_back(render(g));
        for (const auto& c : oracle.checks) pass("oracle: " + c.name, c.detail);
        if (rep.gr_ci != (oracle.mu.mu == rep.nu - 1 && rep.gr_cm))
            throw InternalInconsistency("gr CI disagrees with mu(J) = nu-1 && CM");
        pass("gr CI = (mu(J) = nu-1 && CM)");
    } else {
        rep.oracle_run = false;
        skipped("oracle", "skipped (m > 40 or disabled); never counted as passed");
    }
    return rep;
}

namespace {

std::string join(const std::vector<Int>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "S = <" << join(r.generators, ",") << ">\n";
    out << "  m = " << r.m << "  nu = " << r.nu << "  f = " << r.f
        << "  genus = " << r.genus << "\n";
    out << "  Apery set (order): ";
    for (std::size_t i = 0; i < r.apery.size(); ++i) {
        if (i) out << " ";
        out << r.apery[i] << "(" << r.apery_orders[i] << ")";
    }
    out << "\n";
    out << "  maxAp = {" << join(r.max_ap, ",") << "}  maxAp_M = {"
        << join(r.max_ap_M, ",") << "}\n";
    out << "  symmetric = " << yesno(r.symmetric) << "  M-pure = " << yesno(r.m_pure)
        << "  unique maximal expression = " << yesno(r.unique_maximal_expression) << "\n";
    out << "  beta  = (" << join(r.beta, ",") << ")  beta-rectangular  = "
        << yesno(r.beta_rectangular) << "\n";
    out << "  gamma = (" << join(r.gamma, ",") << ")  gamma-rectangular = "
        << yesno(r.gamma_rectangular) << "\n";
    out << "  r = " << r.r << "  s = " << r.s << "\n";
    out << "  gr_m(R):  Cohen-Macaulay = " << yesno(r.gr_cm)
        << "  Gorenstein = " << yesno(r.gr_gorenstein)
        << "  Complete Intersection = " << yesno(r.gr_ci) << "\n";
    out << "  Gbar:     Gorenstein = " << yesno(r.gbar_gorenstein)
        << "  Complete Intersection = " << yesno(r.gbar_ci) << "\n";
    if (r.oracle_run) {
        out << "  mu(J) = " << *r.mu_J << "  degrees = {" << join(r.mu_J_degrees, ",")
            << "}  hilbert(Gbar) = (" << join(r.hilbert_gbar, ",") << ")\n";
        out << "  tilde_J = {";
        for (std::size_t i = 0; i < r.tilde_J.size(); ++i) {
            if (i) out << ", ";
            out << r.tilde_J[i];
        }
        out << "}\n";
    } else {
        out << "  oracle: skipped\n";
    }
    out << "  consistency:\n";
    for (const auto& c : r.consistency) {
        out << "    ["
            << (c.status == ConsistencyEntry::Status::Pass ? "pass" : "skip")
            << "] " << c.name;
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << "\n";
    }
    return out.str();
}

std::string render_structured(const AnalysisReport& r) {
    nlohmann::json j;
    j["generators"] = r.generators;
    j["m"] = r.m;
    j["nu"] = r.nu;
    j["f"] = r.f;
    j["genus"] = r.genus;
    j["apery"] = r.apery;
    j["apery_orders"] = r.apery_orders;
    j["max_ap"] = r.max_ap;
    j["max_ap_M"] = r.max_ap_M;
    j["symmetric"] = r.symmetric;
    j["m_pure"] = r.m_pure;
    j["unique_maximal_expression"] = r.unique_maximal_expression;
    j["beta"] = r.beta;
    j["gamma"] = r.gamma;
    j["beta_rectangular"] = r.beta_rectangular;
    j["gamma_rectangular"] = r.gamma_rectangular;
    j["r"] = r.r;
    j["s"] = r.s;
    j["gr_cm"] = r.gr_cm;
    j["gr_gorenstein"] = r.gr_gorenstein;
    j["gr_ci"] = r.gr_ci;
    j["gbar_ci"] = r.gbar_ci;
    j["gbar_gorenstein"] = r.gbar_gorenstein;
    j["oracle_run"] = r.oracle_run;
    if (r.mu_J) {
        j["mu_J"] = *r.mu_J;
    } else {
        j["mu_J"] = nullptr;
    }
    j["mu_J_degrees"] = r.mu_J_degrees;
    j["tilde_J"] = r.tilde_J;
    j["hilbert_gbar"] = r.hilbert_gbar;
    j["consistency"] = nlohmann::json::array();
    for (const auto& c : r.consistency) {
        j["consistency"].push_back(
            {{"name", c.name},
             {"status", c.status == ConsistencyEntry::Status::Pass ? "pass" : "skipped"},
             {"detail", c.detail}});
    }
    return j.dump(2);
}

std::vector<Int> parse_generator_list(std::string_view text) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
            token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
            token.remove_suffix(1);
        if (token.empty())
            throw ParseError("empty entry in generator list '" + std::string(text) + "'");
        Int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || value < 1)
            throw ParseError("invalid generator '" + std::string(token) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw ParseError("empty generator list");
    return out;
}

}  // namespace apery
