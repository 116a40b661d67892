// Suite dispatch, report rendering and the coverage ledger.

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "blchang/errors.hpp"
#include "suites.hpp"

namespace blchang {

namespace {

struct SuiteInfo {
    const char* id;
    const char* title;
    void (*run)(SuiteReport&, const std::vector<AlgebraPtr>&, const GeneratorConfig&);
};

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> s = {
        {"S2", "pseudo-addition (/)", detail::run_element_suite},
        {"S3", "addition +", detail::run_element_suite},
        {"S4", "addition in ordinal sums", detail::run_element_suite},
        {"S5", "identities of BL-chains", detail::run_element_suite},
        {"S6", "the key identity", detail::run_element_suite},
        {"S7", "good sequences", detail::run_sequence_suite},
        {"S8", "the Chang l-group", detail::run_group_suite},
        {"S9", "Godel and product chains", detail::run_concrete_suite},
        {"S10", "the interval functor and its adjoint", detail::run_functor_suite},
    };
    return s;
}

const SuiteInfo& info(std::string_view id) {
    for (const auto& s : suites())
        if (id == s.id)
            return s;
    throw ParseError("unknown suite '" + std::string(id) + "'");
}

std::string fixed_ms(double ms) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(1);
    out << ms;
    return out.str();
}

} // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& s : suites())
            v.emplace_back(s.id);
        return v;
    }();
    return ids;
}

std::string suite_title(std::string_view id) { return info(id).title; }

SuiteReport run_suite(std::string_view id, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config) {
    const auto& s = info(id);
    config.check();
    SuiteReport report;
    report.suite = s.id;
    report.title = s.title;
    report.seed = config.seed;
    const auto start = std::chrono::steady_clock::now();
    s.run(report, corpus, config);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool SuiteReport::passed() const {
    return !properties.empty() &&
           std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed(); });
}

std::size_t SuiteReport::cases() const {
    std::size_t n = 0;
    for (const auto& p : properties)
        n += p.cases;
    return n;
}

std::size_t SuiteReport::failures() const {
    std::size_t n = 0;
    for (const auto& p : properties)
        n += p.failures;
    return n;
}

std::string SuiteReport::render_text(bool with_timing) const {
    std::ostringstream out;
    out << "suite " << suite << ": " << title << " (seed " << seed << ")\n";
    for (const auto& p : properties) {
        out << (p.passed() ? "  [ok]   " : "  [FAIL] ") << p.id << " on " << p.algebra << ": "
            << (p.exhaustive ? "exhaustive, " : "sampled, ") << p.cases << " cases";
        if (p.failures)
            out << ", " << p.failures << " failing";
        if (p.undecided)
            out << ", " << p.undecided << " undecided";
        if (!p.witness.empty()) {
            out << ", witness (";
            for (std::size_t i = 0; i < p.witness.size(); ++i)
                out << (i ? ", " : "") << p.witness[i];
            out << ") after " << p.shrink_steps << " shrink steps";
        }
        if (!p.note.empty())
            out << " [" << p.note << "]";
        out << "\n";
    }
    out << "result: " << (passed() ? "PASS" : "FAIL") << ", " << properties.size() << " properties, " << cases()
        << " cases";
    if (with_timing)
        out << ", " << fixed_ms(elapsed_ms) << " ms";
    out << "\n";
    return out.str();
}

std::string SuiteReport::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["title"] = title;
    j["seed"] = seed;
    j["passed"] = passed();
    j["cases"] = cases();
    j["failures"] = failures();
    if (with_timing)
        j["elapsed_ms"] = elapsed_ms;
    auto& props = j["properties"] = nlohmann::ordered_json::array();
    for (const auto& p : properties) {
        nlohmann::ordered_json r;
        r["id"] = p.id;
        r["statement"] = p.statement;
        r["algebra"] = p.algebra;
        r["passed"] = p.passed();
        r["exhaustive"] = p.exhaustive;
        r["cases"] = p.cases;
        r["failures"] = p.failures;
        r["undecided"] = p.undecided;
        r["witness"] = p.witness;
        r["shrink_steps"] = p.shrink_steps;
        r["note"] = p.note;
        props.push_back(std::move(r));
    }
    return j.dump(2);
}

const std::vector<CoverageEntry>& coverage_ledger() {
    static const std::vector<CoverageEntry> ledger = {
        {"pseudo-addition is associative, monotone, distributive and exchangeable", "S2"},
        {"+ is a commutative monoid with absorbing top, monotone and above both arguments", "S3"},
        {"~~(x + ~x) = 1, and x + y = 1 implies ~x <= y", "S3"},
        {"~~ commutes with +", "S3"},
        {"+ in an ordinal sum is computed in the initial component", "S4"},
        {"identities (i)-(viii) of BL-chains", "S5"},
        {"finite towers of MV-chains are BL-chains", "S5"},
        {"the key identity", "S6"},
        {"good sequences form a conical commutative monoid with identity (0)", "S7"},
        {"sum of good sequences is good and bounded in support", "S7"},
        {"on chains good sequences are (1^p, a) and add by the chain formula", "S7"},
        {"good sequences form a distributive lattice and + distributes over v and ^", "S7"},
        {"projections of good sequences over products", "S7"},
        {"G_L is an abelian l-group with strong unit u_L", "S8"},
        {"[a, b] v 0 = [a v b, b]", "S8"},
        {"decomposition G_L = G_MV(L) x_lex S(L) via theta", "S8"},
        {"S(L) is a convex l-subgroup", "S8"},
        {"cancellative type makes the good-sequence monoid cancellative", "S8"},
        {"decision strategies agree", "S8"},
        {"(1/2) is not (1/4) + a on the product chain", "S8"},
        {"G of a Godel chain is Z", "S9"},
        {"G of the product chain is Z x_lex Q+, with S(L) the group of pairs", "S9"},
        {"G_L is totally ordered exactly over chains", "S9"},
        {"[0, u] of a unital l-group is an MV-algebra", "S10"},
        {"g(a) is the unique good sequence of a positive a", "S10"},
        {"psi is an lu-isomorphism onto G of the interval", "S10"},
        {"eta is a natural BL-morphism into the interval of G_L", "S10"},
        {"morphisms into chains with two-element MV part collapse", "S10"},
        {"Hom(L, 2) = Hom(MV(L), 2)", "S10"},
        {"lex interval maps and distinct lu-morphisms", "S10"},
    };
    return ledger;
}

GlobalVerdict summarize(const std::vector<SuiteReport>& reports) {
    GlobalVerdict v;
    for (const auto& id : suite_ids()) {
        auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) { return r.suite == id; });
        if (it == reports.end())
            v.missing.push_back(id);
        else if (!it->passed())
            v.failed.push_back(id);
    }
    v.pass = v.missing.empty() && v.failed.empty();
    return v;
}

std::string GlobalVerdict::render() const {
    std::ostringstream out;
    out << "global: " << (pass ? "PASS" : "FAIL");
    auto list = [&](const char* label, const std::vector<std::string>& ids) {
        if (ids.empty())
            return;
        out << "; " << label;
        for (const auto& id : ids)
            out << " " << id;
    };
    list("missing", missing);
    list("failed", failed);
    out << "\n";
    return out.str();
}

} // namespace blchang
