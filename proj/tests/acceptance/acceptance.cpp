// Acceptance run: one line per criterion, exact arithmetic throughout.
//
// A criterion fails if any of its properties fails or leaves a case
// undecided, or if it overruns its time budget.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blchang/props.hpp"

namespace {

using namespace blchang;
using Clock = std::chrono::steady_clock;

struct Outcome {
    std::size_t properties = 0;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    std::string note;
};

void absorb(Outcome& out, const SuiteReport& r, const std::function<bool(const std::string&)>& keep) {
    for (const auto& p : r.properties) {
        if (!keep(p.id))
            continue;
        ++out.properties;
        out.cases += p.cases;
        if (p.passed())
            continue;
        std::string line = p.id + " on " + p.algebra + ": " + std::to_string(p.failures) + " failing";
        if (p.undecided)
            line += ", " + std::to_string(p.undecided) + " undecided";
        if (!p.witness.empty()) {
            line += ", witness (";
            for (std::size_t i = 0; i < p.witness.size(); ++i)
                line += (i ? ", " : "") + p.witness[i];
            line += ")";
        }
        out.failures.push_back(line);
    }
}

bool any(const std::string&) { return true; }

std::function<bool(const std::string&)> prefixed(std::vector<std::string> prefixes) {
    return [prefixes = std::move(prefixes)](const std::string& id) {
        for (const auto& p : prefixes)
            if (id.rfind(p, 0) == 0)
                return true;
        return false;
    };
}

GeneratorConfig base_config() {
    GeneratorConfig c;
    c.max_chain_size = 5;
    c.random_products = 0;
    c.element_samples = 10000;
    c.group_samples = 200;
    c.sandwich_samples = 100;
    c.pair_samples = 500;
    return c;
}

Outcome gauntlet() {
    const auto config = base_config();
    const auto corpus = make_corpus(config).all();
    Outcome out;
    for (const char* id : {"S2", "S3", "S4", "S5", "S6", "S7"})
        absorb(out, run_suite(id, corpus, config), any);
    return out;
}

Outcome key_identity() {
    auto config = base_config();
    config.max_chain_size = 6;
    std::vector<AlgebraPtr> corpus;
    for (const auto& a : make_corpus(config).finite())
        if (a->size() <= 6)
            corpus.push_back(a);
    Outcome out;
    absorb(out, run_suite("S6", corpus, config), any);
    return out;
}

// S8, S9 and S10 are each run once and shared among the criteria that read
// them.
const SuiteReport& s8() {
    static const SuiteReport r = [] {
        const auto config = base_config();
        return run_suite("S8", make_corpus(config).all(), config);
    }();
    return r;
}

const SuiteReport& s9() {
    static const SuiteReport r = [] {
        const auto config = base_config();
        return run_suite("S9", make_corpus(config).all(), config);
    }();
    return r;
}

const SuiteReport& s10() {
    static const SuiteReport r = [] {
        const auto config = base_config();
        return run_suite("S10", make_corpus(config).all(), config);
    }();
    return r;
}

Outcome group_laws() {
    Outcome out;
    absorb(out, s8(), [](const std::string& id) { return id != "S8.agree"; });
    return out;
}

Outcome godel() {
    Outcome out;
    absorb(out, s9(), prefixed({"S9.godel-"}));
    return out;
}

Outcome product() {
    Outcome out;
    absorb(out, s9(), prefixed({"S9.product-", "S9.hgroup"}));
    return out;
}

Outcome no_difference() {
    const auto proof = no_difference_case_split();
    Outcome out;
    out.properties = proof.cases.size() + 1;
    out.cases = proof.brute_force_points;
    for (const auto& c : proof.cases)
        if (!c.verified)
            out.failures.push_back("case " + c.condition + ": " + c.evidence);
    if (!proof.brute_force_ok)
        out.failures.push_back("brute force over " + std::to_string(proof.brute_force_points) + " points");
    return out;
}

Outcome round_trip() {
    Outcome out;
    absorb(out, s10(), prefixed({"S10.psi", "S10.g-unique"}));
    return out;
}

Outcome homs() {
    Outcome out;
    absorb(out, s10(), prefixed({"S10.collapse", "S10.center-homs", "S10.lu-maps", "S10.lex-map"}));
    out.note = "Hom(L4, G3) is empty, so the collapse also runs on gamma(prod(Z(u=1), Z(u=2))) -> G3";
    return out;
}

Outcome agreement() {
    Outcome out;
    absorb(out, s8(), [](const std::string& id) { return id == "S8.agree"; });
    return out;
}

struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    Outcome (*run)();
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "S2-S7 on chains of size <= 5, three products and the rational chains", 180, gauntlet},
        {"AC2", "key identity on every corpus algebra of size <= 6", 120, key_identity},
        {"AC3", "Chang group laws, theta and convexity of S(L)", 120, group_laws},
        {"AC4", "Godel chains: G_L = Z, S(L) trivial", 60, godel},
        {"AC5", "product chain: G_L = Z x_lex Q+, h(L) = S(L)", 60, product},
        {"AC6", "no a with (1/2) = (1/4) + a on the product chain", 1, no_difference},
        {"AC7", "psi and g round trip on (Z, n), n = 1..4", 60, round_trip},
        {"AC8", "hom enumeration, collapse, Hom(L,2) and l-maps out of Xi(L)", 60, homs},
        {"AC9", "strategy agreement on the finite corpus", 120, agreement},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        const Outcome o = c.run();
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_budget = secs < c.budget_s;
        const bool ok = o.failures.empty() && in_budget && o.properties > 0;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << ": " << o.properties << " properties, "
             << o.cases << " cases, " << secs << " s (budget " << c.budget_s << " s)";
        std::cout << line.str() << "\n";
        for (const auto& f : o.failures)
            std::cout << "         " << f << "\n";
        if (!in_budget)
            std::cout << "         over budget\n";
        if (!o.note.empty())
            std::cout << "         note: " << o.note << "\n";
        std::cout.flush();
        failed += !ok;
    }
    std::cout << (failed ? "acceptance: FAIL, " + std::to_string(failed) + " of 9 criteria failing"
                         : std::string("acceptance: PASS")) << "\n";
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
