#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "blchang/algebra.hpp"
#include "blchang/chang_group.hpp"
#include "blchang/good_seq.hpp"

namespace blchang {

/// Knobs for corpus generation and the verification suites. The same config
/// always yields the same corpus and byte-identical reports (timing aside).
struct GeneratorConfig {
    /// Largest finite chain in the corpus (at most 8).
    std::size_t max_chain_size = 5;
    std::size_t max_tower_components = 5;
    /// Factors per random product.
    std::size_t product_arity = 2;
    /// Random products of small generated chains, on top of the fixed ones.
    std::size_t random_products = 2;
    /// Tuples drawn per property on infinite carriers.
    std::size_t element_samples = 10000;
    /// Triples of good sequences drawn when enumeration is too large.
    std::size_t sequence_samples = 2000;
    /// Random classes per algebra for the group suites.
    std::size_t group_samples = 200;
    std::size_t sandwich_samples = 100;
    /// Class pairs for the concrete isomorphism checks.
    std::size_t pair_samples = 500;
    std::uint64_t denominator_cap = StandardChain::kDefaultDenominatorCap;
    std::uint64_t seed = 1;

    /// Throws ConstructionError if a bound is zero or the chain size exceeds 8.
    void check() const;
};

/// Every ordinal sum of a tower of finite MV-chains with at most `n` elements
/// (and at least 2), at most `max_components` components. Component 0 is
/// L_k; later components are L_k read as hoops, adding k - 1 elements each.
/// Ordered by size, then by the tower shape. Throws ConstructionError for
/// n > 8.
std::vector<AlgebraPtr> gen_finite_bl_chains(std::size_t n,
                                             std::size_t max_components = std::numeric_limits<std::size_t>::max());

/// The chains of gen_finite_bl_chains with exactly `n` elements.
std::vector<AlgebraPtr> finite_bl_chains_of_size(std::size_t n);

/// L2 x L3, G3 x L3 and (2 (+) L3) x L2.
std::vector<AlgebraPtr> fixed_products();

struct Corpus {
    std::vector<AlgebraPtr> chains;
    std::vector<AlgebraPtr> products;
    /// Lukasiewicz, Godel and product chains on the rationals.
    std::vector<AlgebraPtr> rational;

    std::vector<AlgebraPtr> finite() const;
    std::vector<AlgebraPtr> all() const;
};

Corpus make_corpus(const GeneratorConfig& config);

/// A witness slot: an element, a good sequence or a group element.
using Value = std::variant<Elt, GoodSeq, GroupElt>;

/// One checked property on one algebra.
struct PropertyRecord {
    std::string id;
    std::string statement;
    std::string algebra;
    bool exhaustive = false;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// Cases where a group decision came back Unknown.
    std::size_t undecided = 0;
    /// Rendered witness after shrinking, one entry per variable.
    std::vector<std::string> witness;
    std::size_t shrink_steps = 0;
    std::string note;

    bool passed() const { return failures == 0 && undecided == 0; }
};

struct SuiteReport {
    std::string suite;
    std::string title;
    std::uint64_t seed = 0;
    std::vector<PropertyRecord> properties;
    double elapsed_ms = 0;

    bool passed() const;
    std::size_t cases() const;
    std::size_t failures() const;
    /// Human-readable report, one line per property.
    std::string render_text(bool with_timing = true) const;
    /// JSON object with stable field names, one record per property.
    std::string to_json(bool with_timing = true) const;
};

/// "S2" .. "S10".
const std::vector<std::string>& suite_ids();
std::string suite_title(std::string_view id);

/// Runs one suite. S2-S8 iterate over `corpus`; S9 and S10 work on their own
/// fixed models (Godel and product chains, interval algebras of unital
/// l-groups) and use the corpus only where a statement quantifies over it.
/// Throws ParseError for an unknown id.
SuiteReport run_suite(std::string_view id, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config);

/// Statement covered, and the suite that checks it.
struct CoverageEntry {
    std::string statement;
    std::string suite;
};
const std::vector<CoverageEntry>& coverage_ledger();

/// Global verdict over a set of reports: PASS only if every suite in the
/// coverage ledger ran and passed.
struct GlobalVerdict {
    bool pass = false;
    std::vector<std::string> missing;
    std::vector<std::string> failed;
    std::string render() const;
};
GlobalVerdict summarize(const std::vector<SuiteReport>& reports);

/// Searches a failing assignment of `formula` over the corpus. Syntax:
///
///   formula  := [atom {";" atom} "=>"] atom
///   atom     := term ("=" | "<=" | "<" | "!=") term
///   term     := imp;  imp := join ["->" imp]
///   join     := meet {"\/" meet};  meet := sum {"/\" sum}
///   sum      := prod {("+" | "(/)") prod};  prod := unary {"*" unary}
///   unary    := "~" unary | "0" | "1" | variable | "(" term ")"
///
/// The unicode symbols of the signature are accepted as well. Finite algebras
/// are searched exhaustively in element order, infinite ones on `samples`
/// seeded assignments. Throws ParseError on malformed input.
struct Counterexample {
    bool found = false;
    std::string algebra;
    std::vector<std::pair<std::string, std::string>> assignment;
    std::size_t cases = 0;
    bool exhaustive = true;

    std::string render() const;
};
Counterexample find_counterexample(std::string_view formula, const std::vector<AlgebraPtr>& corpus,
                                   std::size_t samples = 10000, std::uint64_t seed = 1);

/// The machine-checked case split showing that no good sequence a over the
/// rational product chain satisfies (1/2) = (1/4) + a.
struct CaseSplitProof {
    struct Case {
        std::string condition;
        std::string claim;
        bool verified = false;
        std::string evidence;
    };
    std::vector<Case> cases;
    /// Every x in the chain with denominator <= the cap, checked directly.
    std::size_t brute_force_points = 0;
    bool brute_force_ok = false;

    bool holds() const;
    std::string render() const;
};
CaseSplitProof no_difference_case_split(std::uint64_t denominator_cap = StandardChain::kDefaultDenominatorCap);

} // namespace blchang
