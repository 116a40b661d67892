#pragma once

#include <vector>

#include "blchang/chang_group.hpp"
#include "blchang/props.hpp"
#include "harness.hpp"

namespace blchang::detail {

void run_element_suite(SuiteReport& report, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config);
void run_sequence_suite(SuiteReport& report, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config);
void run_group_suite(SuiteReport& report, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config);
void run_concrete_suite(SuiteReport& report, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config);
void run_functor_suite(SuiteReport& report, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config);

/// Cancellative when licensed, else ChainSearch when it applies, else
/// BoundedGeneral with the default bound.
Strategy preferred_strategy(const ChangGroup& G);

/// Three-valued answers of the group decisions.
enum class Tri { True, False, Unknown };

inline Tri tri(EqDecision d) {
    return d == EqDecision::Equal ? Tri::True : d == EqDecision::NotEqual ? Tri::False : Tri::Unknown;
}
inline Tri tri(OrderDecision d) {
    return d == OrderDecision::Leq ? Tri::True : d == OrderDecision::NotLeq ? Tri::False : Tri::Unknown;
}
inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }

inline Tri operator&&(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False)
        return Tri::False;
    return a == Tri::True && b == Tri::True ? Tri::True : Tri::Unknown;
}

inline Outcome outcome(Tri t) {
    return t == Tri::True ? Outcome::Holds : t == Tri::False ? Outcome::Fails : Outcome::Undecided;
}

/// "a implies b": vacuous when a is false, undecided when a is unknown.
inline Outcome implies(Tri a, Tri b) {
    if (a == Tri::False)
        return Outcome::Holds;
    if (a == Tri::Unknown)
        return Outcome::Undecided;
    return outcome(b);
}

struct Judge {
    const ChangGroup& G;
    Strategy s;

    Tri eq(const GroupElt& g, const GroupElt& h) const { return tri(G.eq(g, h, s)); }
    Tri leq(const GroupElt& g, const GroupElt& h) const { return tri(G.leq(g, h, s)); }
};

} // namespace blchang::detail
