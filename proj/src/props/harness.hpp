#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "blchang/props.hpp"

namespace blchang::detail {

enum class Outcome { Holds, Fails, Undecided };

inline Outcome holds(bool b) { return b ? Outcome::Holds : Outcome::Fails; }

using Case = std::vector<Value>;
/// Must depend only on the case, so that shrunk cases stay meaningful.
using Check = std::function<Outcome(const Case&)>;

/// A stream of cases. `next` fills its argument and returns false when done.
struct Source {
    bool exhaustive = false;
    std::function<bool(Case&)> next;
};

/// Largest number of tuples enumerated before switching to sampling.
inline constexpr std::size_t kExhaustiveLimit = 1'000'000;

/// All arity-tuples of a finite carrier in lexicographic element order, or
/// `samples` random tuples.
Source element_tuples(const AlgebraPtr& a, std::size_t arity, std::size_t samples, Rng rng);
Source from_list(std::vector<Case> cases, bool exhaustive);
Source sampled(std::size_t n, std::function<Case()> draw);

PropertyRecord run_property(const std::string& id, const std::string& statement, const AlgebraPtr& a, Source source,
                            const Check& check);

std::string render_value(const Value& v, const Algebra& a);

/// Greedy shrinking: replaces one slot at a time by a simpler value (entries
/// dropped from the end of sequences, elements moved toward 0 and 1) while
/// the check still fails.
Case shrink(Case c, const AlgebraPtr& a, const Check& check, std::size_t& steps);

inline const Elt& E(const Case& c, std::size_t i) { return std::get<Elt>(c[i]); }
inline const GoodSeq& S(const Case& c, std::size_t i) { return std::get<GoodSeq>(c[i]); }
inline const GroupElt& G(const Case& c, std::size_t i) { return std::get<GroupElt>(c[i]); }

/// The stream for (config seed, suite, algebra, property).
Rng stream_for(const GeneratorConfig& config, const std::string& suite, const std::string& algebra,
               const std::string& property);

/// Record of a check that is a single verified fact rather than a sweep.
PropertyRecord fact(const std::string& id, const std::string& statement, const std::string& algebra, bool ok,
                    std::size_t cases, std::string note = {});

} // namespace blchang::detail
