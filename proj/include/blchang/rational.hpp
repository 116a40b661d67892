#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace blchang {

/// Exact rational number. Every carrier value and every identity check in the
/// library goes through this type; there is no floating point anywhere.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or "p" for integers.
std::string to_string(const Rational& q);

/// Seeded generator with portable bounded draws (the std distributions are
/// implementation-defined, which would break byte-stable reports).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    /// Rational in [0,1] with denominator at most `denom_cap`.
    Rational unit_rational(std::uint64_t denom_cap);

    /// Independent stream for (seed, salt); suites key their generators this
    /// way so reports do not depend on execution order.
    static Rng stream(std::uint64_t seed, std::uint64_t salt);

    /// Stable 64-bit hash of a label, for use as a stream salt.
    static std::uint64_t salt_of(std::string_view label);

  private:
    std::mt19937_64 engine_;
};

} // namespace blchang
