#pragma once

#include <cstdint>
#include <string_view>

#include "blchang/algebra.hpp"

namespace blchang {

/// Resolves an algebra name:
///
///   lukasiewicz:n  godel:n     n-element chains (Ln, Gn are short forms)
///   lukasiewicz:q  godel:q  product:q
///                               rational chains, sampled up to `denominator_cap`
///   tower(A, B, ...)            ordinal sum; later components act as hoops
///   prod(A, B, ...)             direct product
///   gamma(<group descriptor>)   the interval [0, u] of a unital l-group
///
/// Anything else is read as a blalg v1 file. Throws ParseError for malformed
/// names or files, std::runtime_error for unreadable files.
AlgebraPtr resolve_algebra(std::string_view spec,
                           std::uint64_t denominator_cap = StandardChain::kDefaultDenominatorCap);

} // namespace blchang
