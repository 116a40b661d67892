#pragma once

#include <string>
#include <vector>

#include "blchang/algebra.hpp"
#include "blchang/good_seq.hpp"

namespace blchang::test {

inline AlgebraPtr luk(std::size_t n) { return StandardChain::evenly_spaced(ChainKind::Lukasiewicz, n); }
inline AlgebraPtr godel(std::size_t n) { return StandardChain::evenly_spaced(ChainKind::Godel, n); }
inline AlgebraPtr luk_q() { return StandardChain::rationals(ChainKind::Lukasiewicz); }
inline AlgebraPtr godel_q() { return StandardChain::rationals(ChainKind::Godel); }
inline AlgebraPtr product_q() { return StandardChain::rationals(ChainKind::Product); }

/// 2 (+) L3: the 4-chain 0 < b < m < 1 with m*m = b.
inline AlgebraPtr two_plus_l3() { return ordinal_sum({luk(2), luk(3)}); }

inline Elt q(const char* text) { return Elt::rational(parse_rational(text)); }

inline GoodSeq seq(const AlgebraPtr& a, const char* text) { return parse_goodseq(a, text); }

} // namespace blchang::test
