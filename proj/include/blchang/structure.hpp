#pragma once

#include <memory>
#include <string>
#include <vector>

#include "blchang/algebra.hpp"

namespace blchang {

/// The MV-center {~x : x in A}, the image of negation, as a subalgebra of A.
///
/// Finite algebras: computed from the carrier. Standard chains: Lukasiewicz
/// gives the whole chain, Godel and Product give {0, 1}. Ordinal sums,
/// products and subalgebras reduce to their parts when the result is finite
/// or the whole algebra. Anything else throws UnsupportedShape.
std::shared_ptr<const Subalgebra> mv_center(const AlgebraPtr& a);

/// Whether x = ~~x for every x, decided exhaustively on finite carriers and
/// by shape otherwise. Throws UnsupportedShape when neither applies.
bool is_mv_algebra(const Algebra& a);

enum class Verdict { True, False, Undecided };

const char* to_string(Verdict v);

struct CancellativeReport {
    Verdict verdict = Verdict::Undecided;
    /// (x, y, z) with x+y = x+z, x*y = x*z and y != z, when verdict is False.
    std::vector<Elt> witness;
    std::string reason;
};

/// Decides whether `a` is of cancellative type: the quasi-identity
///   x+y = x+z and x*y = x*z  implies  y = z
/// holds in each chain of a subdirect representation.
///
/// Finite chains are checked on all triples, products and subalgebras of
/// products through their factors, and standard chains in closed form. A
/// failing triple in any algebra is conclusive (the quasi-identity passes to
/// subdirect products). Other shapes report Undecided with the reason.
CancellativeReport is_cancellative_type(const Algebra& a);

} // namespace blchang
