#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "blchang/algebra.hpp"

namespace blchang {

/// A good sequence (a1, a2, ...): a_i + a_{i+1} = a_i for all i, and only
/// finitely many nonzero entries. Stored with trailing zeros trimmed, so the
/// zero sequence (0) has no entries. Leading units are kept: they carry the
/// integer part.
///
/// A GoodSeq remembers the algebra it was built over; combining sequences over
/// different algebra objects throws DomainError.
class GoodSeq {
  public:
    /// Validates membership and the good-sequence law; throws DomainError.
    static GoodSeq make(AlgebraPtr algebra, std::vector<Elt> entries);
    static GoodSeq zero(AlgebraPtr algebra);
    /// (1^m).
    static GoodSeq units(AlgebraPtr algebra, std::size_t m);
    /// Trusted construction; entries must already be good. Trailing zeros are
    /// still trimmed.
    static GoodSeq unchecked(AlgebraPtr algebra, std::vector<Elt> entries);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Elt>& entries() const { return entries_; }
    /// Number of stored (possibly nonzero) entries.
    std::size_t support() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    /// Entry i, 0-based; zero past the support.
    const Elt& at(std::size_t i) const;
    /// Number of leading units.
    std::size_t leading_units() const;

    /// Structural equality of normal forms over the same algebra object.
    friend bool operator==(const GoodSeq& a, const GoodSeq& b);
    /// Structural order on entries (for containers; not the lattice order).
    friend std::strong_ordering operator<=>(const GoodSeq& a, const GoodSeq& b);

  private:
    GoodSeq(AlgebraPtr algebra, std::vector<Elt> entries);

    AlgebraPtr algebra_;
    std::vector<Elt> entries_;
};

/// Every adjacent pair satisfies a_i + a_{i+1} = a_i, reading past the end as 0.
/// Throws DomainError if an entry is not in `a`, UnsupportedShape if `a` is
/// unbounded.
bool is_good(const Algebra& a, const std::vector<Elt>& entries);

/// Sum of good sequences. Uses the chain formula on chains and the general
/// convolution otherwise.
GoodSeq gs_add(const GoodSeq& a, const GoodSeq& b);
/// c_i = a_i + (a_{i-1} * b_1) + ... + (a_1 * b_{i-1}) + b_i.
GoodSeq gs_add_convolution(const GoodSeq& a, const GoodSeq& b);
/// (1^p, a) + (1^q, b) = (1^{p+q}, a+b, a*b). Throws UnsupportedShape off chains.
GoodSeq gs_add_chain(const GoodSeq& a, const GoodSeq& b);
/// n copies of a added together; n = 0 gives (0).
GoodSeq gs_times(std::size_t n, const GoodSeq& a);

GoodSeq gs_join(const GoodSeq& a, const GoodSeq& b);
GoodSeq gs_meet(const GoodSeq& a, const GoodSeq& b);
/// Componentwise order.
bool gs_leq(const GoodSeq& a, const GoodSeq& b);

/// (1^m, a1, a2, ...).
GoodSeq gs_prepend_units(std::size_t m, const GoodSeq& a);
/// Entrywise double negation; good because ~~ commutes with +.
GoodSeq gs_double_neg(const GoodSeq& a);
/// Same entries viewed over another algebra (e.g. a subalgebra or the parent).
/// Throws DomainError if an entry is not in `target`.
GoodSeq gs_rebase(const GoodSeq& a, AlgebraPtr target);
/// Entrywise image under a map that preserves + (a BL-morphism).
template <class F>
GoodSeq gs_map(const GoodSeq& a, AlgebraPtr target, F&& f) {
    std::vector<Elt> out;
    out.reserve(a.support());
    for (const auto& x : a.entries())
        out.push_back(f(x));
    return GoodSeq::make(std::move(target), std::move(out));
}

struct ChainNormalForm {
    std::size_t p = 0;
    /// Possibly 0, meaning the sequence is (1^p).
    Elt tail;
};

/// Reads a chain good sequence as (1^p, tail). Throws UnsupportedShape if the
/// algebra is not a chain.
ChainNormalForm chain_normal_form(const GoodSeq& a);
GoodSeq from_chain_normal_form(AlgebraPtr algebra, std::size_t p, const Elt& tail);

/// Coordinate i of a sequence over a direct product (or a subalgebra of one),
/// as a good sequence over that factor. Throws DomainError if i is out of
/// range, UnsupportedShape for other algebras.
GoodSeq project_goodseq(const GoodSeq& a, std::size_t i);
/// The factor algebras behind project_goodseq.
const std::vector<AlgebraPtr>& product_factors(const Algebra& a);

/// "(a1,a2,...)" with a leading run of p >= 2 units written 1^p; "(0)" for zero.
std::string render(const GoodSeq& a);
/// Accepts the rendered form; any entry may be written x^k for k copies.
/// Throws ParseError, or DomainError if the result is not good.
GoodSeq parse_goodseq(const AlgebraPtr& algebra, std::string_view text);

/// All good sequences of support at most max_len over a finite algebra, in a
/// deterministic order starting with (0). With `first_not_top`, sequences
/// starting with 1 are left out.
std::vector<GoodSeq> enumerate_good_seqs(const AlgebraPtr& algebra, std::size_t max_len, bool first_not_top = false);

/// Random good sequence of support at most max_len. Chains draw (1^p, t);
/// products of chains combine per-factor draws; other finite algebras grow a
/// random good prefix. Throws UnsupportedShape otherwise.
GoodSeq random_good_seq(const AlgebraPtr& algebra, Rng& rng, std::size_t max_len);

} // namespace blchang
