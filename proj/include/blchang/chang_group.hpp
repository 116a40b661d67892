#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "blchang/good_seq.hpp"
#include "blchang/structure.hpp"

namespace blchang {

/// A formal difference [pos, neg] of good sequences. Equality of classes is a
/// decision procedure (ChangGroup::eq); operator== is structural only.
class GroupElt {
  public:
    /// Throws DomainError if the sides live over different algebras.
    GroupElt(GoodSeq pos, GoodSeq neg);

    const GoodSeq& pos() const { return pos_; }
    const GoodSeq& neg() const { return neg_; }
    const AlgebraPtr& algebra() const { return pos_.algebra(); }

    friend bool operator==(const GroupElt& g, const GroupElt& h) { return g.pos_ == h.pos_ && g.neg_ == h.neg_; }

  private:
    GoodSeq pos_;
    GoodSeq neg_;
};

std::string render(const GroupElt& g);

enum class EqDecision { Equal, NotEqual, Unknown };
enum class OrderDecision { Leq, NotLeq, Unknown };

const char* to_string(EqDecision d);
const char* to_string(OrderDecision d);

/// How to decide [a,b] ~ [c,d], i.e. whether a+d+k = b+c+k for some k.
///
///  - Cancellative: compare a+d and b+c directly. Only sound on algebras of
///    cancellative type; refused elsewhere.
///  - ChainSearch: on a chain every witness reduces to a one-entry sequence
///    (t), because k = (1^m) + k' and prepending units is injective. t ranges
///    over the carrier of a finite chain, or over the values generated from
///    the inputs by *, + and ^ (plus 0 and 1) on an infinite one, capped at
///    kClosureCap values; hitting the cap gives Unknown. Full direct products of
///    chains are decided factor by factor.
///  - BoundedGeneral: try every k of support <= bound whose first entry is
///    not 1. Only ever answers Equal/Leq or Unknown.
struct Strategy {
    enum class Kind { Cancellative, ChainSearch, BoundedGeneral };

    Kind kind = Kind::ChainSearch;
    /// BoundedGeneral support bound; 0 selects the group's default.
    std::size_t bound = 0;

    static Strategy cancellative() { return {Kind::Cancellative, 0}; }
    static Strategy chain_search() { return {Kind::ChainSearch, 0}; }
    static Strategy bounded(std::size_t b = 0) { return {Kind::BoundedGeneral, b}; }
};

std::string to_string(const Strategy& s);

/// Witness values tried by ChainSearch on infinite chains.
inline constexpr std::size_t kClosureCap = 512;

struct ThetaParts {
    /// [~~a, ~~b] as an element of the Chang group of the MV-center.
    GroupElt mv_part;
    /// The same class viewed inside G_L.
    GroupElt mv_embedded;
    /// [a + ~~b, b + ~~a], an element of S(L).
    GroupElt s_part;
};

/// The Chang l-group G_L of a BL-algebra L.
///
/// Thread-safe: decisions are memoised in an internal cache guarded by a
/// shared mutex; filling it is idempotent.
class ChangGroup {
  public:
    explicit ChangGroup(AlgebraPtr algebra);
    ChangGroup(const ChangGroup&) = delete;
    ChangGroup& operator=(const ChangGroup&) = delete;

    const AlgebraPtr& algebra() const { return algebra_; }
    const CancellativeReport& cancellative_type() const { return cancellative_; }
    bool cancellative_licensed() const { return cancellative_.verdict == Verdict::True; }
    /// Whether ChainSearch applies (a chain or a full product of chains).
    bool chain_search_applies() const;
    /// |carrier| + 2 for finite algebras, 3 otherwise.
    std::size_t default_bound() const;

    GroupElt make(GoodSeq a, GoodSeq b) const;
    /// [a, (0)].
    GroupElt of(GoodSeq a) const;
    GroupElt zero() const;
    /// u_L = [(1), (0)].
    GroupElt unit() const;

    GroupElt add(const GroupElt& g, const GroupElt& h) const;
    GroupElt neg(const GroupElt& g) const;
    GroupElt sub(const GroupElt& g, const GroupElt& h) const;
    /// n*g for any integer n.
    GroupElt times(std::int64_t n, const GroupElt& g) const;

    /// [a,b] v [c,d] = [(a+d) v (b+c), b+d].
    GroupElt join(const GroupElt& g, const GroupElt& h) const;
    /// [a,b] ^ [c,d] = [(a+d) ^ (b+c), b+d].
    GroupElt meet(const GroupElt& g, const GroupElt& h) const;

    /// Throws StrategyMisuse if the strategy is not licensed here.
    EqDecision eq(const GroupElt& g, const GroupElt& h, const Strategy& s) const;
    OrderDecision leq(const GroupElt& g, const GroupElt& h, const Strategy& s) const;

    /// A k with a+d+k = b+c+k found by the strategy's search, if any.
    std::optional<GoodSeq> eq_witness(const GroupElt& g, const GroupElt& h, const Strategy& s) const;

    /// Truncated operations of the interval [0, u_L]:
    ///   x * y  = u - ((2u - x - y) ^ u)
    ///   x -> y = (u - x + y) ^ u
    GroupElt interval_otimes(const GroupElt& x, const GroupElt& y) const;
    GroupElt interval_imp(const GroupElt& x, const GroupElt& y) const;

    /// An n with g <= n*u_L: the larger support of the two sides, at least 1.
    std::size_t unit_bound(const GroupElt& g) const;

    /// Entrywise double negations of the two sides agree.
    bool in_S(const GroupElt& g) const;
    /// Throws UnsupportedShape if the MV-center is not representable.
    ThetaParts theta(const GroupElt& g) const;
    /// Chang group of the MV-center; null if unavailable.
    const ChangGroup* mv_group() const { return mv_group_.get(); }
    /// G_{MV(L)} -> G_L induced by inclusion.
    GroupElt embed_mv(const GroupElt& g) const;

    /// Number of memoised decisions (for tests of the cache).
    std::size_t cache_size() const;

  private:
    ChangGroup(AlgebraPtr algebra, bool with_center);

    enum class Relation { Equal, Leq };
    using CacheKey = std::tuple<int, std::size_t, int, GoodSeq, GoodSeq>;

    void require(const GroupElt& g) const;
    void check_strategy(const Strategy& s) const;
    // Decides X + k (= or <=) Y + k for some k; returns the witness when found.
    std::pair<OrderDecision, std::optional<GoodSeq>> decide(const GoodSeq& x, const GoodSeq& y, Relation rel,
                                                            const Strategy& s) const;
    std::pair<OrderDecision, std::optional<GoodSeq>> chain_search(const GoodSeq& x, const GoodSeq& y,
                                                                  Relation rel) const;
    std::pair<OrderDecision, std::optional<GoodSeq>> bounded_search(const GoodSeq& x, const GoodSeq& y, Relation rel,
                                                                    std::size_t bound) const;
    std::shared_ptr<const std::vector<GoodSeq>> bounded_candidates(std::size_t bound, const GoodSeq& x,
                                                                   const GoodSeq& y) const;

    AlgebraPtr algebra_;
    CancellativeReport cancellative_;
    std::vector<std::unique_ptr<ChangGroup>> factor_groups_;
    std::shared_ptr<const Subalgebra> mv_algebra_;
    std::unique_ptr<ChangGroup> mv_group_;

    mutable std::shared_mutex mutex_;
    mutable std::map<CacheKey, std::pair<OrderDecision, std::optional<GoodSeq>>> cache_;
    mutable std::map<std::size_t, std::shared_ptr<const std::vector<GoodSeq>>> candidates_;
};

/// Values generated from `seeds` plus 0 and 1 under *, + and ^, in order of
/// generation. Stops once `cap` values exist; `complete` reports whether the
/// closure was exhausted.
struct Closure {
    std::vector<Elt> values;
    bool complete = false;
};
Closure value_closure(const Algebra& a, const std::vector<Elt>& seeds, std::size_t cap = kClosureCap);

/// Canonical chain representative [(1^p, a), (1^q, b)] with a, b nonzero.
/// p counts the units before the last entry, so (1) is p = 0, a = 1.
struct ChainCanonical {
    std::size_t p = 0;
    Elt a;
    std::size_t q = 0;
    Elt b;
    GroupElt rep;
};

/// Rewrites [(0), b] to [(1), (1, b...)] and [a, (0)] to [(1, a...), (1)].
/// Throws UnsupportedShape off chains.
ChainCanonical chain_canonical(const GroupElt& g);
/// "[(1^p,a),(1^q,b)]".
std::string render_canonical(const ChainCanonical& c, const Algebra& a);

/// For a Godel chain: p - q of the canonical form. Throws UnsupportedShape
/// for other algebras.
std::int64_t godel_to_int(const GroupElt& g);
/// Inverse of godel_to_int: n*u_L.
GroupElt godel_from_int(const ChangGroup& G, std::int64_t n);

struct ProductIsoValue {
    std::int64_t m = 0;
    Rational r;

    friend bool operator==(const ProductIsoValue&, const ProductIsoValue&) = default;
};

/// For a product chain: (p - q, a / b) of the canonical form. Throws
/// UnsupportedShape for other algebras.
ProductIsoValue product_iso(const GroupElt& g);
/// Inverse of product_iso on the canonical representatives.
GroupElt product_iso_inverse(const ChangGroup& G, const ProductIsoValue& v);
/// Lexicographic order on Z x Q+.
bool lex_leq(const ProductIsoValue& x, const ProductIsoValue& y);
/// "phi=(m, p/q)".
std::string render(const ProductIsoValue& v);

/// The group of pairs [a, b] of nonzero elements of a product chain, with
/// [a,b] = [c,d] iff a*d = b*c, [a,b] + [c,d] = [a*c, b*d] and
/// [a,b] <= [c,d] iff a*d <= b*c.
class HGroup {
  public:
    struct Pair {
        Elt a;
        Elt b;
    };

    /// Throws UnsupportedShape unless `algebra` is a bounded product chain.
    explicit HGroup(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    /// Throws DomainError if a component is 0.
    Pair make(const Elt& a, const Elt& b) const;
    Pair identity() const;
    Pair add(const Pair& x, const Pair& y) const;
    Pair neg(const Pair& x) const;
    bool eq(const Pair& x, const Pair& y) const;
    bool leq(const Pair& x, const Pair& y) const;
    /// [a, b] -> [(a), (b)] in S(L).
    GroupElt to_chang(const Pair& x) const;

  private:
    AlgebraPtr algebra_;
};

} // namespace blchang
