#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "blchang/algebra.hpp"
#include "blchang/chang_group.hpp"
#include "blchang/validate.hpp"

namespace blchang {

class LGroup;
using LGroupPtr = std::shared_ptr<const LGroup>;

/// A concrete lattice-ordered abelian group with a strong unit.
///
/// Values are Elts: integers and positive rationals are Rational elements,
/// product and lex values are tuples. The group operation is written
/// additively throughout, even for the multiplicative group Q+.
///
///   Z(u=n)        integers, unit n > 0
///   Qpos(u=r)     (Q+, *, <=), unit r > 1 (default 2)
///   prod(G,H,..)  componentwise order, unit componentwise
///   lex(G,H)      lexicographic order, unit (u_G, 0); G must be totally
///                 ordered and neither factor may itself be a lex product
class LGroup {
  public:
    enum class Kind { Integers, PositiveRationals, Product, Lex };

    /// Throws ConstructionError for a non-positive unit.
    static LGroupPtr integers(std::int64_t unit);
    static LGroupPtr positive_rationals(Rational unit = 2);
    static LGroupPtr product(std::vector<LGroupPtr> factors);
    /// Throws ConstructionError if `first` is not totally ordered or a lex
    /// product is nested.
    static LGroupPtr lex(LGroupPtr first, LGroupPtr second);

    Kind kind() const { return kind_; }
    const std::vector<LGroupPtr>& factors() const { return factors_; }
    /// Descriptor text, parseable by parse_lgroup().
    std::string name() const;
    bool is_total() const;

    const Elt& zero() const { return zero_; }
    const Elt& unit() const { return unit_; }
    bool contains(const Elt& v) const;

    Elt add(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt sub(const Elt& a, const Elt& b) const { return add(a, neg(b)); }
    Elt times(std::int64_t n, const Elt& a) const;

    bool leq(const Elt& a, const Elt& b) const;
    bool lt(const Elt& a, const Elt& b) const { return a != b && leq(a, b); }
    Elt meet(const Elt& a, const Elt& b) const;
    Elt join(const Elt& a, const Elt& b) const;
    /// a v 0.
    Elt positive_part(const Elt& a) const { return join(a, zero_); }
    /// -a v 0.
    Elt negative_part(const Elt& a) const { return join(neg(a), zero_); }

    std::string render(const Elt& v) const;
    /// Throws ParseError.
    Elt parse_value(std::string_view text) const;

    /// An arbitrary value, roughly within [-spread*u, spread*u].
    Elt sample(Rng& rng, std::int64_t spread = 3) const;
    /// A value of the interval [0, u].
    Elt sample_interval(Rng& rng) const;
    /// Whether [0, u] is finite, and its values when it is.
    bool interval_finite() const;
    std::vector<Elt> interval_elements() const;

  private:
    LGroup(Kind kind, std::vector<LGroupPtr> factors, Rational scalar_unit);

    Elt sample_sign(Rng& rng, int sign) const;

    Kind kind_;
    std::vector<LGroupPtr> factors_;
    Elt zero_;
    Elt unit_;
};

/// Parses the descriptor syntax above. Throws ParseError.
LGroupPtr parse_lgroup(std::string_view text);

/// The interval [0, u] of a unital l-group as an MV-algebra:
///   x * y  = u - ((2u - x - y) ^ u)
///   x -> y = (u - x + y) ^ u
class GammaAlgebra final : public Algebra {
  public:
    explicit GammaAlgebra(LGroupPtr group);

    Shape shape() const override { return Shape::Interval; }
    std::string name() const override { return "gamma(" + group_->name() + ")"; }
    bool contains(const Elt& x) const override;
    bool is_finite() const override { return group_->interval_finite(); }
    bool is_chain() const override { return group_->is_total(); }
    Elt sample(Rng& rng) const override { return group_->sample_interval(rng); }
    std::string render(const Elt& x) const override { return group_->render(x); }
    Elt parse_element(std::string_view text) const override;
    std::optional<bool> in_initial_component(const Elt&) const override { return true; }

    const LGroupPtr& group() const { return group_; }

  protected:
    Elt do_otimes(const Elt& x, const Elt& y) const override;
    Elt do_imp(const Elt& x, const Elt& y) const override;
    Elt do_meet(const Elt& x, const Elt& y) const override { return group_->meet(x, y); }
    Elt do_join(const Elt& x, const Elt& y) const override { return group_->join(x, y); }
    bool do_leq(const Elt& x, const Elt& y) const override { return group_->leq(x, y); }

  private:
    LGroupPtr group_;
};

using GammaPtr = std::shared_ptr<const GammaAlgebra>;

inline GammaPtr gamma_interval(LGroupPtr group) { return std::make_shared<const GammaAlgebra>(std::move(group)); }

/// The good sequence (a1, ..., an) over [0, u] with a = a1 + ... + an, built
/// greedily: a1 = a ^ u, then the same for a - a1. Throws DomainError if a is
/// not positive.
GoodSeq good_seq_of_positive(const GammaPtr& interval, const Elt& a);
/// a1 + ... + an computed in the group.
Elt sum_in_group(const GammaAlgebra& interval, const GoodSeq& s);

/// [g(a+), g(a-)] in the Chang group of the interval algebra. Throws
/// DomainError unless G is built over a GammaAlgebra.
GroupElt psi(const ChangGroup& G, const Elt& a);
/// Sum of the positive side minus sum of the negative side.
Elt psi_inverse(const ChangGroup& G, const GroupElt& g);

/// [(~~a), (0)].
GroupElt eta(const ChangGroup& G, const Elt& a);

/// Result of checking that a map preserves the structure it claims.
struct MorphismCheck {
    bool ok = true;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    /// Law that failed, e.g. "f(x*y) = f(x)*f(y)".
    std::string law;
    std::vector<Elt> witness;
};

using EltMap = std::function<Elt(const Elt&)>;

/// Checks that f preserves *, ->, 0 and 1 (hence all derived operations).
/// Exhaustive on finite domains, otherwise on config.budget seeded pairs.
MorphismCheck check_bl_morphism(const Algebra& dom, const Algebra& cod, const EltMap& f,
                                const ValidationConfig& config = {});

/// Checks that f is a group homomorphism preserving the unit, meet and join,
/// on `samples` seeded pairs.
MorphismCheck check_lu_morphism(const LGroup& dom, const LGroup& cod, const EltMap& f, std::size_t samples,
                                std::uint64_t seed);

/// A BL-morphism, validated when built.
class BLMorphism {
  public:
    /// `images[i]` is the image of dom->elements()[i]. Throws
    /// ConstructionError if the table is not a morphism.
    static BLMorphism from_table(AlgebraPtr dom, AlgebraPtr cod, std::vector<Elt> images);
    /// Closed-form map, certified on sampled points (or all points of a finite
    /// domain). Throws ConstructionError on a failed check.
    static BLMorphism closed_form(AlgebraPtr dom, AlgebraPtr cod, EltMap f, std::string name,
                                  const ValidationConfig& config = {});
    static BLMorphism identity(AlgebraPtr a);

    const AlgebraPtr& domain() const { return dom_; }
    const AlgebraPtr& codomain() const { return cod_; }
    const std::string& name() const { return name_; }
    const MorphismCheck& certificate() const { return check_; }
    Elt operator()(const Elt& x) const { return f_(x); }
    /// Images of the domain elements, in domain order (finite domains only).
    std::vector<Elt> table() const;

  private:
    BLMorphism(AlgebraPtr dom, AlgebraPtr cod, EltMap f, std::string name, MorphismCheck check);

    AlgebraPtr dom_;
    AlgebraPtr cod_;
    EltMap f_;
    std::string name_;
    MorphismCheck check_;
};

/// "x->f(x), ..." over a finite domain.
std::string render_table(const BLMorphism& f);

/// Xi(f)[a, b] = [f(a), f(b)], an element of the Chang group GY of the
/// codomain. Throws DomainError on mismatched algebras.
GroupElt xi_map(const BLMorphism& f, const ChangGroup& GY, const GroupElt& g);

/// Default carrier-size cap for enumerate_homs.
inline constexpr std::size_t kHomCarrierCap = 16;

/// Every BL-morphism A -> B, by backtracking over images in B's element
/// order; the result is sorted by table. Throws UnsupportedShape for infinite
/// algebras and for carriers larger than `cap`.
std::vector<BLMorphism> enumerate_homs(const AlgebraPtr& A, const AlgebraPtr& B, std::size_t cap = kHomCarrierCap);

/// For f: A -> L with A an MV-algebra and MV(L) = {0, 1}: every a <= ~a must go
/// to 0 and every a >= ~a to 1.
struct CollapseCheck {
    bool applies = false;
    bool holds = true;
    std::vector<Elt> witness;
};
CollapseCheck check_two_valued_collapse(const BLMorphism& f);

} // namespace blchang
