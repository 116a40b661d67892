#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blchang/element.hpp"
#include "blchang/rational.hpp"

namespace blchang {

enum class Shape { FiniteTable, StandardChain, OrdinalSum, DirectProduct, Subalgebra, Interval };

/// The three continuous t-norm chains.
///   Lukasiewicz: x*y = max(0, x+y-1),  x->y = min(1, 1-x+y)
///   Godel:       x*y = min(x, y),      x->y = 1 if x<=y else y
///   Product:     x*y = xy,             x->y = 1 if x<=y else y/x
enum class ChainKind { Lukasiewicz, Godel, Product };

const char* to_string(ChainKind k);

/// A BL-algebra (or, for ordinal-sum components, a hoop) given concretely.
///
/// Instances are immutable after construction and every operation is a pure
/// function of its arguments, so an algebra can be shared between threads.
/// Public operations check membership of their arguments and throw
/// DomainError on a foreign element.
///
/// Only the monoid operation and its residuum are primitive; the rest is
/// derived:
///   x ^ y  = x * (x -> y)
///   x v y  = ((x -> y) -> y) ^ ((y -> x) -> x)
///   ~x     = x -> 0
///   x (/) y = ~x -> y            (pseudo-addition)
///   x + y  = (x (/) y) ^ (y (/) x)
class Algebra {
  public:
    virtual ~Algebra() = default;

    virtual Shape shape() const = 0;
    /// Short descriptor, e.g. "lukasiewicz:4" or "tower(L2,L3)".
    virtual std::string name() const = 0;

    virtual bool contains(const Elt& x) const = 0;
    void require(const Elt& x) const;

    Elt otimes(const Elt& x, const Elt& y) const;
    Elt imp(const Elt& x, const Elt& y) const;
    Elt meet(const Elt& x, const Elt& y) const;
    Elt join(const Elt& x, const Elt& y) const;
    Elt neg(const Elt& x) const;
    Elt double_neg(const Elt& x) const;
    Elt pseudo_add(const Elt& x, const Elt& y) const;
    Elt add(const Elt& x, const Elt& y) const;
    /// x <= y iff x -> y = 1.
    bool leq(const Elt& x, const Elt& y) const;
    bool lt(const Elt& x, const Elt& y) const { return x != y && leq(x, y); }

    const Elt& top() const { return top_; }
    bool bounded() const { return bottom_.has_value(); }
    /// Throws UnsupportedShape for unbounded hoops.
    const Elt& bottom() const;
    bool is_top(const Elt& x) const { return x == top_; }
    bool is_bottom(const Elt& x) const { return bottom_ && x == *bottom_; }

    virtual bool is_finite() const = 0;
    /// Carrier in a canonical order. Throws UnsupportedShape if infinite.
    const std::vector<Elt>& elements() const;
    std::size_t size() const { return elements().size(); }

    virtual bool is_chain() const = 0;

    /// Random carrier element. Finite algebras draw uniformly; rational
    /// chains draw small-denominator values and favour 0 and 1.
    virtual Elt sample(Rng& rng) const = 0;

    virtual std::string render(const Elt& x) const = 0;
    /// Inverse of render(). Throws ParseError.
    virtual Elt parse_element(std::string_view text) const = 0;

    /// Whether x lies in the bounded initial component of the ordinal-sum
    /// decomposition of this chain, when that decomposition is known.
    virtual std::optional<bool> in_initial_component(const Elt& x) const;

  protected:
    Algebra(Elt top, std::optional<Elt> bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {}

    void set_elements(std::vector<Elt> elements) { elements_ = std::move(elements); }

    virtual Elt do_otimes(const Elt& x, const Elt& y) const = 0;
    virtual Elt do_imp(const Elt& x, const Elt& y) const = 0;
    virtual Elt do_meet(const Elt& x, const Elt& y) const;
    virtual Elt do_join(const Elt& x, const Elt& y) const;
    virtual bool do_leq(const Elt& x, const Elt& y) const;
    /// (x (/) y) ^ (y (/) x); overridden only where a cheaper equal form exists.
    virtual Elt do_add(const Elt& x, const Elt& y) const;

    Elt do_neg(const Elt& x) const { return do_imp(x, bottom()); }

    friend class Subalgebra;
    friend class OrdinalSum;
    friend class DirectProduct;

  private:
    Elt top_;
    std::optional<Elt> bottom_;
    std::vector<Elt> elements_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Algebra given by explicit Cayley tables for the monoid operation and its
/// residuum. Lattice operations are derived from the tables. The tables are
/// only checked for shape here; validate_bl_axioms() checks the laws, so that
/// corrupted tables can be built and diagnosed.
class FiniteTable final : public Algebra {
  public:
    using Table = std::vector<std::vector<std::size_t>>;

    FiniteTable(std::vector<std::string> labels, std::size_t bottom, std::size_t top, Table otimes, Table imp,
                std::string name = "table");

    Shape shape() const override { return Shape::FiniteTable; }
    std::string name() const override { return name_; }
    bool contains(const Elt& x) const override;
    bool is_finite() const override { return true; }
    bool is_chain() const override { return chain_; }
    Elt sample(Rng& rng) const override;
    std::string render(const Elt& x) const override;
    Elt parse_element(std::string_view text) const override;

    const std::vector<std::string>& labels() const { return labels_; }
    const Table& otimes_table() const { return otimes_; }
    const Table& imp_table() const { return imp_; }
    std::size_t bottom_index() const { return bottom().index(); }
    std::size_t top_index() const { return top().index(); }

  protected:
    Elt do_otimes(const Elt& x, const Elt& y) const override;
    Elt do_imp(const Elt& x, const Elt& y) const override;
    Elt do_meet(const Elt& x, const Elt& y) const override;
    Elt do_join(const Elt& x, const Elt& y) const override;

  private:
    std::string name_;
    std::vector<std::string> labels_;
    Table otimes_;
    Table imp_;
    Table meet_;
    Table join_;
    bool chain_ = false;
};

/// A standard chain on exact rationals: either all of Q cap [0,1] or an
/// explicit finite subset closed under the operations. With
/// `include_zero == false` it is the unbounded hoop on the positive part,
/// used as a non-initial ordinal-sum component.
class StandardChain final : public Algebra {
  public:
    static constexpr std::uint64_t kDefaultDenominatorCap = 64;

    /// All rationals in [0,1].
    static std::shared_ptr<const StandardChain> rationals(ChainKind kind,
                                                          std::uint64_t denom_cap = kDefaultDenominatorCap);
    /// Finite carrier; must contain 0 and 1 and be closed under * and ->.
    static std::shared_ptr<const StandardChain> finite(ChainKind kind, std::vector<Rational> carrier);
    /// {0, 1/(n-1), ..., 1}. Closed for Lukasiewicz and Godel; for Product
    /// only n == 2 is closed.
    static std::shared_ptr<const StandardChain> evenly_spaced(ChainKind kind, std::size_t n);
    /// The hoop on the rationals in (0,1]. Only Godel and Product are closed.
    static std::shared_ptr<const StandardChain> positive_hoop(ChainKind kind,
                                                              std::uint64_t denom_cap = kDefaultDenominatorCap);

    Shape shape() const override { return Shape::StandardChain; }
    std::string name() const override;
    bool contains(const Elt& x) const override;
    bool is_finite() const override { return carrier_.has_value(); }
    bool is_chain() const override { return true; }
    Elt sample(Rng& rng) const override;
    std::string render(const Elt& x) const override;
    Elt parse_element(std::string_view text) const override;
    std::optional<bool> in_initial_component(const Elt& x) const override;

    ChainKind kind() const { return kind_; }
    bool has_finite_carrier() const { return carrier_.has_value(); }
    std::uint64_t denominator_cap() const { return denom_cap_; }

    static Rational t_norm(ChainKind kind, const Rational& x, const Rational& y);
    static Rational residuum(ChainKind kind, const Rational& x, const Rational& y);

  protected:
    Elt do_otimes(const Elt& x, const Elt& y) const override;
    Elt do_imp(const Elt& x, const Elt& y) const override;
    Elt do_meet(const Elt& x, const Elt& y) const override;
    Elt do_join(const Elt& x, const Elt& y) const override;
    bool do_leq(const Elt& x, const Elt& y) const override;

  private:
    StandardChain(ChainKind kind, std::optional<std::vector<Rational>> carrier, bool include_zero,
                  std::uint64_t denom_cap);

    ChainKind kind_;
    std::optional<std::vector<Rational>> carrier_;
    bool include_zero_;
    std::uint64_t denom_cap_;
};

/// Ordinal sum of a tower of hoops glued along a shared top. Component 0 must
/// be bounded (its bottom is the bottom of the sum); for later components the
/// bottom, if any, is an ordinary element. Elements are Summand(i, x) with the
/// shared top normalised to Summand(0, top of component 0).
class OrdinalSum final : public Algebra {
  public:
    explicit OrdinalSum(std::vector<AlgebraPtr> components, std::string name = {});

    Shape shape() const override { return Shape::OrdinalSum; }
    std::string name() const override { return name_; }
    bool contains(const Elt& x) const override;
    bool is_finite() const override;
    bool is_chain() const override;
    Elt sample(Rng& rng) const override;
    std::string render(const Elt& x) const override;
    Elt parse_element(std::string_view text) const override;
    std::optional<bool> in_initial_component(const Elt& x) const override;

    const std::vector<AlgebraPtr>& components() const { return components_; }
    /// Element x of component i, as an element of the sum.
    Elt embed(std::size_t i, const Elt& x) const;
    std::size_t component_of(const Elt& x) const { return x.index(); }

  protected:
    Elt do_otimes(const Elt& x, const Elt& y) const override;
    Elt do_imp(const Elt& x, const Elt& y) const override;

  private:
    std::vector<AlgebraPtr> components_;
    std::string name_;
};

/// Builds the ordinal sum; a single component is returned unchanged.
/// Throws ConstructionError if the list is empty or component 0 is unbounded.
AlgebraPtr ordinal_sum(std::vector<AlgebraPtr> components, std::string name = {});

/// Cartesian product with componentwise operations.
class DirectProduct final : public Algebra {
  public:
    explicit DirectProduct(std::vector<AlgebraPtr> factors, std::string name = {});

    Shape shape() const override { return Shape::DirectProduct; }
    std::string name() const override { return name_; }
    bool contains(const Elt& x) const override;
    bool is_finite() const override;
    bool is_chain() const override;
    Elt sample(Rng& rng) const override;
    std::string render(const Elt& x) const override;
    Elt parse_element(std::string_view text) const override;

    const std::vector<AlgebraPtr>& factors() const { return factors_; }

  protected:
    Elt do_otimes(const Elt& x, const Elt& y) const override;
    Elt do_imp(const Elt& x, const Elt& y) const override;

    Elt do_meet(const Elt& x, const Elt& y) const override;
    Elt do_join(const Elt& x, const Elt& y) const override;
    bool do_leq(const Elt& x, const Elt& y) const override;
    Elt do_add(const Elt& x, const Elt& y) const override;

  private:
    std::vector<AlgebraPtr> factors_;
    std::string name_;
};

/// Subset of a parent algebra closed under the operations and containing 0
/// and 1. The carrier is explicit (finite) or the whole parent.
class Subalgebra final : public Algebra {
  public:
    /// Throws ConstructionError if an explicit carrier is not closed.
    Subalgebra(AlgebraPtr parent, std::optional<std::vector<Elt>> carrier, std::string name = {});

    Shape shape() const override { return Shape::Subalgebra; }
    std::string name() const override { return name_; }
    bool contains(const Elt& x) const override;
    bool is_finite() const override { return carrier_.has_value() || parent_->is_finite(); }
    bool is_chain() const override { return chain_; }
    Elt sample(Rng& rng) const override;
    std::string render(const Elt& x) const override { return parent_->render(x); }
    Elt parse_element(std::string_view text) const override;
    std::optional<bool> in_initial_component(const Elt& x) const override;

    const AlgebraPtr& parent() const { return parent_; }
    bool is_whole() const { return !carrier_.has_value(); }

  protected:
    Elt do_otimes(const Elt& x, const Elt& y) const override { return parent_->do_otimes(x, y); }
    Elt do_imp(const Elt& x, const Elt& y) const override { return parent_->do_imp(x, y); }
    Elt do_meet(const Elt& x, const Elt& y) const override { return parent_->do_meet(x, y); }
    Elt do_join(const Elt& x, const Elt& y) const override { return parent_->do_join(x, y); }
    bool do_leq(const Elt& x, const Elt& y) const override { return parent_->do_leq(x, y); }
    Elt do_add(const Elt& x, const Elt& y) const override { return parent_->do_add(x, y); }

  private:
    AlgebraPtr parent_;
    std::optional<std::vector<Elt>> carrier_;
    std::string name_;
    bool chain_ = false;
};

/// A finite algebra re-expressed as Cayley tables. `source[i]` is the element
/// of the original algebra that became table index i.
struct Tabulation {
    std::shared_ptr<const FiniteTable> table;
    std::vector<Elt> source;
    std::map<Elt, std::size_t> index_of;
};

Tabulation tabulate(const Algebra& a);

/// Whether `a` is a direct product (or a subalgebra of one) all of whose
/// factors are chains.
bool is_product_of_chains(const Algebra& a);

} // namespace blchang
