#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "blchang/rational.hpp"

namespace blchang {

/// A value of some algebra. Elements are plain values: which algebra they
/// belong to is decided by that algebra's membership test, so an element of a
/// subalgebra is literally an element of its parent.
///
///  - Index:    position in a finite Cayley table.
///  - Rational: exact value of a standard chain (or an integer/rational
///              coordinate of an interval algebra).
///  - Summand:  (component number, element of that component) in an ordinal sum.
///  - Tuple:    coordinates in a direct product.
class Elt {
  public:
    enum class Kind : unsigned char { Index, Rational, Summand, Tuple };

    Elt() = default;

    static Elt index(std::size_t i);
    static Elt rational(Rational q);
    static Elt summand(std::size_t component, Elt inner);
    static Elt tuple(std::vector<Elt> parts);

    Kind kind() const { return kind_; }
    bool is(Kind k) const { return kind_ == k; }

    /// Table index (Index) or component number (Summand).
    std::size_t index() const { return index_; }
    const Rational& value() const { return value_; }
    /// Element inside its ordinal-sum component.
    const Elt& inner() const { return parts_.front(); }
    const std::vector<Elt>& parts() const { return parts_; }

    friend bool operator==(const Elt& a, const Elt& b);
    /// Structural total order, used for containers and deterministic output.
    /// It is not the lattice order of any algebra.
    friend std::strong_ordering operator<=>(const Elt& a, const Elt& b);

  private:
    Kind kind_ = Kind::Index;
    std::size_t index_ = 0;
    Rational value_;
    std::vector<Elt> parts_;
};

} // namespace blchang
