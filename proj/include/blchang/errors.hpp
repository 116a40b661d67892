#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blchang {

/// An element does not belong to the algebra it was passed to, or two values
/// built over different algebras were combined.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A structure could not be built (malformed table, unbounded initial
/// component of an ordinal sum, carrier not closed, ...).
class ConstructionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The operation is not implemented for this shape of algebra.
class UnsupportedShape : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// An equality strategy was requested on an algebra that does not license it.
class StrategyMisuse : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Text input could not be parsed. `line()` is 1-based, 0 when not
/// applicable.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace blchang
