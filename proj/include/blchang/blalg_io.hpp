#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "blchang/algebra.hpp"

namespace blchang {

/// Reads the "blalg v1" text format:
///
///     blalg v1
///     elements: 0 a 1
///     bottom: 0
///     top: 1
///     otimes:
///       0 0 0
///       0 a a
///       0 a 1
///     imp:
///       1 1 1
///       0 1 1
///       0 a 1
///
/// Rows are indexed by the left operand. `#` starts a comment. Lattice
/// operations are derived, never read. Throws ParseError with the line number.
std::shared_ptr<const FiniteTable> parse_blalg(std::string_view text, std::string name = "table");

/// Reads a file; the algebra is named after the file. Throws ParseError, or
/// std::runtime_error if the file cannot be read.
std::shared_ptr<const FiniteTable> load_blalg(const std::string& path);

/// Writes a finite algebra in the same format, labelled by render().
std::string write_blalg(const Algebra& a);

} // namespace blchang
