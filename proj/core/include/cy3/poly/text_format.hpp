#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "cy3/poly/sparse_poly.hpp"

namespace cy3::poly {

// Canonical text: one term per line, "coeff v1^e1 v2 ...", terms in
// descending grlex order, exponent written only when > 1. Over F_p the
// coefficient is the symmetric representative in (-p/2, p/2].
std::string format_term(const SparsePoly::Term& t, const RingDescriptor& ring);
std::string to_text(const SparsePoly& p);

// Inverse of to_text. Blank lines and '#' comments are skipped; a missing
// coefficient means 1 ("y1 y2"), a bare '-' prefix means -1 ("-y1").
// `first_line` offsets the line numbers reported in ParseError.
SparsePoly parse_text(const RingDescriptor& ring, std::string_view text, std::size_t first_line = 1);

// Single-line form used inside factorization files: terms joined by "; ",
// the zero polynomial written as "0".
std::string to_inline(const SparsePoly& p);
SparsePoly parse_inline(const RingDescriptor& ring, std::string_view text, std::size_t line = 1);

// Symmetric representative used for printing.
Integer signed_representative(const Integer& c, const RingDescriptor& ring);

}  // namespace cy3::poly
