#pragma once

#include <iosfwd>
#include <string>

#include "cy3/mf/graded_mf.hpp"

namespace cy3::mf {

// Factorization file:
//
//   # comment
//   n m p d degA degB
//   <n*n lines: d1 entries, row-major, inline polynomial form>
//   SELF | <n*n lines: d0 entries>
//
// Variables are x1..xm over F_p; "SELF" means d0 = d1. Entries use the
// inline form of poly/text_format ("3 x1 x2^2; -x3", "0" for zero). f is
// read off as (d0 d1)(1,1). Blank lines and '#' comments are ignored.
struct MFFileHeader {
  std::size_t n = 0, m = 0;
  std::uint32_t p = 0;
  unsigned d = 0, deg_a = 0, deg_b = 0;
  bool self_adjoint = false;
};

struct MFFile {
  MFFileHeader header;
  PolyMatrix d1, d0;
  SparsePoly f;
};

// Syntax and degree errors throw ParseError with the line and field; the
// factorization identity itself is not checked here (see load_factorization).
MFFile parse_mf_file(std::istream& in);
MFFile read_mf_file(const std::string& path);

// parse + GradedMF::create with twists alpha = degA, beta = 0. A failing
// identity throws MFError.
GradedMF load_factorization(const MFFile& file);

void write_mf_file(std::ostream& out, const GradedMF& mf, bool self_adjoint = false);

}  // namespace cy3::mf
