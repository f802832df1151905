#include "cy3/mf/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cy3/error.hpp"
#include "cy3/poly/text_format.hpp"

namespace cy3::mf {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({no, std::move(t)});
  }
  return out;
}

template <class T>
T header_field(const std::vector<std::string>& tok, std::size_t i, const char* name, std::size_t line) {
  if (i >= tok.size()) throw ParseError(line, name, "missing");
  T v{};
  const auto& s = tok[i];
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line, name, "not a non-negative integer: '" + s + "'");
  return v;
}

void read_matrix(const std::vector<Line>& lines, std::size_t& pos, const RingDescriptor& ring, std::size_t n,
                 unsigned degree, const char* name, PolyMatrix& out) {
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::string field = std::string(name) + "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
      if (pos >= lines.size()) {
        const std::size_t last = lines.empty() ? 0 : lines.back().number;
        throw ParseError(last + 1, field, "unexpected end of file");
      }
      const Line& l = lines[pos++];
      SparsePoly e;
      try {
        e = poly::parse_inline(ring, l.text, l.number);
      } catch (const ParseError& err) {
        throw ParseError(l.number, field, err.what());
      }
      if (!e.is_homogeneous_of(degree)) {
        throw ParseError(l.number, field, "entry is not homogeneous of degree " + std::to_string(degree));
      }
      out(r, c) = std::move(e);
    }
  }
}

}  // namespace

MFFile parse_mf_file(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(1, "header", "empty file");
  const Line& h = lines.front();
  std::vector<std::string> tok;
  {
    std::istringstream ss(h.text);
    for (std::string t; ss >> t;) tok.push_back(t);
  }
  MFFile file;
  MFFileHeader& hd = file.header;
  hd.n = header_field<std::size_t>(tok, 0, "n", h.number);
  hd.m = header_field<std::size_t>(tok, 1, "m", h.number);
  hd.p = header_field<std::uint32_t>(tok, 2, "p", h.number);
  hd.d = header_field<unsigned>(tok, 3, "d", h.number);
  hd.deg_a = header_field<unsigned>(tok, 4, "degA", h.number);
  hd.deg_b = header_field<unsigned>(tok, 5, "degB", h.number);
  if (tok.size() > 6) throw ParseError(h.number, "header", "expected 6 fields, got " + std::to_string(tok.size()));
  if (hd.n == 0) throw ParseError(h.number, "n", "must be positive");
  if (hd.m == 0 || hd.m > poly::kMaxVars) throw ParseError(h.number, "m", "must be in 1..64");
  if (hd.p < 3 || hd.p >= linalg::PrimeField::kMaxPrime || !poly::is_prime(hd.p)) {
    throw ParseError(h.number, "p", "must be an odd prime below 65536");
  }
  if (hd.deg_a + hd.deg_b != hd.d) throw ParseError(h.number, "d", "degA + degB must equal d");

  const RingDescriptor ring{hd.m, hd.p, "x"};
  std::size_t pos = 1;
  file.d1 = PolyMatrix(ring, hd.n, hd.n);
  read_matrix(lines, pos, ring, hd.n, hd.deg_a, "d1", file.d1);
  if (pos < lines.size() && lines[pos].text == "SELF") {
    if (hd.deg_a != hd.deg_b) throw ParseError(lines[pos].number, "SELF", "needs degA = degB");
    hd.self_adjoint = true;
    file.d0 = file.d1;
    ++pos;
  } else {
    file.d0 = PolyMatrix(ring, hd.n, hd.n);
    read_matrix(lines, pos, ring, hd.n, hd.deg_b, "d0", file.d0);
  }
  if (pos < lines.size()) throw ParseError(lines[pos].number, "trailing", "unexpected content after the matrices");

  SparsePoly f(ring);
  for (std::size_t k = 0; k < hd.n; ++k) f += file.d0(0, k) * file.d1(k, 0);
  if (f.is_zero()) throw ParseError(h.number, "d", "(d0 d1)(1,1) is zero, so f cannot be read off");
  file.f = std::move(f);
  return file;
}

MFFile read_mf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_mf_file(in);
}

GradedMF load_factorization(const MFFile& file) {
  const std::size_t n = file.header.n;
  return GradedMF::create(file.f, file.d1, file.d0, std::vector<int>(n, static_cast<int>(file.header.deg_a)),
                          std::vector<int>(n, 0));
}

void write_mf_file(std::ostream& out, const GradedMF& mf, bool self_adjoint) {
  if (!mf.uniform_twists()) throw std::invalid_argument("write_mf_file: the file format has uniform twists only");
  if (self_adjoint && !(mf.d0() == mf.d1())) throw std::invalid_argument("write_mf_file: d0 differs from d1");
  const std::size_t n = mf.size();
  const int a = mf.d1_degree(0, 0);
  out << n << ' ' << mf.ring().num_vars << ' ' << mf.ring().characteristic << ' ' << mf.degree() << ' ' << a << ' '
      << mf.degree() - a << '\n';
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out << poly::to_inline(mf.d1()(r, c)) << '\n';
  }
  if (self_adjoint) {
    out << "SELF\n";
    return;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out << poly::to_inline(mf.d0()(r, c)) << '\n';
  }
}

}  // namespace cy3::mf
