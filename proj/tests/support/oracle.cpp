#include "oracle.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cy3/poly/basis.hpp"

namespace oracle {

using cy3::poly::Integer;
using cy3::poly::Monomial;
using cy3::poly::PolyMatrix;
using cy3::poly::RingDescriptor;
using cy3::poly::SparsePoly;

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = mod(a, p), e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

int floor_div2(int m) { return m >= 0 ? m / 2 : -((-m + 1) / 2); }

struct Complex {
  const cy3::mf::GradedMF& mf;
  std::size_t n;

  std::size_t size() const { return 2 * n; }
  int pos(std::size_t i) const { return i < n ? 0 : 1; }
  int weight(std::size_t i) const { return i < n ? mf.alpha()[i] : mf.beta()[i - n]; }

  // Entry degree of a degree-k map from summand s to summand t; -1 when the
  // entry is forced to vanish.
  int degree(int k, std::size_t t, std::size_t s) const {
    const int m = pos(s) + k;
    if (((m % 2) + 2) % 2 != pos(t)) return -1;
    const int deg = weight(s) - weight(t) + floor_div2(m) * mf.degree();
    return deg;
  }

  PolyMatrix delta() const {
    PolyMatrix D(mf.ring(), size(), size());
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        D(n + r, c) = mf.d1()(r, c);
        D(c, n + r) = mf.d0()(c, r);
      }
    }
    return D;
  }
};

// Matrix of D_k : (degree k maps) -> (degree k+1 maps) with columns indexed
// by (entry, monomial) of the source space.
Dense differential(const Complex& cx, int k, std::size_t* ncols) {
  const auto& ring = cx.mf.ring();
  const PolyMatrix delta = cx.delta();
  const std::int64_t p = ring.characteristic;
  std::map<std::tuple<std::size_t, std::size_t, Monomial>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> cols;

  for (std::size_t t = 0; t < cx.size(); ++t) {
    for (std::size_t s = 0; s < cx.size(); ++s) {
      const int deg = cx.degree(k, t, s);
      if (deg < 0) continue;
      const cy3::poly::MonomialBasis basis(ring.num_vars, static_cast<unsigned>(deg));
      for (const auto& mono : basis.monomials()) {
        PolyMatrix phi(ring, cx.size(), cx.size());
        phi(t, s) = SparsePoly::monomial(ring, mono);
        const PolyMatrix left = delta * phi, right = phi * delta;
        const PolyMatrix img = (k % 2 == 0) ? left - right : left + right;
        std::vector<std::pair<std::size_t, std::int64_t>> col;
        for (std::size_t i = 0; i < cx.size(); ++i) {
          for (std::size_t j = 0; j < cx.size(); ++j) {
            if (img(i, j).is_zero()) continue;
            if (cx.degree(k + 1, i, j) < 0 || !img(i, j).is_homogeneous_of(static_cast<unsigned>(cx.degree(k + 1, i, j)))) {
              throw std::logic_error("oracle: differential leaves the graded pieces");
            }
            for (const auto& term : img(i, j).terms()) {
              const auto key = std::make_tuple(i, j, term.monomial);
              auto it = row_of.find(key);
              if (it == row_of.end()) it = row_of.emplace(key, row_of.size()).first;
              col.emplace_back(it->second, mod(term.coeff.get_si(), p));
            }
          }
        }
        cols.push_back(std::move(col));
      }
    }
  }
  *ncols = cols.size();
  Dense m(row_of.size(), std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [r, v] : cols[c]) m[r][c] = mod(m[r][c] + v, p);
  }
  return m;
}

}  // namespace

std::size_t dense_rank(Dense m, std::uint32_t p) {
  const std::int64_t P = p;
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && mod(m[piv][c], P) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t inv = inverse(m[rank][c], P);
    for (auto& x : m[rank]) x = mod(x, P) * inv % P;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const std::int64_t f = mod(m[r][c], P);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = mod(m[r][j] - f * m[rank][j], P);
    }
    ++rank;
  }
  return rank;
}

bool in_kernel(const Dense& m, const std::vector<std::int64_t>& x, std::uint32_t p) {
  for (const auto& row : m) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s = mod(s + row[j] * x[j], p);
    if (s != 0) return false;
  }
  return true;
}

Cohomology mapping_cohomology(const cy3::mf::GradedMF& mf, int k) {
  const Complex cx{mf, mf.size()};
  const std::uint32_t p = mf.ring().characteristic;
  std::size_t n_k = 0, n_prev = 0;
  const Dense Dk = differential(cx, k, &n_k);
  const Dense Dprev = differential(cx, k - 1, &n_prev);
  Cohomology h;
  h.cocycles = n_k - dense_rank(Dk, p);
  h.coboundaries = dense_rank(Dprev, p);
  return h;
}

std::vector<SuiteCase> small_suite(std::uint32_t p) {
  std::vector<SuiteCase> out;
  const auto mono = [](const RingDescriptor& r, unsigned a, unsigned b) {
    const unsigned e[2] = {a, b};
    return SparsePoly::monomial(r, Monomial::from_exponents(std::span<const unsigned>(e, r.num_vars)));
  };
  const auto one_by_one = [&](std::string name, const SparsePoly& u, const SparsePoly& v) {
    const auto& r = u.ring();
    PolyMatrix d1(r, 1, 1), d0(r, 1, 1);
    d1(0, 0) = u;
    d0(0, 0) = v;
    out.push_back({std::move(name), u * v, d1, d0, {static_cast<int>(u.degree())}, {0}});
  };

  const RingDescriptor r1{1, p, "x"};
  for (unsigned a = 0; a <= 5; ++a) {
    for (unsigned b = 0; a + b <= 5; ++b) {
      if (a + b == 0) continue;
      one_by_one("x^" + std::to_string(a) + " | x^" + std::to_string(b), mono(r1, a, 0), mono(r1, b, 0));
    }
  }

  const RingDescriptor r2{2, p, "x"};
  std::vector<std::tuple<unsigned, unsigned>> monos[5];
  for (unsigned d = 0; d <= 4; ++d) {
    for (unsigned i = 0; i <= d; ++i) monos[d].emplace_back(d - i, i);
  }
  const auto name_of = [](const std::tuple<unsigned, unsigned>& m) {
    return "x^" + std::to_string(std::get<0>(m)) + "y^" + std::to_string(std::get<1>(m));
  };
  const auto m2 = [&](const std::tuple<unsigned, unsigned>& m) { return mono(r2, std::get<0>(m), std::get<1>(m)); };

  for (unsigned du = 0; du <= 4; ++du) {
    for (unsigned dv = 0; du + dv <= 4; ++dv) {
      if (du + dv == 0) continue;
      for (const auto& u : monos[du]) {
        for (const auto& v : monos[dv]) one_by_one(name_of(u) + " | " + name_of(v), m2(u), m2(v));
      }
    }
  }

  if (p <= 7) {
    const SparsePoly x = SparsePoly::variable(r2, 0), y = SparsePoly::variable(r2, 1);
    for (std::uint32_t c = 0; c < p; ++c) {
      for (std::uint32_t c2 = 0; c2 < p; ++c2) {
        one_by_one("x+" + std::to_string(c) + "y | x+" + std::to_string(c2) + "y", x + y.scaled(c), x + y.scaled(c2));
      }
    }
  }

  for (unsigned d = 2; d <= 3; ++d) {
    std::vector<std::pair<std::tuple<unsigned, unsigned>, std::tuple<unsigned, unsigned>>> pairs;
    for (unsigned da = 0; da <= d; ++da) {
      for (const auto& a : monos[da]) {
        for (const auto& b : monos[d - da]) pairs.emplace_back(a, b);
      }
    }
    for (const auto& [a, b] : pairs) {
      for (const auto& [c, e] : pairs) {
        const SparsePoly A = m2(a), B = m2(b), C = m2(c), E = m2(e);
        PolyMatrix d1(r2, 2, 2), d0(r2, 2, 2);
        d1(0, 0) = A;
        d1(0, 1) = C;
        d1(1, 0) = -E;
        d1(1, 1) = B;
        d0(0, 0) = B;
        d0(0, 1) = -C;
        d0(1, 0) = E;
        d0(1, 1) = A;
        const int da = static_cast<int>(A.degree()), dc = static_cast<int>(C.degree()), de = static_cast<int>(E.degree());
        out.push_back({"koszul [" + name_of(a) + " " + name_of(c) + "; -" + name_of(e) + " " + name_of(b) + "]",
                       A * B + C * E, d1, d0, {da, dc}, {0, da - de}});
      }
    }
  }

  for (unsigned d = 1; d <= 3; ++d) {
    for (const auto& f : monos[d]) {
      std::vector<std::pair<std::tuple<unsigned, unsigned>, std::tuple<unsigned, unsigned>>> divs;
      for (unsigned i = 0; i <= std::get<0>(f); ++i) {
        for (unsigned j = 0; j <= std::get<1>(f); ++j) {
          divs.push_back({{i, j}, {std::get<0>(f) - i, std::get<1>(f) - j}});
        }
      }
      for (const auto& [u1, v1] : divs) {
        for (const auto& [u2, v2] : divs) {
          const SparsePoly U1 = m2(u1), V1 = m2(v1), U2 = m2(u2), V2 = m2(v2);
          PolyMatrix d1(r2, 2, 2), d0(r2, 2, 2);
          d1(0, 0) = U1;
          d1(1, 1) = U2;
          d0(0, 0) = V1;
          d0(1, 1) = V2;
          out.push_back({"sum (" + name_of(u1) + "|" + name_of(v1) + ") + (" + name_of(u2) + "|" + name_of(v2) + ")",
                         U1 * V1, d1, d0,
                         {static_cast<int>(std::get<0>(u1) + std::get<1>(u1)), static_cast<int>(std::get<0>(u2) + std::get<1>(u2))},
                         {0, 0}});
        }
      }
    }
  }
  return out;
}

SparsePoly parse_printed_det(const std::string& latex, std::size_t* printed_terms) {
  const RingDescriptor ring{27, 0, "y"};
  // Drop alignment marks, line breaks and environment commands such as
  // \end{split}; what remains is the bare sum of terms.
  std::string s;
  for (std::size_t i = 0; i < latex.size(); ++i) {
    const char ch = latex[i];
    if (ch == '\\' && i + 1 < latex.size() && std::isalpha(static_cast<unsigned char>(latex[i + 1]))) {
      while (i + 1 < latex.size() && std::isalpha(static_cast<unsigned char>(latex[i + 1]))) ++i;
      if (i + 1 < latex.size() && latex[i + 1] == '{') i = latex.find('}', i + 1);
      if (i == std::string::npos) break;
      continue;
    }
    if (ch == '&' || ch == '\\' || std::isspace(static_cast<unsigned char>(ch))) continue;
    s += ch;
  }
  std::vector<SparsePoly::Term> terms;
  std::size_t i = 0;
  const auto number = [&]() {
    const bool braced = i < s.size() && s[i] == '{';
    if (braced) ++i;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw std::invalid_argument("printed Det: expected a number at offset " + std::to_string(start));
    const unsigned v = static_cast<unsigned>(std::stoul(s.substr(start, i - start)));
    if (braced) {
      if (i >= s.size() || s[i] != '}') throw std::invalid_argument("printed Det: unbalanced brace");
      ++i;
    }
    return v;
  };
  while (i < s.size()) {
    long sign = 1;
    if (s[i] == '+' || s[i] == '-') sign = (s[i++] == '-') ? -1 : 1;
    long coeff = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) coeff = static_cast<long>(number());
    Monomial m(27);
    std::size_t factors = 0;
    while (i < s.size() && s[i] == 'y') {
      ++i;
      if (i >= s.size() || s[i] != '_') throw std::invalid_argument("printed Det: expected '_' after y");
      ++i;
      const unsigned var = number();
      if (var < 1 || var > 27) throw std::invalid_argument("printed Det: variable out of range");
      unsigned power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        power = number();
      }
      m.set(var - 1, m[var - 1] + power);
      ++factors;
    }
    if (factors == 0) throw std::invalid_argument("printed Det: term without variables at offset " + std::to_string(i));
    terms.push_back({m, Integer(sign * coeff)});
  }
  if (printed_terms) *printed_terms = terms.size();
  return SparsePoly::from_terms(ring, std::move(terms));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace oracle
