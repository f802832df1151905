#include "cy3/algebra/composition.hpp"

#include <stdexcept>

#include "cy3/error.hpp"

namespace cy3::algebra {

namespace {

bool valid_dim(std::size_t d) { return d == 1 || d == 2 || d == 4 || d == 8; }

using Coords = std::vector<SparsePoly>;

Coords conj_coords(const Coords& a) {
  Coords out = a;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

Coords add_coords(const Coords& a, const Coords& b) {
  Coords out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Coords sub_coords(const Coords& a, const Coords& b) {
  Coords out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Coords mul_coords(const Coords& x, const Coords& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  const Coords a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const Coords c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  Coords lo = sub_coords(mul_coords(a, c), mul_coords(conj_coords(d), b));
  Coords hi = add_coords(mul_coords(d, a), mul_coords(b, conj_coords(c)));
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

}  // namespace

CompositionElement::CompositionElement(const RingDescriptor& ring, std::size_t dim)
    : coords_(dim, SparsePoly(ring)) {
  if (!valid_dim(dim)) throw std::invalid_argument("composition algebra dimension must be 1, 2, 4 or 8");
}

CompositionElement::CompositionElement(std::vector<SparsePoly> coords) : coords_(std::move(coords)) {
  if (!valid_dim(coords_.size())) {
    throw std::invalid_argument("composition algebra dimension must be 1, 2, 4 or 8");
  }
  for (const auto& c : coords_) poly::require_same_ring(coords_.front().ring(), c.ring(), "composition element");
}

CompositionElement CompositionElement::real(const SparsePoly& value, std::size_t dim) {
  CompositionElement e(value.ring(), dim);
  e.coords_[0] = value;
  return e;
}

CompositionElement CompositionElement::unit(const RingDescriptor& ring, std::size_t dim, std::size_t index) {
  CompositionElement e(ring, dim);
  if (index >= dim) throw std::out_of_range("basis index out of range");
  e.coords_[index] = SparsePoly::constant(ring, 1);
  return e;
}

CompositionElement CompositionElement::conj() const { return CompositionElement(conj_coords(coords_)); }

SparsePoly CompositionElement::norm() const {
  poly::PolyAccumulator acc(ring());
  for (const auto& c : coords_) acc.add_product(c, c);
  return acc.take();
}

CompositionElement CompositionElement::operator+(const CompositionElement& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
  return CompositionElement(add_coords(coords_, o.coords_));
}

CompositionElement CompositionElement::operator-(const CompositionElement& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
  return CompositionElement(sub_coords(coords_, o.coords_));
}

CompositionElement CompositionElement::operator-() const {
  Coords out = coords_;
  for (auto& c : out) c = -c;
  return CompositionElement(std::move(out));
}

CompositionElement multiply(const CompositionElement& a, const CompositionElement& b, Doubling rule) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
  poly::require_same_ring(a.ring(), b.ring(), "multiply");
  if (rule == Doubling::kOpposite) return CompositionElement(mul_coords(b.coords(), a.coords()));
  return CompositionElement(mul_coords(a.coords(), b.coords()));
}

const char* octonion_basis_name(std::size_t index) {
  static const char* names[] = {"1", "i", "j", "k", "l", "m", "n", "o"};
  if (index >= 8) throw std::out_of_range("octonion basis index");
  return names[index];
}

}  // namespace cy3::algebra
