#include "cy3/poly/text_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "cy3/error.hpp"

namespace cy3::poly {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view tok) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  }
  return true;
}

unsigned parse_unsigned(std::string_view s, std::size_t line, const char* field) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line, field, "expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

// Applies "y17^2" to `m`.
void parse_power(std::string_view tok, const RingDescriptor& ring, std::size_t line, Monomial& m) {
  const std::string_view prefix = ring.var_prefix;
  if (tok.substr(0, prefix.size()) != prefix) {
    throw ParseError(line, "variable", "expected '" + std::string(prefix) + "<index>', got '" +
                                           std::string(tok) + "'");
  }
  tok.remove_prefix(prefix.size());
  unsigned exp = 1;
  if (auto caret = tok.find('^'); caret != std::string_view::npos) {
    exp = parse_unsigned(tok.substr(caret + 1), line, "exponent");
    tok = tok.substr(0, caret);
  }
  const unsigned index = parse_unsigned(tok, line, "variable");
  if (index == 0 || index > ring.num_vars) {
    throw ParseError(line, "variable", "index " + std::to_string(index) + " outside 1.." +
                                           std::to_string(ring.num_vars));
  }
  const unsigned total = m[index - 1] + exp;
  if (total > 255) throw ParseError(line, "exponent", "exponent exceeds 255");
  m.set(index - 1, total);
}

SparsePoly::Term parse_term(const RingDescriptor& ring, std::string_view text, std::size_t line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) tokens.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  SparsePoly::Term term{Monomial(ring.num_vars), 1};
  std::size_t first = 0;
  if (!tokens.empty() && is_integer_token(tokens[0])) {
    std::string_view c = tokens[0];
    if (c[0] == '+') c.remove_prefix(1);
    term.coeff = Integer(std::string(c));
    first = 1;
  } else if (!tokens.empty() && tokens[0].size() > 1 && tokens[0][0] == '-') {
    term.coeff = -1;
    tokens[0].remove_prefix(1);
  } else if (tokens.empty()) {
    throw ParseError(line, "term", "empty term");
  }
  for (std::size_t i = first; i < tokens.size(); ++i) parse_power(tokens[i], ring, line, term.monomial);
  return term;
}

}  // namespace

Integer signed_representative(const Integer& c, const RingDescriptor& ring) {
  if (ring.is_integral()) return c;
  Integer r = c % ring.characteristic;
  if (r < 0) r += ring.characteristic;
  if (2 * r > ring.characteristic) r -= ring.characteristic;
  return r;
}

std::string format_term(const SparsePoly::Term& t, const RingDescriptor& ring) {
  std::string out = signed_representative(t.coeff, ring).get_str();
  for (std::size_t v = 0; v < t.monomial.num_vars(); ++v) {
    const unsigned e = t.monomial[v];
    if (e == 0) continue;
    out += ' ';
    out += ring.var_prefix;
    out += std::to_string(v + 1);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::string to_text(const SparsePoly& p) {
  std::string out;
  for (const auto& t : p.terms()) {
    out += format_term(t, p.ring());
    out += '\n';
  }
  return out;
}

SparsePoly parse_text(const RingDescriptor& ring, std::string_view text, std::size_t first_line) {
  std::vector<SparsePoly::Term> terms;
  std::size_t line = first_line;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(pos, end - pos);
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    row = trim(row);
    if (!row.empty()) terms.push_back(parse_term(ring, row, line));
    pos = end + 1;
    ++line;
  }
  return SparsePoly::from_terms(ring, std::move(terms));
}

std::string to_inline(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += "; ";
    out += format_term(t, p.ring());
  }
  return out;
}

SparsePoly parse_inline(const RingDescriptor& ring, std::string_view text, std::size_t line) {
  text = trim(text);
  if (text == "0") return SparsePoly(ring);
  std::vector<SparsePoly::Term> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = trim(text.substr(pos, end - pos));
    if (piece.empty()) throw ParseError(line, "term", "empty term between ';'");
    terms.push_back(parse_term(ring, piece, line));
    pos = end + 1;
  }
  return SparsePoly::from_terms(ring, std::move(terms));
}

}  // namespace cy3::poly
