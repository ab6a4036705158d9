#include "matchroot/textio.hpp"

#include <cctype>
#include <cstdint>

#include "matchroot/errors.hpp"

namespace matchroot {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Parses an optionally signed run of digits starting at text[pos].
Integer parse_integer_at(std::string_view text, std::size_t& pos, std::size_t base) {
  const std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == digits) throw ParseError("expected an integer", base + pos);
  std::string s(text.substr(start, pos - start));
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

Rational parse_rational_at(std::string_view text, std::size_t base) {
  std::size_t pos = 0;
  Integer num = parse_integer_at(text, pos, base);
  if (pos == text.size()) return Rational(num);
  if (text[pos] == '/') {
    ++pos;
    const std::size_t den_at = pos;
    Integer den = parse_integer_at(text, pos, base);
    if (pos != text.size()) throw ParseError("trailing characters after rational", base + pos);
    if (den == 0) throw ParseError("zero denominator", base + den_at);
    return make_rational(num, den);
  }
  if (text[pos] == '.') {
    ++pos;
    const std::size_t frac_at = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos != text.size() || pos == frac_at) {
      throw ParseError("malformed decimal", base + pos);
    }
    const std::string_view frac = text.substr(frac_at);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer f{std::string(frac)};
    const bool negative = text[0] == '-';
    Integer total = abs(num) * scale + f;
    if (negative) total = -total;
    return make_rational(total, scale);
  }
  throw ParseError("unexpected character in rational", base + pos);
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t offset = 0;
  const std::string_view t = trim(text, offset);
  if (t.empty()) throw ParseError("empty rational", offset);
  return parse_rational_at(t, offset);
}

AlgebraicNumber parse_theta_spec(std::string_view text) {
  std::size_t offset = 0;
  const std::string_view t = trim(text, offset);
  constexpr std::string_view kPoly = "poly:";
  if (t.substr(0, kPoly.size()) != kPoly) {
    if (t.empty()) throw ParseError("empty theta", offset);
    return AlgebraicNumber::from_rational(parse_rational_at(t, offset));
  }
  std::size_t pos = kPoly.size();
  if (pos >= t.size() || t[pos] != '[') throw ParseError("expected '['", offset + pos);
  ++pos;
  std::vector<Integer> coeffs;
  for (;;) {
    while (pos < t.size() && t[pos] == ' ') ++pos;
    coeffs.push_back(parse_integer_at(t, pos, offset));
    while (pos < t.size() && t[pos] == ' ') ++pos;
    if (pos < t.size() && t[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < t.size() && t[pos] == ']') {
      ++pos;
      break;
    }
    throw ParseError("expected ',' or ']'", offset + pos);
  }
  constexpr std::string_view kInterval = ";interval:";
  if (t.substr(pos, kInterval.size()) != kInterval) {
    throw ParseError("expected ';interval:'", offset + pos);
  }
  pos += kInterval.size();
  const std::size_t comma = t.find(',', pos);
  if (comma == std::string_view::npos) throw ParseError("expected 'lo,hi'", offset + pos);
  const Rational lo = parse_rational_at(t.substr(pos, comma - pos), offset + pos);
  const Rational hi = parse_rational_at(t.substr(comma + 1), offset + comma + 1);
  const Polynomial p(std::move(coeffs));
  try {
    return AlgebraicNumber::from_interval(p, lo, hi);
  } catch (const ContractError& e) {
    throw ParseError(e.what(), offset + kPoly.size());
  }
}

nlohmann::json integer_to_json(const Integer& z) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (mpz_fits_slong_p(z.get_mpz_t()) != 0) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const Integer& c : p.coefficients()) out.push_back(integer_to_json(c));
  return out;
}

nlohmann::json theta_to_json(const AlgebraicNumber& t) {
  nlohmann::json out;
  out["defpoly"] = polynomial_to_json(t.defpoly());
  if (t.is_rational()) {
    out["point"] = t.value().get_str();
  } else {
    out["interval"] = {t.lo().get_str(), t.hi().get_str()};
  }
  return out;
}

nlohmann::json vertex_set_to_json(VertexSet s) { return s.members(); }

nlohmann::json decomposition_to_json(const ThetaDecomposition& d) {
  nlohmann::json out;
  out["mult"] = d.base_mult;
  out["B"] = vertex_set_to_json(d.B);
  out["A"] = vertex_set_to_json(d.A);
  out["N"] = vertex_set_to_json(d.N);
  out["P"] = vertex_set_to_json(d.P);
  out["criticals"] = nlohmann::json::array();
  for (VertexSet c : d.criticals) out["criticals"].push_back(vertex_set_to_json(c));
  out["rootfree"] = nlohmann::json::array();
  for (VertexSet c : d.rootfree) out["rootfree"].push_back(vertex_set_to_json(c));
  return out;
}

VertexSet parse_vertex_list(std::string_view text) {
  VertexSet s;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == start) throw ParseError("expected a vertex index", pos);
    if (pos - start > 2) throw ParseError("vertex index too large", start);
    const int v = std::stoi(std::string(text.substr(start, pos - start)));
    if (v >= kMaxVertices) throw ParseError("vertex index too large", start);
    s = s.with(v);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
      if (pos == text.size()) throw ParseError("trailing ','", pos);
    }
  }
  return s;
}

}  // namespace matchroot
