#include "linpoly/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <vector>

#include "linpoly/error.hpp"

namespace linpoly {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  const std::string t = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    fail(ErrorCode::Parse, "expected a non-negative integer for " + std::string(what) + ", got '" + t + "'");
  }
  return v;
}

bool is_var(char c) { return c == 'X' || c == 'x' || c == 'y' || c == 't' || c == 'z' || c == 'T' || c == 'Y'; }

// Recursive descent over + - * ^ ( ) with implicit multiplication.
class ExprParser {
 public:
  ExprParser(const Field& field, std::string_view text) : F_(field), s_(text) {}

  Poly parse() {
    Poly r = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::Parse, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || is_var(c) || c == 'w' || c == '(';
  }

  Poly expr() {
    Poly r = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        r = r + term();
      } else if (peek('-')) {
        ++pos_;
        r = r - term();
      } else {
        return r;
      }
    }
  }

  Poly term() {
    Poly r = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        r = r * unary();
      } else if (starts_primary()) {
        r = r * power();
      } else {
        return r;
      }
    }
  }

  Poly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    while (peek('^')) {
      ++pos_;
      skip();
      bool braced = false;
      if (pos_ < s_.size() && s_[pos_] == '{') {
        braced = true;
        ++pos_;
      }
      const std::uint64_t e = number();
      if (braced) {
        if (!peek('}')) error("expected '}'");
        ++pos_;
      }
      if (e > kDenseDegreeGuard) fail(ErrorCode::TooLarge, "exponent exceeds the dense degree guard");
      base = pow(base, e);
    }
    return base;
  }

  std::uint64_t number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return parse_u64(s_.substr(start, pos_ - start), "number");
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly r = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = number();
      return Poly::constant(F_, F_.from_int(static_cast<std::int64_t>(v % F_.characteristic())));
    }
    if (c == 'w') {
      ++pos_;
      if (F_.is_prime_field()) error("'w' used over a prime field");
      return Poly::constant(F_, F_.generator());
    }
    if (is_var(c)) {
      if (var_ && *var_ != c) error("mixed variables '" + std::string(1, *var_) + "' and '" + std::string(1, c) + "'");
      var_ = c;
      ++pos_;
      return Poly::x(F_);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const Field& F_;
  std::string_view s_;
  std::size_t pos_ = 0;
  std::optional<char> var_;
};

Elem element_of(const Field& field, std::string_view text) {
  const Poly p = ExprParser(field, text).parse();
  if (p.degree() > 0) fail(ErrorCode::Parse, "'" + std::string(text) + "' is not a field element");
  return p[0];
}

}  // namespace

Field parse_field(std::string_view spec, std::uint64_t seed) {
  const std::string s = trim(spec);
  if (s.empty()) fail(ErrorCode::Parse, "empty field spec");
  const auto slash = s.find('/');
  const std::string head = s.substr(0, slash);
  const auto caret = head.find('^');
  if (caret == std::string::npos) {
    if (slash != std::string::npos) fail(ErrorCode::Parse, "a modulus needs the form p^k/c0,...,ck");
    const std::uint64_t q = parse_u64(head, "field order");
    if (is_prime(q)) return Field::prime(q);
    if (!prime_power(q)) fail(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    return field_of_order(q, seed);
  }
  const std::uint64_t p = parse_u64(head.substr(0, caret), "characteristic");
  const std::uint64_t k = parse_u64(head.substr(caret + 1), "extension degree");
  if (k == 0 || k > 64) fail(ErrorCode::Parse, "extension degree out of range");
  const Field base = Field::prime(p);
  if (k == 1 && slash == std::string::npos) return base;
  if (slash == std::string::npos) {
    Rng rng = Rng::stream(seed, "modulus-search");
    return Field::extension(base, static_cast<unsigned>(k), rng);
  }
  std::vector<Elem> modulus;
  for (const auto& c : split(s.substr(slash + 1), ',')) {
    modulus.push_back(base.from_int(static_cast<std::int64_t>(parse_u64(c, "modulus coefficient") % p)));
  }
  if (modulus.size() != k + 1 || modulus.back() != 1) {
    fail(ErrorCode::Parse, "modulus must be monic of degree " + std::to_string(k));
  }
  if (k == 1) {
    if (modulus[0] != 0) fail(ErrorCode::Parse, "a prime field takes the modulus 0,1");
    return base;
  }
  return Field::extension(base, static_cast<unsigned>(k), modulus);
}

Elem parse_element(const Field& field, std::string_view text) { return element_of(field, text); }

Poly parse_poly(const Field& field, std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) fail(ErrorCode::Parse, "empty polynomial");
  if (s.find(':') != std::string::npos) {
    std::map<std::uint64_t, Elem> terms;
    for (const auto& item : split(s, ';')) {
      if (item.empty()) continue;
      const auto colon = item.find(':');
      if (colon == std::string::npos) fail(ErrorCode::Parse, "sparse term '" + item + "' needs d:c");
      const std::uint64_t d = parse_u64(item.substr(0, colon), "degree");
      if (d > kDenseDegreeGuard) fail(ErrorCode::TooLarge, "degree exceeds the dense degree guard");
      terms[d] = field.add(terms[d], element_of(field, item.substr(colon + 1)));
    }
    if (terms.empty()) return Poly(field);
    std::vector<Elem> c(terms.rbegin()->first + 1, 0);
    for (const auto& [d, v] : terms) c[d] = v;
    return Poly(field, std::move(c));
  }
  if (s.find(',') != std::string::npos) {
    std::vector<Elem> c;
    for (const auto& item : split(s, ',')) c.push_back(element_of(field, item));
    return Poly(field, std::move(c));
  }
  return ExprParser(field, s).parse();
}

LinearizedPoly parse_linearized(const Field& field, std::string_view text) {
  std::map<unsigned, Elem> coeffs;
  std::string items(text);
  std::replace(items.begin(), items.end(), ',', ';');
  for (const auto& item : split(items, ';')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) fail(ErrorCode::Parse, "linearized term '" + item + "' needs i:a_i");
    const std::uint64_t i = parse_u64(item.substr(0, colon), "q-exponent");
    if (i > 64) fail(ErrorCode::TooLarge, "q-exponent too large");
    const Elem a = element_of(field, item.substr(colon + 1));
    coeffs[static_cast<unsigned>(i)] = field.add(coeffs[static_cast<unsigned>(i)], a);
  }
  if (coeffs.empty()) fail(ErrorCode::Parse, "empty linearized polynomial");
  return LinearizedPoly::make(field, coeffs);
}

LinearizedPoly parse_linearized_spec(std::string_view text, std::uint64_t seed) {
  std::string qspec, lspec;
  std::size_t pos = 0;
  const std::string s = trim(text);
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    std::size_t end = pos;
    while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
    const std::string tok = s.substr(pos, end - pos);
    if (tok.rfind("q=", 0) == 0) {
      qspec = tok.substr(2);
    } else if (tok.rfind("L=", 0) == 0) {
      lspec = tok.substr(2);
    } else if (!tok.empty()) {
      fail(ErrorCode::Parse, "unexpected token '" + tok + "'; expected q=... L=...");
    }
    pos = end;
  }
  if (qspec.empty() || lspec.empty()) fail(ErrorCode::Parse, "expected 'q=<field> L=<i:a;...>'");
  return parse_linearized(parse_field(qspec, seed), lspec);
}

}  // namespace linpoly
