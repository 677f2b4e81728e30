#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "linpoly/bigint.hpp"
#include "linpoly/field.hpp"
#include "linpoly/rng.hpp"

namespace linpoly {

/// Dense univariate polynomial over a finite field. Coefficients are stored
/// little-endian with no trailing zeros; the zero polynomial is empty.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs);

  static Poly constant(const Field& field, Elem c);
  static Poly monomial(const Field& field, Elem c, std::size_t degree);
  /// The polynomial X.
  static Poly x(const Field& field) { return monomial(field, 1, 1); }
  /// Build from small integer coefficients, reduced mod p.
  static Poly from_ints(const Field& field, const std::vector<std::int64_t>& coeffs);

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  /// Coefficient of X^i (zero beyond the degree).
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::size_t term_count() const;

  Elem eval(Elem x) const;
  Poly monic() const;
  Poly derivative() const;
  Poly scaled(Elem c) const;
  /// Multiplies by X^k.
  Poly shifted(std::size_t k) const;
  /// p(X + a) via repeated synthetic division.
  Poly taylor_shift(Elem a) const;
  /// Coefficient-wise image under a field embedding.
  Poly mapped(const Embedding& emb) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  /// Deterministic total order (degree, then coefficients from the top).
  friend bool operator<(const Poly& a, const Poly& b);

  /// "X^3 + w*X + 1" with the given variable name.
  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();

  Field field_;
  std::vector<Elem> c_;
};

/// (quotient, remainder). Throws DivisionByZero, FieldMismatch.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly pow(const Poly& base, std::uint64_t e);
Poly mod_pow(const Poly& base, std::uint64_t e, const Poly& modulus);
Poly mod_pow(const Poly& base, const BigInt& e, const Poly& modulus);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus);
/// Monic gcd. Throws BothZero.
Poly gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly g;  // monic
  Poly s;
  Poly t;  // s*a + t*b = g
};
ExtendedGcd ext_gcd(const Poly& a, const Poly& b);

/// p-th root of a polynomial whose exponents are all multiples of p.
Poly pth_root(const Poly& a);

/// Irreducible monic factor with its multiplicity.
struct Factor {
  Poly poly;
  unsigned multiplicity;
};

/// unit * prod(factor^multiplicity) reproduces the input exactly.
struct Factorization {
  Elem unit = 0;
  std::vector<Factor> factors;

  Poly expand(const Field& field) const;
  /// Sum of degree times multiplicity.
  std::size_t total_degree() const;
};

/// Squarefree parts with multiplicities; the parts are pairwise coprime,
/// monic, squarefree, and sorted by multiplicity. Throws ZeroPolynomial.
std::vector<Factor> squarefree_decomposition(const Poly& a);

struct DegreePart {
  Poly poly;          // product of all irreducible factors of this degree
  unsigned degree;    // their common degree
};
/// Distinct-degree factorization of a monic squarefree polynomial.
/// Throws NotSquarefree, BadInput.
std::vector<DegreePart> distinct_degree_factorization(const Poly& a);

/// Splits a product of distinct monic irreducibles of common degree d.
/// Odd characteristic uses Cantor-Zassenhaus, characteristic 2 the trace map.
std::vector<Poly> equal_degree_factorization(const Poly& a, unsigned d, Rng& rng);

/// Complete factorization, factors sorted deterministically.
Factorization factor(const Poly& a, Rng& rng);

/// Roots in the coefficient field, ascending by code.
std::vector<Elem> roots(const Poly& a, Rng& rng);

bool is_irreducible(const Poly& a);
bool is_squarefree(const Poly& a);

}  // namespace linpoly
