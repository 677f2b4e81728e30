#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linpoly/field.hpp"
#include "linpoly/poly.hpp"

namespace linpoly {

inline constexpr std::size_t kDefaultTruncation = 32;

/// sum_{j<N} c_j z^j + O(z^N) over a finite field.
class TruncatedSeries {
 public:
  TruncatedSeries(Field field, std::size_t precision);
  TruncatedSeries(Field field, std::size_t precision, std::vector<Elem> coeffs);

  static TruncatedSeries constant(const Field& field, std::size_t precision, Elem c);
  /// c * z^k.
  static TruncatedSeries monomial(const Field& field, std::size_t precision, Elem c, std::size_t k);
  /// A polynomial in z read as a series.
  static TruncatedSeries from_poly(const Poly& p, std::size_t precision);

  const Field& field() const { return field_; }
  std::size_t precision() const { return c_.size(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem operator[](std::size_t j) const { return j < c_.size() ? c_[j] : 0; }

  /// Least j with c_j != 0; empty when every stored coefficient vanishes
  /// (valuation >= precision).
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  TruncatedSeries truncated(std::size_t precision) const;
  TruncatedSeries operator-() const;
  TruncatedSeries scaled(Elem c) const;
  /// Multiplication by z^k.
  TruncatedSeries shifted(std::size_t k) const;
  /// Multiplicative inverse; throws NotAUnit unless the valuation is 0.
  TruncatedSeries inverse() const;
  /// The substitution z -> z^s.
  TruncatedSeries compose_with_z_power(std::size_t s) const;

  // Mixed precisions truncate to the smaller one.
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  std::string to_string(const std::string& var = "z") const;

 private:
  Field field_;
  std::vector<Elem> c_;
};

/// Polynomial in X with truncated power-series coefficients. The X-degree is
/// nominal: coefficients that vanish to the working precision are kept.
class SeriesPoly {
 public:
  SeriesPoly(Field field, std::size_t precision, std::size_t degree);
  SeriesPoly(Field field, std::size_t precision, std::vector<TruncatedSeries> coeffs);

  /// A polynomial over E read with constant coefficients.
  static SeriesPoly from_poly(const Poly& p, std::size_t precision);

  const Field& field() const { return field_; }
  std::size_t precision() const { return precision_; }
  std::size_t degree() const { return c_.size() - 1; }
  const TruncatedSeries& coeff(std::size_t i) const { return c_.at(i); }
  TruncatedSeries& coeff(std::size_t i) { return c_.at(i); }
  const std::vector<TruncatedSeries>& coeffs() const { return c_; }

  /// Leading coefficient is exactly 1.
  bool is_monic() const;
  /// Coefficient-wise reduction mod z.
  Poly mod_z() const;
  /// Minimum z-valuation over all coefficients (empty if all vanish).
  std::optional<std::size_t> valuation() const;

  SeriesPoly truncated(std::size_t precision) const;
  /// Drops X-coefficients above `degree`; they must vanish to precision.
  SeriesPoly with_degree(std::size_t degree) const;

  friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
  friend bool operator==(const SeriesPoly& a, const SeriesPoly& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t precision_;
  std::vector<TruncatedSeries> c_;
};

/// Division with remainder by an X-monic divisor over E[[z]]/(z^N).
std::pair<SeriesPoly, SeriesPoly> divmod_monic(const SeriesPoly& a, const SeriesPoly& b);

struct BezoutPair {
  unsigned r = 0;
  unsigned s = 0;
};

/// The positive pair with s*b - r*a = 1 and the least s. Throws NotCoprime.
BezoutPair bezout_rs(unsigned a, unsigned b);

struct ShiftedRoot {
  unsigned multiplicity = 0;
  Poly cofactor;  // u with f(X + alpha) = X^a u(X), u(0) != 0
};

/// Writes f(X + alpha) = X^a u(X). Throws NotARoot.
ShiftedRoot shift_roots(const Poly& f, Elem alpha);

/// Two polynomials over a common field E with roots alpha, beta of coprime
/// multiplicities a, b, plus the exponents r, s with s*b - r*a = 1.
struct HenselProblem {
  Field field;
  Poly f;
  Poly g;
  Elem alpha = 0;
  Elem beta = 0;
  unsigned a = 0;
  unsigned b = 0;
  Poly u;
  Poly v;
  BezoutPair rs;

  /// Validates every invariant; throws NotARoot, NotCoprime, FieldMismatch.
  static HenselProblem make(const Poly& f, Elem alpha, const Poly& g, Elem beta);
};

/// f, g over F_q; E is the splitting field of f*g (degree the lcm of the
/// irreducible factor degrees) and (alpha, beta) the first root pair in
/// (a, b, alpha, beta) order whose multiplicities are coprime.
/// Throws NoCoprimePair when none exists.
HenselProblem choose_problem(const Poly& f, const Poly& g, Rng& rng);

/// H(X) = X^a u(X z^r) - z v(z^s) over E[[z]]/(z^N).
SeriesPoly build_H(const HenselProblem& prob, std::size_t precision = kDefaultTruncation);

struct HenselResult {
  SeriesPoly A;  // monic, X-degree a, A = X^a mod z
  SeriesPoly U;  // X-degree deg H - a
  /// Working precision after each Newton step (1, 2, 4, ..., N).
  std::vector<std::size_t> precisions;
  /// z-valuation of H - A U after each step, measured at full precision N
  /// (N itself when the residual vanishes). Entry 0 is the initial residual.
  std::vector<std::size_t> residual_valuations;
};

/// Quadratic Newton-Hensel lifting of H = X^a * U0 mod z to H = A U mod z^N,
/// with the Bezout cofactors lifted alongside. Throws NotCoprimeModZ.
HenselResult hensel_lift(const SeriesPoly& H, unsigned a, std::size_t precision = kDefaultTruncation);

struct EisensteinReport {
  bool eisenstein = false;
  /// z-valuation of each X-coefficient below the leading one.
  std::vector<std::optional<std::size_t>> valuations;
  std::string reason;
};

/// Monic, every lower coefficient divisible by z, constant term not by z^2.
/// Throws PrecisionTooLow when the constant term vanishes to precision.
EisensteinReport eisenstein_check(const SeriesPoly& A);

}  // namespace linpoly
