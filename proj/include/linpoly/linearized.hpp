#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linpoly/field.hpp"
#include "linpoly/poly.hpp"

namespace linpoly {

/// Dense forms of L are materialized only up to this degree.
inline constexpr std::uint64_t kDenseDegreeGuard = std::uint64_t{1} << 22;

/// L(X) = sum_{i=0}^{n} a_i X^{q^i} over F_q, stored normalized: monic
/// (a_n = 1) and with a_0 = 0. The raw a_0 and a_n are kept for display.
class LinearizedPoly {
 public:
  /// Throws LeadingZero when the top coefficient is zero or missing.
  static LinearizedPoly make(const Field& field, const std::map<unsigned, Elem>& coeffs);
  /// Monic, a_0 = 0, interior coefficients a_1..a_{n-1} as given.
  static LinearizedPoly from_interior(const Field& field, const std::vector<Elem>& interior);

  const Field& field() const { return field_; }
  /// q-degree n.
  unsigned qdegree() const { return static_cast<unsigned>(a_.size() - 1); }
  /// Normalized coefficient a_i.
  Elem coeff(unsigned i) const { return i < a_.size() ? a_[i] : 0; }
  const std::vector<Elem>& coeffs() const { return a_; }
  Elem original_constant() const { return raw_a0_; }
  Elem original_leading() const { return raw_an_; }

  /// Least i >= 1 with a_i != 0 and i < n; empty for L = X^{q^n}.
  std::optional<unsigned> mlow() const;
  bool is_excluded_case() const { return !mlow().has_value(); }

  /// q^n as an integer (q^n - 1 is the degree of L(X)/X).
  std::uint64_t degree() const;

  /// The ordinary polynomial of degree q^n. Throws TooLarge past the guard.
  Poly conventional_form() const;
  /// L(X)/X = sum a_i X^{q^i - 1}.
  Poly reduced_quotient() const;
  /// L(x) = sum a_i x^{q^i} evaluated with Frobenius powers in emb.target().
  Elem apply(const Embedding& emb, Elem x) const;

  /// "X^8 + X^2" style.
  std::string to_string() const;
  /// CLI form "i:a_i;j:a_j" over the normalized coefficients.
  std::string spec_string() const;

  friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) {
    return a.field_ == b.field_ && a.a_ == b.a_;
  }

 private:
  LinearizedPoly(Field field, std::vector<Elem> a, Elem raw_a0, Elem raw_an)
      : field_(std::move(field)), a_(std::move(a)), raw_a0_(raw_a0), raw_an_(raw_an) {}

  Field field_;
  std::vector<Elem> a_;
  Elem raw_a0_;
  Elem raw_an_;
};

/// L(X)/X = X^{q^m - 1} * h(X)^{q^m} with h(X) = sum_{i=m}^{n} a_i X^{q^{i-m} - 1}.
struct MultiplicityDecomposition {
  unsigned m = 0;
  Poly h;
  std::uint64_t zero_root_multiplicity = 0;  // q^m - 1
  std::uint64_t h_root_multiplicity = 0;     // q^m
};

/// Computes and verifies the decomposition: the reconstruction
/// X^{q^m-1} h^{q^m} equals L(X)/X, a_m - X h'(X) = h(X), and h is squarefree
/// with h(0) = a_m != 0. Throws NoInteriorTerm for L = X^{q^n}; a failed
/// check throws Internal.
MultiplicityDecomposition multiplicity_decomposition(const LinearizedPoly& L);

/// L(X)/X - c with coefficients carried into emb.target(), c in that field.
Poly specialize(const LinearizedPoly& L, const Embedding& emb, Elem c);

/// Every monic normalized L of q-degree n with some nonzero interior
/// coefficient, ordered by the interior coefficient vector (a_1 fastest).
std::vector<LinearizedPoly> all_with_interior(const Field& field, unsigned n);

}  // namespace linpoly
