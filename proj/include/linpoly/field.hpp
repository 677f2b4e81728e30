#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linpoly/bigint.hpp"
#include "linpoly/rng.hpp"

namespace linpoly {

/// Packed field element: the coordinates c_0..c_{k-1} of the element in the
/// basis 1, w, ..., w^{k-1} encoded as sum c_i p^i. Only meaningful together
/// with the Field that produced it.
using Elem = std::uint64_t;

/// Largest field order for which enumeration-style operations are allowed.
inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

/// Prime factors of n (distinct, ascending).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Returns (p, k) when n = p^k for a prime p, nothing otherwise.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

/// A finite field F_{p^k} realized as F_p[w]/(modulus). Cheap to copy; all
/// copies share one immutable description, and two fields compare equal when
/// characteristic and modulus agree.
class Field {
 public:
  /// F_p. Throws NotPrime.
  static Field prime(std::uint64_t p);

  /// F_{p^k} over the prime field `base` with the given monic modulus
  /// (little-endian coefficients in [0, p), length k+1). Throws NotIrreducible.
  static Field extension(const Field& base, unsigned k, std::span<const Elem> modulus);

  /// F_{p^k} with a modulus found by seeded random search.
  static Field extension(const Field& base, unsigned k, Rng& rng);

  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  /// Monic modulus over F_p, length degree()+1; {0, 1} for a prime field.
  const std::vector<Elem>& modulus() const;
  Field prime_field() const;
  bool is_prime_field() const { return degree() == 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The class of w, a root of the modulus. The modulus of a prime field is
  /// X, so this is 0 there.
  Elem generator() const;
  Elem from_int(std::int64_t v) const;
  bool contains(Elem x) const { return x < order(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem pow(Elem a, const BigInt& e) const;
  /// x^(p^levels).
  Elem frobenius(Elem x, unsigned levels) const;
  /// Multiplicative order of a nonzero element. Throws ZeroElement.
  std::uint64_t element_order(Elem x) const;

  /// Multiplies an element by an integer (repeated addition, reduced mod p).
  Elem scale(Elem a, std::uint64_t n) const;

  std::vector<Elem> coordinates(Elem x) const;
  Elem from_coordinates(std::span<const Elem> coords) const;

  /// Every element once, in increasing code order. Throws TooLarge.
  std::vector<Elem> elements() const;

  /// "3", "w", "2+w^2", ... ("0" for zero).
  std::string format(Elem x) const;
  /// "F_4 = F_2[w]/(w^2+w+1)" style description.
  std::string describe() const;
  /// The CLI field spec string reproducing this field: "p" or "p^k/c0,...,ck".
  std::string spec_string() const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  struct Data;

 private:
  explicit Field(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Value-style element bound to its field.
class FieldElement {
 public:
  FieldElement(Field field, Elem value);

  const Field& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius(unsigned levels) const;
  std::uint64_t order() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  std::string to_string() const { return field_.format(value_); }

 private:
  const Field& same(const FieldElement& o) const;

  Field field_;
  Elem value_;
};

/// Field homomorphism from -> to, fixed by the image of from's generator.
class Embedding {
 public:
  /// The deterministic embedding: the generator goes to the smallest-code
  /// root of its minimal polynomial in `to`. Throws EmbeddingUnavailable.
  static Embedding find(const Field& from, const Field& to);

  const Field& source() const { return from_; }
  const Field& target() const { return to_; }
  Elem generator_image() const { return image_; }
  Elem operator()(Elem x) const;

 private:
  Embedding(Field from, Field to, Elem image, std::vector<Elem> powers)
      : from_(std::move(from)), to_(std::move(to)), image_(image), powers_(std::move(powers)) {}

  Field from_;
  Field to_;
  Elem image_;
  std::vector<Elem> powers_;  // image of w^i
};

/// Builds F_{q^k} over the prime field of `base` (a single-step extension of
/// degree base.degree()*k) together with the embedding of `base` into it.
struct ExtensionPair {
  Field field;
  Embedding embedding;
};
ExtensionPair extend(const Field& base, unsigned k, Rng& rng);

/// F_q for a prime power q; extensions take their modulus from the
/// "modulus-search" stream of `seed`. Throws BadInput, NotPrime.
Field field_of_order(std::uint64_t q, std::uint64_t seed = kDefaultSeed);

}  // namespace linpoly
