#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "linpoly/bigint.hpp"

namespace linpoly {

/// Enumerations refuse groups with more elements than this.
inline constexpr std::uint64_t kGroupGuard = 10'000'000;

/// Multiset of cycle lengths of a permutation (length -> count).
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::map<std::uint64_t, std::uint64_t> parts);
  static CycleType from_lengths(std::span<const std::uint64_t> lengths);
  /// Cycle type of a permutation of {0..perm.size()-1} restricted to `from..`.
  static CycleType of_permutation(std::span<const std::uint32_t> perm, std::size_t from = 0);

  void add(std::uint64_t length, std::uint64_t count = 1);
  const std::map<std::uint64_t, std::uint64_t>& parts() const { return parts_; }
  /// Sum of length * count.
  std::uint64_t total() const;
  bool empty() const { return parts_.empty(); }

  /// "{1:1, 3:2}"
  std::string to_string() const;

  auto operator<=>(const CycleType&) const = default;

 private:
  std::map<std::uint64_t, std::uint64_t> parts_;
};

/// Order of a permutation with this cycle type: lcm of the cycle lengths.
BigInt permutation_order(const CycleType& t);

/// |GL_n(q)| = prod_{i<n} (q^n - q^i).
BigInt order_gl(unsigned n, const BigInt& q);
/// |GammaL_{n/d}(q^d)| = d * |GL_{n/d}(q^d)|. Throws NotADivisor.
BigInt order_gamma_l(unsigned n, const BigInt& q, unsigned d);

/// Cycle types of an enumerated permutation group with their frequencies.
struct TypeCensus {
  std::map<CycleType, std::uint64_t> counts;
  std::uint64_t elements = 0;

  std::set<CycleType> types() const;
  bool contains(const CycleType& t) const { return counts.count(t) != 0; }
};

/// Candidate group for the Galois group, as a permutation group on the
/// q^n - 1 nonzero vectors.
struct GroupDescriptor {
  enum class Kind { GL, GammaL };
  Kind kind = Kind::GL;
  unsigned n = 0;
  std::uint64_t q = 0;
  unsigned d = 1;
  BigInt order;
  std::optional<TypeCensus> census;

  std::string name() const;
};

GroupDescriptor describe_gl(unsigned n, std::uint64_t q);
GroupDescriptor describe_gamma_l(unsigned n, std::uint64_t q, unsigned d);

/// Every map x -> M(x^{q^j}), M in GL_{n/d}(q^d), 0 <= j < d, acting on
/// F_{q^n}^*, with F_{q^n} viewed as an (n/d)-dimensional space over its
/// subfield F_{q^d}. Throws TooLarge past the guards, NotADivisor.
TypeCensus semilinear_cycle_types(std::uint64_t q, unsigned n, unsigned d);

/// All of GL_n(q) acting on the nonzero vectors of F_q^n.
TypeCensus gl_cycle_types(unsigned n, std::uint64_t q);

struct DeductionRow {
  unsigned m = 0;
  BigInt divisor;           // q^m (q^m - 1) (q^n - 1)
  bool divides = false;     // divisor | n (q^n - 1)
  bool qm_divides_n = false;
  /// Present when q^m | n: whether n - 1 divides 1 after cancelling.
  std::optional<bool> reduced_condition;
};

struct DeductionReport {
  std::uint64_t q = 0;
  unsigned n = 0;
  BigInt gamma_l1_order;  // n (q^n - 1)
  std::vector<DeductionRow> rows;
  bool no_admissible_m = false;
};

/// For each 1 <= m < n tests whether q^m (q^m - 1)(q^n - 1) can divide
/// n (q^n - 1). Throws BadArity unless n is an odd prime.
DeductionReport divisibility_deduction(std::uint64_t q, unsigned n);

}  // namespace linpoly
