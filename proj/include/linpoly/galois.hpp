#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linpoly/bigint.hpp"
#include "linpoly/field.hpp"
#include "linpoly/groups.hpp"
#include "linpoly/linearized.hpp"
#include "linpoly/rng.hpp"

namespace linpoly {

/// Sampling schedule: (extension degree k, number of draws) in order.
struct Budget {
  std::vector<std::pair<unsigned, unsigned>> schedule;

  /// 64 draws at each of k = 1..6.
  static Budget standard();
  /// `count` draws at each of k = 1..max_k.
  static Budget uniform(unsigned count, unsigned max_k);
  unsigned total() const;
};

/// Extensions F_{q^k} of a fixed F_q with their embeddings, built once per k
/// from the "modulus-search" stream of the seed.
class ExtensionCache {
 public:
  ExtensionCache(Field base, std::uint64_t seed) : base_(std::move(base)), seed_(seed) {}
  const ExtensionPair& get(unsigned k);
  const Field& base() const { return base_; }

 private:
  Field base_;
  std::uint64_t seed_;
  std::map<unsigned, ExtensionPair> cache_;
};

struct FrobeniusSample {
  unsigned k = 1;
  Elem c = 0;
  std::string c_text;            // c formatted in F_{q^k}
  std::optional<CycleType> type;  // empty when ramified

  bool ramified() const { return !type.has_value(); }
};

/// Degree multiset of the irreducible factors of a monic squarefree
/// polynomial, read off its distinct-degree factorization.
CycleType factor_degree_type(const Poly& a);

/// Draws `count` points c of F_{q^k} (duplicates dropped) and records the
/// factor-degree type of L(X)/X - c, or Ramified when it is not squarefree.
/// Throws TooLarge when q^k exceeds the enumeration guard.
std::vector<FrobeniusSample> frobenius_sample(const LinearizedPoly& L, unsigned k, unsigned count, Rng& rng,
                                              ExtensionCache& cache);

/// lcm of q^n - 1 and the element orders of the unramified samples.
/// Throws NoUsableSamples when every sample is ramified or the list is empty.
BigInt order_lower_bound(const std::vector<FrobeniusSample>& samples, std::uint64_t q, unsigned n);

/// Proper semilinear candidates GammaL_{n/d}(q^d), d | n, d > 1, with their
/// enumerated type sets. Throws GuardExceeded when one cannot be enumerated.
std::vector<GroupDescriptor> semilinear_candidates(std::uint64_t q, unsigned n);

enum class Verdict { CertifiedGL, UndeterminedWithinBudget, ExcludedCase };
std::string verdict_name(Verdict v);

struct CandidateEvidence {
  unsigned d = 0;
  std::string group;
  BigInt order;
  std::size_t type_count = 0;
  bool witness_absent = false;
};

struct ClassificationResult {
  Verdict verdict = Verdict::UndeterminedWithinBudget;
  std::uint64_t q = 0;
  unsigned n = 0;
  std::optional<FrobeniusSample> witness;
  std::vector<CandidateEvidence> candidates;
  BigInt order_lower_bound;
  std::optional<BigInt> proposition_divisor;  // q^m (q^m - 1)(q^n - 1)
  unsigned samples_used = 0;
  unsigned ramified = 0;
  std::map<CycleType, unsigned> observed;
  /// The witness re-checked against freshly enumerated candidate type sets.
  bool reverified = false;
};

/// Samples Frobenius types along the budget and certifies Gal = GL_n(q) as
/// soon as one type lies outside every proper semilinear candidate.
/// `candidates` may be supplied to share enumerations across calls.
ClassificationResult classify(const LinearizedPoly& L, const Budget& budget, std::uint64_t seed = kDefaultSeed,
                              const std::vector<GroupDescriptor>* candidates = nullptr);

struct CorollaryDivisor {
  unsigned a = 0;
  unsigned b = 0;
  BigInt divisor;  // a * b * deg f
  /// Root multiplicity -> number of distinct roots with it.
  std::map<unsigned, std::uint64_t> multiplicities;
};

/// Lexicographically least pair (a, b) of multiplicities of two distinct
/// roots with gcd(a, b) = 1. Throws Inseparable when f' = 0, NoCoprimePair.
CorollaryDivisor corollary_divisor(const Poly& f);

struct PropositionReport {
  std::uint64_t q = 0;
  unsigned n = 0;
  unsigned m = 0;
  BigInt divisor;
  BigInt gl_order;
  CorollaryDivisor corollary;
  bool corollary_matches = false;
  bool divides_gl = false;
  std::optional<Verdict> verdict;
  std::optional<bool> certified_consistent;
  std::optional<BigInt> lower_bound;
  std::optional<bool> lower_bound_compatible;
  bool pass = false;
};

/// Throws NoInteriorTerm for the excluded case.
PropositionReport proposition_check(const LinearizedPoly& L, bool with_classification = false,
                                    const Budget& budget = Budget::standard(), std::uint64_t seed = kDefaultSeed);

struct TheoremRow {
  LinearizedPoly L;
  ClassificationResult result;
};

struct TheoremTable {
  std::uint64_t q = 0;
  unsigned n = 0;
  std::vector<GroupDescriptor> candidates;
  std::vector<TheoremRow> rows;
  std::optional<TheoremRow> excluded;
  bool pass = false;
};

/// Classifies every monic normalized L of q-degree n with an interior term.
/// Throws BadArity unless n is an odd prime.
TheoremTable verify_theorem(std::uint64_t q, unsigned n, const Budget& budget = Budget::standard(),
                            std::uint64_t seed = kDefaultSeed, bool include_excluded = false);

struct ChebotarevRow {
  CycleType type;
  unsigned observed = 0;
  double empirical = 0;
  double expected = 0;  // share of GL_n(q) with this type
  bool realizable = false;
};

struct ChebotarevReport {
  std::vector<ChebotarevRow> rows;
  unsigned samples = 0;
  unsigned ramified = 0;
  double total_variation = 0;
};

/// Empirical type frequencies against the GL_n(q) proportions. Diagnostic.
ChebotarevReport chebotarev_report(const LinearizedPoly& L, const std::vector<FrobeniusSample>& samples);

}  // namespace linpoly
