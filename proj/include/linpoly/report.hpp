#pragma once

#include <cstdint>
#include <set>
#include <string>

#include <json.hpp>

#include "linpoly/galois.hpp"
#include "linpoly/groups.hpp"
#include "linpoly/newton.hpp"
#include "linpoly/poly.hpp"
#include "linpoly/series.hpp"

namespace linpoly {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Exact integer: a JSON number when it fits in 64 bits, a decimal string otherwise.
json big_json(const BigInt& v);

json field_json(const Field& F);
json cycle_type_json(const CycleType& t);
json census_json(const TypeCensus& c);
json group_json(const GroupDescriptor& g);
json factorization_json(const Poly& a, const Factorization& f);
json multiplicity_json(const LinearizedPoly& L, const MultiplicityDecomposition& md);
json sample_json(const FrobeniusSample& s);
json classification_json(const LinearizedPoly& L, const ClassificationResult& r);
json proposition_json(const LinearizedPoly& L, const PropositionReport& r);
json theorem_json(const TheoremTable& t);
json deduction_json(const DeductionReport& r);
json polygon_json(const NewtonPolygon& p);
json eisenstein_json(const EisensteinReport& e);
json chebotarev_json(const ChebotarevReport& r);

/// Full Lemma-3 run for one problem: H, the lift, the Eisenstein report, the
/// Newton polygon of f(X + alpha) - g(y + beta), and every check as a flag.
struct HenselRun {
  json report;
  bool pass = false;
};
HenselRun run_hensel(const HenselProblem& prob, std::size_t precision = kDefaultTruncation);

/// Polygon of f(X + alpha) - g(y + beta) compared with the predicted vertices.
HenselRun run_newton(const HenselProblem& prob, std::size_t precision = kDefaultTruncation);

/// The 50 seeded instances used by the Lemma-3 section.
std::vector<HenselProblem> hensel_instances(std::uint64_t seed, unsigned count = 50);

struct ReproduceOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Empty means every section: theorem, proposition, deduction, multiplicity, hensel.
  std::set<std::string> sections;
  Budget budget = Budget::standard();
  std::size_t precision = kDefaultTruncation;
  bool meta = true;
};

/// One JSON document with a pass flag per section and overall.
json reproduce_paper(const ReproduceOptions& opts);

const std::set<std::string>& reproduce_sections();

}  // namespace linpoly
