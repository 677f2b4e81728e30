#include "linpoly/galois.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "linpoly/error.hpp"

namespace linpoly {

Budget Budget::standard() { return uniform(64, 6); }

Budget Budget::uniform(unsigned count, unsigned max_k) {
  Budget b;
  for (unsigned k = 1; k <= max_k; ++k) b.schedule.emplace_back(k, count);
  return b;
}

unsigned Budget::total() const {
  unsigned t = 0;
  for (const auto& [k, c] : schedule) t += c;
  return t;
}

const ExtensionPair& ExtensionCache::get(unsigned k) {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  Rng rng = Rng::stream(seed_, "modulus-search/" + std::to_string(k));
  return cache_.emplace(k, extend(base_, k, rng)).first->second;
}

CycleType factor_degree_type(const Poly& a) {
  CycleType t;
  for (const auto& part : distinct_degree_factorization(a)) {
    t.add(part.degree, static_cast<std::uint64_t>(part.poly.degree()) / part.degree);
  }
  return t;
}

namespace {

std::uint64_t checked_power(std::uint64_t q, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > kEnumerationGuard / q) fail(ErrorCode::TooLarge, "q^k exceeds the sampling guard");
    r *= q;
  }
  return r;
}

FrobeniusSample sample_at(const LinearizedPoly& L, unsigned k, const ExtensionPair& ext, Elem c) {
  FrobeniusSample s;
  s.k = k;
  s.c = c;
  s.c_text = ext.field.format(c);
  const Poly f = specialize(L, ext.embedding, c);
  if (is_squarefree(f)) s.type = factor_degree_type(f);
  return s;
}

// One draw; nothing when c was already seen at this k.
std::optional<FrobeniusSample> draw(const LinearizedPoly& L, unsigned k, std::uint64_t Q, Rng& rng,
                                    ExtensionCache& cache, std::set<Elem>& seen) {
  const Elem c = rng.below(Q);
  if (!seen.insert(c).second) return std::nullopt;
  return sample_at(L, k, cache.get(k), c);
}

BigInt singer_order(std::uint64_t q, unsigned n) { return big_pow(BigInt(q), n) - 1; }

}  // namespace

std::vector<FrobeniusSample> frobenius_sample(const LinearizedPoly& L, unsigned k, unsigned count, Rng& rng,
                                              ExtensionCache& cache) {
  if (k == 0) fail(ErrorCode::BadInput, "extension degree must be positive");
  if (cache.base() != L.field()) fail(ErrorCode::FieldMismatch, "extension cache is over another field");
  const std::uint64_t Q = checked_power(L.field().order(), k);
  std::vector<FrobeniusSample> out;
  std::set<Elem> seen;
  for (unsigned i = 0; i < count; ++i) {
    if (auto s = draw(L, k, Q, rng, cache, seen)) out.push_back(std::move(*s));
  }
  return out;
}

BigInt order_lower_bound(const std::vector<FrobeniusSample>& samples, std::uint64_t q, unsigned n) {
  BigInt r = singer_order(q, n);
  bool usable = false;
  for (const auto& s : samples) {
    if (s.ramified()) continue;
    usable = true;
    r = big_lcm(r, permutation_order(*s.type));
  }
  if (!usable) fail(ErrorCode::NoUsableSamples, "no unramified samples");
  return r;
}

std::vector<GroupDescriptor> semilinear_candidates(std::uint64_t q, unsigned n) {
  std::vector<GroupDescriptor> out;
  for (unsigned d = 2; d <= n; ++d) {
    if (n % d) continue;
    GroupDescriptor g = describe_gamma_l(n, q, d);
    try {
      g.census = semilinear_cycle_types(q, n, d);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
      fail(ErrorCode::GuardExceeded, g.name() + " cannot be enumerated: " + e.what());
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CertifiedGL: return "CertifiedGL";
    case Verdict::UndeterminedWithinBudget: return "UndeterminedWithinBudget";
    case Verdict::ExcludedCase: return "ExcludedCase";
  }
  return "?";
}

ClassificationResult classify(const LinearizedPoly& L, const Budget& budget, std::uint64_t seed,
                              const std::vector<GroupDescriptor>* candidates) {
  ClassificationResult res;
  res.q = L.field().order();
  res.n = L.qdegree();
  const BigInt gl = order_gl(res.n, res.q);
  res.order_lower_bound = singer_order(res.q, res.n);
  if (L.is_excluded_case()) {
    res.verdict = Verdict::ExcludedCase;
    return res;
  }
  const unsigned m = *L.mlow();
  const BigInt qm = big_pow(BigInt(res.q), m);
  res.proposition_divisor = qm * (qm - 1) * singer_order(res.q, res.n);

  std::vector<GroupDescriptor> own;
  if (!candidates) {
    own = semilinear_candidates(res.q, res.n);
    candidates = &own;
  }
  auto outside_all = [&](const CycleType& t) {
    return std::none_of(candidates->begin(), candidates->end(),
                        [&](const GroupDescriptor& g) { return g.census->contains(t); });
  };

  Rng rng = Rng::stream(seed, "sampling");
  ExtensionCache cache(L.field(), seed);
  std::vector<FrobeniusSample> used;
  for (const auto& [k, count] : budget.schedule) {
    if (res.witness) break;
    const std::uint64_t Q = checked_power(res.q, k);
    std::set<Elem> seen;
    for (unsigned i = 0; i < count && !res.witness; ++i) {
      auto s = draw(L, k, Q, rng, cache, seen);
      if (!s) continue;
      ++res.samples_used;
      if (s->ramified()) {
        ++res.ramified;
        continue;
      }
      ++res.observed[*s->type];
      if (outside_all(*s->type)) res.witness = *s;
      used.push_back(std::move(*s));
    }
  }

  try {
    res.order_lower_bound = order_lower_bound(used, res.q, res.n);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoUsableSamples) throw;
  }
  if (!divides(res.order_lower_bound, gl)) fail(ErrorCode::Internal, "order lower bound does not divide |GL_n(q)|");
  if (!divides(*res.proposition_divisor, gl)) fail(ErrorCode::Internal, "proposition divisor does not divide |GL_n(q)|");

  for (const auto& g : *candidates) {
    CandidateEvidence ev{g.d, g.name(), g.order, g.census->counts.size(), false};
    ev.witness_absent = res.witness && !g.census->contains(*res.witness->type);
    res.candidates.push_back(std::move(ev));
  }
  if (res.witness) {
    res.verdict = Verdict::CertifiedGL;
    res.reverified = true;
    for (const auto& g : *candidates) {
      if (semilinear_cycle_types(res.q, res.n, g.d).contains(*res.witness->type)) res.reverified = false;
    }
    if (!res.reverified) fail(ErrorCode::Internal, "witness type reappeared in a fresh candidate enumeration");
  } else {
    res.verdict = Verdict::UndeterminedWithinBudget;
  }
  return res;
}

CorollaryDivisor corollary_divisor(const Poly& f) {
  if (f.degree() < 1) fail(ErrorCode::BadInput, "f must be non-constant");
  // f(X) - t has degree one in t, so it is irreducible over F_q(t); only
  // separability needs checking.
  if (f.derivative().is_zero()) fail(ErrorCode::Inseparable, "f' = 0, so f(X) - t is inseparable");
  CorollaryDivisor out;
  for (const auto& part : squarefree_decomposition(f.monic())) {
    out.multiplicities[part.multiplicity] += static_cast<std::uint64_t>(part.poly.degree());
  }
  for (const auto& [a, ca] : out.multiplicities) {
    for (const auto& [b, cb] : out.multiplicities) {
      if (b < a || std::gcd(a, b) != 1) continue;
      if (a == b && ca < 2) continue;
      out.a = a;
      out.b = b;
      out.divisor = BigInt(a) * b * static_cast<std::uint64_t>(f.degree());
      return out;
    }
  }
  fail(ErrorCode::NoCoprimePair, "no two roots have coprime multiplicities");
}

PropositionReport proposition_check(const LinearizedPoly& L, bool with_classification, const Budget& budget,
                                    std::uint64_t seed) {
  const MultiplicityDecomposition md = multiplicity_decomposition(L);
  PropositionReport rep;
  rep.q = L.field().order();
  rep.n = L.qdegree();
  rep.m = md.m;
  const BigInt qm = big_pow(BigInt(rep.q), rep.m);
  rep.divisor = qm * (qm - 1) * singer_order(rep.q, rep.n);
  rep.gl_order = order_gl(rep.n, rep.q);
  rep.corollary = corollary_divisor(L.reduced_quotient());
  rep.corollary_matches = BigInt(rep.corollary.a) == qm - 1 && BigInt(rep.corollary.b) == qm &&
                          rep.corollary.divisor == rep.divisor;
  rep.divides_gl = divides(rep.divisor, rep.gl_order);
  rep.pass = rep.corollary_matches && rep.divides_gl;
  if (with_classification) {
    const ClassificationResult cls = classify(L, budget, seed);
    rep.verdict = cls.verdict;
    if (cls.verdict == Verdict::CertifiedGL) {
      rep.certified_consistent = divides(rep.divisor, rep.gl_order);
      rep.pass = rep.pass && *rep.certified_consistent;
    }
    rep.lower_bound = cls.order_lower_bound;
    rep.lower_bound_compatible = divides(big_lcm(cls.order_lower_bound, rep.divisor), rep.gl_order);
    rep.pass = rep.pass && *rep.lower_bound_compatible;
  }
  return rep;
}

TheoremTable verify_theorem(std::uint64_t q, unsigned n, const Budget& budget, std::uint64_t seed,
                            bool include_excluded) {
  if (n < 3 || !is_prime(n)) fail(ErrorCode::BadArity, std::to_string(n) + " is not an odd prime");
  const Field F = field_of_order(q, seed);
  TheoremTable table;
  table.q = q;
  table.n = n;
  table.candidates = semilinear_candidates(q, n);
  table.pass = true;
  for (auto& L : all_with_interior(F, n)) {
    ClassificationResult r = classify(L, budget, seed, &table.candidates);
    table.pass = table.pass && r.verdict == Verdict::CertifiedGL;
    table.rows.push_back({std::move(L), std::move(r)});
  }
  if (include_excluded) {
    LinearizedPoly X = LinearizedPoly::make(F, {{n, 1}});
    ClassificationResult r = classify(X, budget, seed, &table.candidates);
    table.excluded = TheoremRow{std::move(X), std::move(r)};
  }
  return table;
}

ChebotarevReport chebotarev_report(const LinearizedPoly& L, const std::vector<FrobeniusSample>& samples) {
  ChebotarevReport rep;
  if (samples.empty()) return rep;
  const std::uint64_t q = L.field().order();
  const unsigned n = L.qdegree();
  const TypeCensus gl = gl_cycle_types(n, q);
  std::map<CycleType, unsigned> seen;
  for (const auto& s : samples) {
    ++rep.samples;
    if (s.ramified()) {
      ++rep.ramified;
      continue;
    }
    ++seen[*s.type];
  }
  const unsigned usable = rep.samples - rep.ramified;
  std::set<CycleType> all = gl.types();
  for (const auto& [t, c] : seen) all.insert(t);
  double tv = 0;
  for (const auto& t : all) {
    ChebotarevRow row;
    row.type = t;
    auto it = seen.find(t);
    row.observed = it == seen.end() ? 0 : it->second;
    row.empirical = usable ? static_cast<double>(row.observed) / usable : 0.0;
    auto g = gl.counts.find(t);
    row.realizable = g != gl.counts.end();
    row.expected = row.realizable ? static_cast<double>(g->second) / static_cast<double>(gl.elements) : 0.0;
    tv += std::abs(row.empirical - row.expected);
    rep.rows.push_back(std::move(row));
  }
  rep.total_variation = tv / 2;
  return rep;
}

}  // namespace linpoly
