#include "linpoly/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "linpoly/error.hpp"

namespace linpoly {

json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

json field_json(const Field& F) {
  return {{"spec", F.spec_string()},
          {"order", F.order()},
          {"characteristic", F.characteristic()},
          {"degree", F.degree()},
          {"description", F.describe()}};
}

json cycle_type_json(const CycleType& t) {
  json parts = json::array();
  for (const auto& [len, cnt] : t.parts()) parts.push_back({len, cnt});
  return {{"text", t.to_string()}, {"parts", parts}};
}

json census_json(const TypeCensus& c) {
  json types = json::array();
  for (const auto& [t, n] : c.counts) types.push_back({{"type", cycle_type_json(t)}, {"elements", n}});
  return {{"elements", c.elements}, {"distinct_types", c.counts.size()}, {"types", types}};
}

json group_json(const GroupDescriptor& g) {
  json j = {{"name", g.name()},
            {"kind", g.kind == GroupDescriptor::Kind::GL ? "GL" : "GammaL"},
            {"n", g.n},
            {"q", g.q},
            {"d", g.d},
            {"order", big_json(g.order)}};
  if (g.census) j["census"] = census_json(*g.census);
  return j;
}

json factorization_json(const Poly& a, const Factorization& f) {
  json factors = json::array();
  for (const auto& fac : f.factors) {
    factors.push_back({{"factor", fac.poly.to_string()}, {"degree", fac.poly.degree()}, {"multiplicity", fac.multiplicity}});
  }
  const bool ok = f.expand(a.field()) == a;
  return {{"field", field_json(a.field())},
          {"input", a.to_string()},
          {"unit", a.field().format(f.unit)},
          {"factors", factors},
          {"product_check", ok}};
}

json multiplicity_json(const LinearizedPoly& L, const MultiplicityDecomposition& md) {
  return {{"L", L.to_string()},
          {"spec", L.spec_string()},
          {"m", md.m},
          {"h", md.h.to_string()},
          {"zero_root_multiplicity", md.zero_root_multiplicity},
          {"h_root_multiplicity", md.h_root_multiplicity},
          {"reduced_quotient", L.reduced_quotient().to_string()},
          {"checks", {{"reconstruction", true}, {"derivative_identity", true}, {"h_squarefree", true}, {"h0_nonzero", true}}}};
}

json sample_json(const FrobeniusSample& s) {
  json j = {{"k", s.k}, {"c", s.c_text}, {"ramified", s.ramified()}};
  if (s.type) j["type"] = cycle_type_json(*s.type);
  return j;
}

json classification_json(const LinearizedPoly& L, const ClassificationResult& r) {
  json j = {{"L", L.to_string()},
            {"spec", L.spec_string()},
            {"q", r.q},
            {"n", r.n},
            {"verdict", verdict_name(r.verdict)}};
  j["witness"] = r.witness ? sample_json(*r.witness) : json(nullptr);
  j["samples_used"] = r.samples_used;
  j["ramified"] = r.ramified;
  json obs = json::array();
  for (const auto& [t, c] : r.observed) obs.push_back({{"type", cycle_type_json(t)}, {"count", c}});
  j["observed_types"] = obs;
  json cands = json::array();
  for (const auto& c : r.candidates) {
    cands.push_back({{"d", c.d},
                     {"group", c.group},
                     {"order", big_json(c.order)},
                     {"distinct_types", c.type_count},
                     {"witness_absent", c.witness_absent}});
  }
  j["candidates_excluded"] = cands;
  j["order_lower_bound"] = big_json(r.order_lower_bound);
  j["proposition_divisor"] = r.proposition_divisor ? big_json(*r.proposition_divisor) : json(nullptr);
  j["reverified"] = r.reverified;
  return j;
}

json proposition_json(const LinearizedPoly& L, const PropositionReport& r) {
  json j = {{"L", L.to_string()},
            {"spec", L.spec_string()},
            {"q", r.q},
            {"n", r.n},
            {"m", r.m},
            {"divisor", big_json(r.divisor)},
            {"gl_order", big_json(r.gl_order)},
            {"corollary", {{"a", r.corollary.a}, {"b", r.corollary.b}, {"divisor", big_json(r.corollary.divisor)}}},
            {"corollary_matches", r.corollary_matches},
            {"divides_gl", r.divides_gl}};
  if (r.verdict) j["verdict"] = verdict_name(*r.verdict);
  if (r.certified_consistent) j["certified_consistent"] = *r.certified_consistent;
  if (r.lower_bound) j["order_lower_bound"] = big_json(*r.lower_bound);
  if (r.lower_bound_compatible) j["lower_bound_compatible"] = *r.lower_bound_compatible;
  j["pass"] = r.pass;
  return j;
}

json theorem_json(const TheoremTable& t) {
  json cands = json::array();
  for (const auto& g : t.candidates) {
    cands.push_back({{"name", g.name()},
                     {"d", g.d},
                     {"order", big_json(g.order)},
                     {"enumerated", g.census ? g.census->elements : 0},
                     {"distinct_types", g.census ? g.census->counts.size() : 0}});
  }
  json rows = json::array();
  for (const auto& row : t.rows) rows.push_back(classification_json(row.L, row.result));
  json j = {{"q", t.q}, {"n", t.n}, {"gl_order", big_json(order_gl(t.n, t.q))}, {"candidates", cands}, {"rows", rows}};
  if (t.excluded) j["excluded"] = classification_json(t.excluded->L, t.excluded->result);
  j["pass"] = t.pass;
  return j;
}

json deduction_json(const DeductionReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr = {{"m", row.m}, {"divisor", big_json(row.divisor)}, {"divides", row.divides}, {"qm_divides_n", row.qm_divides_n}};
    if (row.reduced_condition) jr["n_minus_1_divides_1"] = *row.reduced_condition;
    rows.push_back(jr);
  }
  return {{"q", r.q}, {"n", r.n}, {"gamma_l1_order", big_json(r.gamma_l1_order)}, {"rows", rows}, {"no_admissible_m", r.no_admissible_m}};
}

json polygon_json(const NewtonPolygon& p) {
  json pts = json::array();
  for (const auto& [i, v] : p.points) pts.push_back({i, v ? json(*v) : json("inf")});
  json verts = json::array();
  for (const auto& v : p.vertices) verts.push_back({v.i, v.v});
  json segs = json::array();
  for (const auto& s : p.segments) {
    std::ostringstream slope;
    slope << s.slope.numerator();
    if (s.slope.denominator() != 1) slope << '/' << s.slope.denominator();
    segs.push_back({{"start", {s.start.i, s.start.v}},
                    {"end", {s.end.i, s.end.v}},
                    {"slope", slope.str()},
                    {"length", s.length}});
  }
  return {{"points", pts}, {"vertices", verts}, {"segments", segs}};
}

json eisenstein_json(const EisensteinReport& e) {
  json vals = json::array();
  for (const auto& v : e.valuations) vals.push_back(v ? json(*v) : json("inf"));
  return {{"eisenstein", e.eisenstein}, {"valuations", vals}, {"reason", e.reason}};
}

json chebotarev_json(const ChebotarevReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"type", cycle_type_json(row.type)},
                    {"observed", row.observed},
                    {"empirical", row.empirical},
                    {"expected", row.expected},
                    {"realizable", row.realizable}});
  }
  return {{"samples", r.samples}, {"ramified", r.ramified}, {"total_variation", r.total_variation}, {"rows", rows}};
}

namespace {

json problem_json(const HenselProblem& p) {
  return {{"field", field_json(p.field)},
          {"f", p.f.to_string("X")},
          {"g", p.g.to_string("y")},
          {"alpha", p.field.format(p.alpha)},
          {"beta", p.field.format(p.beta)},
          {"a", p.a},
          {"b", p.b},
          {"u", p.u.to_string("X")},
          {"v", p.v.to_string("y")},
          {"r", p.rs.r},
          {"s", p.rs.s}};
}

}  // namespace

HenselRun run_newton(const HenselProblem& prob, std::size_t precision) {
  HenselRun out;
  const SeriesPoly F = shifted_difference(prob.f, prob.alpha, prob.g, prob.beta, precision);
  const NewtonPolygon poly = newton_polygon(F);
  const auto predicted = predicted_vertices(prob.a, prob.b, static_cast<unsigned>(prob.f.degree()));
  bool increasing = true;
  for (std::size_t i = 1; i < poly.segments.size(); ++i) increasing = increasing && poly.segments[i - 1].slope < poly.segments[i].slope;
  const bool matches = poly.vertices == predicted;
  const bool two = poly.segments.size() == 2;
  const bool first_ok = !poly.segments.empty() && poly.segments[0].slope == Rational(-static_cast<long long>(prob.b), prob.a) &&
                        poly.segments[0].length == prob.a;
  json pred = json::array();
  for (const auto& v : predicted) pred.push_back({v.i, v.v});
  out.pass = matches && two && first_ok && increasing;
  out.report = {{"polygon", polygon_json(poly)},
                {"predicted_vertices", pred},
                {"checks",
                 {{"vertices_match", matches},
                  {"two_segments", two},
                  {"first_segment_slope_and_length", first_ok},
                  {"slopes_increasing", increasing}}},
                {"pass", out.pass}};
  return out;
}

HenselRun run_hensel(const HenselProblem& prob, std::size_t precision) {
  HenselRun out;
  const SeriesPoly H = build_H(prob, precision);
  const HenselResult lift = hensel_lift(H, prob.a, precision);
  const std::size_t N = H.precision();

  const bool product = !(H - lift.A * lift.U).valuation().has_value();
  const bool deg_a = lift.A.degree() == prob.a && lift.A.is_monic();
  const bool deg_sum = lift.A.degree() + lift.U.degree() == H.degree();
  const bool mod_z = lift.A.mod_z() == Poly::monomial(prob.field, 1, prob.a);
  bool doubling = true;
  for (std::size_t t = 0; t < lift.residual_valuations.size(); ++t) {
    const std::size_t want = std::min<std::size_t>(std::size_t{1} << t, N);
    if (lift.residual_valuations[t] < want) doubling = false;
    if (t && lift.residual_valuations[t] < lift.residual_valuations[t - 1]) doubling = false;
  }
  const EisensteinReport eis = eisenstein_check(lift.A);
  const HenselRun newton = run_newton(prob, precision);

  out.pass = product && deg_a && deg_sum && mod_z && doubling && eis.eisenstein && newton.pass;
  out.report = problem_json(prob);
  out.report["precision"] = N;
  out.report["H"] = H.to_string();
  out.report["A"] = lift.A.to_string();
  out.report["U"] = lift.U.to_string();
  out.report["precisions"] = lift.precisions;
  out.report["residual_valuations"] = lift.residual_valuations;
  out.report["eisenstein"] = eisenstein_json(eis);
  out.report["newton"] = newton.report;
  out.report["checks"] = {{"product_congruence", product},
                          {"degree_a", deg_a},
                          {"degree_conservation", deg_sum},
                          {"A_is_X_to_a_mod_z", mod_z},
                          {"residual_doubling", doubling},
                          {"eisenstein", eis.eisenstein},
                          {"newton_polygon", newton.pass}};
  out.report["pass"] = out.pass;
  return out;
}

std::vector<HenselProblem> hensel_instances(std::uint64_t seed, unsigned count) {
  static const std::uint64_t orders[] = {2, 3, 4, 5, 7, 8, 9};
  std::vector<Field> fields;
  for (auto q : orders) fields.push_back(field_of_order(q, seed));
  Rng rng = Rng::stream(seed, "hensel");
  std::vector<HenselProblem> out;
  for (unsigned i = 0; i < count; ++i) {
    const Field& F = fields[i % fields.size()];
    const std::uint64_t Q = F.order();
    unsigned a, b;
    do {
      a = 1 + static_cast<unsigned>(rng.below(4));
      b = 1 + static_cast<unsigned>(rng.below(4));
    } while (std::gcd(a, b) != 1);
    const Elem alpha = rng.below(Q);
    const Elem beta = rng.below(Q);
    // Cofactors must not vanish at the chosen root; u has degree >= 1 so the
    // polygon has its second segment.
    auto cofactor = [&](Elem root, unsigned min_deg) {
      for (;;) {
        const unsigned deg = min_deg + static_cast<unsigned>(rng.below(2));
        std::vector<Elem> c(deg + 1);
        for (auto& x : c) x = rng.below(Q);
        c[deg] = 1;
        Poly p(F, std::move(c));
        if (p.eval(root) != 0) return p;
      }
    };
    const Poly u = cofactor(alpha, 1);
    const Poly v = cofactor(beta, 0);
    const Poly X = Poly::x(F);
    const Poly f = pow(X - Poly::constant(F, alpha), a) * u;
    const Poly g = pow(X - Poly::constant(F, beta), b) * v;
    out.push_back(HenselProblem::make(f, alpha, g, beta));
  }
  return out;
}

const std::set<std::string>& reproduce_sections() {
  static const std::set<std::string> s{"theorem", "proposition", "deduction", "multiplicity", "hensel"};
  return s;
}

namespace {

json theorem_section(const ReproduceOptions& o) {
  static const std::pair<std::uint64_t, unsigned> cases[] = {{2, 3}, {3, 3}, {4, 3}, {2, 5}};
  json out = json::array();
  bool pass = true;
  for (const auto& [q, n] : cases) {
    const TheoremTable t = verify_theorem(q, n, o.budget, o.seed, true);
    pass = pass && t.pass;
    out.push_back(theorem_json(t));
  }
  return {{"cases", out}, {"pass", pass}};
}

json proposition_section(const ReproduceOptions& o) {
  json out = json::array();
  bool pass = true;
  auto run = [&](const LinearizedPoly& L) {
    const PropositionReport r = proposition_check(L, false, o.budget, o.seed);
    pass = pass && r.pass;
    out.push_back(proposition_json(L, r));
  };
  static const std::pair<std::uint64_t, unsigned> cases[] = {{2, 3}, {3, 3}, {4, 3}, {2, 5}};
  for (const auto& [q, n] : cases) {
    for (const auto& L : all_with_interior(field_of_order(q, o.seed), n)) run(L);
  }
  const Field F2 = Field::prime(2);
  for (unsigned m = 1; m <= 3; ++m) run(LinearizedPoly::make(F2, {{m, 1}, {4, 1}}));
  return {{"cases", out}, {"pass", pass}};
}

json deduction_section() {
  json out = json::array();
  bool pass = true;
  for (unsigned n : {3u, 5u, 7u, 11u, 13u}) {
    for (std::uint64_t q = 2; q <= 32; ++q) {
      if (!prime_power(q)) continue;
      const DeductionReport r = divisibility_deduction(q, n);
      pass = pass && r.no_admissible_m;
      out.push_back(deduction_json(r));
    }
  }
  return {{"cases", out}, {"pass", pass}};
}

json multiplicity_section(const ReproduceOptions& o) {
  json out = json::array();
  bool pass = true;
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const Field F = field_of_order(q, o.seed);
    for (unsigned n = 2; n <= 5; ++n) {
      std::uint64_t checked = 0;
      json failures = json::array();
      for (const auto& L : all_with_interior(F, n)) {
        try {
          const auto md = multiplicity_decomposition(L);
          if (std::gcd(md.zero_root_multiplicity, md.h_root_multiplicity) != 1) {
            failures.push_back({{"L", L.spec_string()}, {"error", "multiplicities not coprime"}});
          }
        } catch (const Error& e) {
          failures.push_back({{"L", L.spec_string()}, {"error", e.what()}});
        }
        ++checked;
      }
      pass = pass && failures.empty();
      out.push_back({{"q", q}, {"n", n}, {"polynomials", checked}, {"failures", failures}});
    }
  }
  return {{"cases", out}, {"pass", pass}};
}

json hensel_section(const ReproduceOptions& o) {
  json out = json::array();
  bool pass = true;
  for (const auto& prob : hensel_instances(o.seed)) {
    HenselRun r = run_hensel(prob, o.precision);
    pass = pass && r.pass;
    out.push_back(std::move(r.report));
  }
  return {{"instances", out}, {"pass", pass}};
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

json reproduce_paper(const ReproduceOptions& opts) {
  for (const auto& s : opts.sections) {
    if (!reproduce_sections().count(s)) fail(ErrorCode::BadInput, "unknown section '" + s + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  auto wanted = [&](const std::string& s) { return opts.sections.empty() || opts.sections.count(s) != 0; };

  json doc;
  doc["tool"] = "linpoly";
  doc["version"] = kToolVersion;
  doc["seed"] = opts.seed;
  json sched = json::array();
  for (const auto& [k, c] : opts.budget.schedule) sched.push_back({k, c});
  doc["budget"] = sched;
  doc["precision"] = opts.precision;

  json sections = json::object();
  json timings = json::object();
  bool pass = true;
  auto run = [&](const std::string& name, auto&& fn) {
    if (!wanted(name)) return;
    const auto t0 = std::chrono::steady_clock::now();
    json s = fn();
    timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    pass = pass && s["pass"].get<bool>();
    sections[name] = std::move(s);
  };
  run("theorem", [&] { return theorem_section(opts); });
  run("proposition", [&] { return proposition_section(opts); });
  run("deduction", [&] { return deduction_section(); });
  run("multiplicity", [&] { return multiplicity_section(opts); });
  run("hensel", [&] { return hensel_section(opts); });
  doc["sections"] = std::move(sections);
  doc["pass"] = pass;
  if (opts.meta) {
    doc["meta"] = {{"generated_at", utc_now()},
                   {"elapsed_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()},
                   {"section_seconds", timings}};
  }
  return doc;
}

}  // namespace linpoly
