#include <doctest.h>

#include <numeric>

#include "linpoly/error.hpp"
#include "linpoly/linearized.hpp"
#include "linpoly/newton.hpp"
#include "linpoly/parse.hpp"
#include "linpoly/report.hpp"
#include "linpoly/series.hpp"

using namespace linpoly;

namespace {

Poly P(const Field& F, const char* s) { return parse_poly(F, s); }

TruncatedSeries S(const Field& F, std::size_t N, std::vector<Elem> c) { return TruncatedSeries(F, N, std::move(c)); }

// X-polynomial with coefficient series given as polynomials in z.
SeriesPoly SP(const Field& F, std::size_t N, const std::vector<const char*>& coeffs) {
  std::vector<TruncatedSeries> c;
  for (const char* s : coeffs) c.push_back(TruncatedSeries::from_poly(parse_poly(F, s), N));
  return SeriesPoly(F, N, std::move(c));
}

}  // namespace

TEST_CASE("series arithmetic") {
  const Field F2 = Field::prime(2);
  CHECK(S(F2, 4, {1, 1}).inverse() == S(F2, 4, {1, 1, 1, 1}));
  CHECK(S(F2, 3, {0, 1}) * S(F2, 3, {0, 1}) == S(F2, 3, {0, 0, 1}));
  CHECK(S(F2, 5, {1, 1}).compose_with_z_power(2) == S(F2, 5, {1, 0, 1}));
  CHECK(S(F2, 5, {0, 0, 1}).valuation() == std::optional<std::size_t>(2));
  CHECK_FALSE(S(F2, 5, {}).valuation().has_value());
  CHECK((S(F2, 3, {1}) + S(F2, 6, {0, 1})).precision() == 3);
  try {
    S(F2, 4, {0, 1}).inverse();
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAUnit);
  }
  const Field F7 = Field::prime(7);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    std::vector<Elem> c(10);
    for (auto& x : c) x = rng.below(7);
    if (!c[0]) c[0] = 1;
    const TruncatedSeries s(F7, 10, c);
    CHECK(s * s.inverse() == TruncatedSeries::constant(F7, 10, 1));
  }
}

TEST_CASE("bezout exponents") {
  auto p1 = bezout_rs(1, 2);
  CHECK(p1.r == 1);
  CHECK(p1.s == 1);
  auto p2 = bezout_rs(3, 2);
  CHECK(p2.r == 1);
  CHECK(p2.s == 2);
  auto p3 = bezout_rs(2, 3);
  CHECK(p3.r == 1);
  CHECK(p3.s == 1);
  try {
    bezout_rs(2, 2);
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
  for (unsigned a = 1; a < 30; ++a) {
    for (unsigned b = 1; b < 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto p = bezout_rs(a, b);
      CHECK(static_cast<long>(p.s) * b - static_cast<long>(p.r) * a == 1);
      CHECK(p.r >= 1);
      // least s: s - a would make r non-positive
      CHECK((p.s <= a || static_cast<long>(p.s - a) * b - 1 < static_cast<long>(a)));
    }
  }
}

TEST_CASE("shift_roots") {
  const Field F3 = Field::prime(3), F2 = Field::prime(2);
  auto s1 = shift_roots(P(F3, "(X-1)^2*X"), 1);
  CHECK(s1.multiplicity == 2);
  CHECK(s1.cofactor == P(F3, "X+1"));
  auto s2 = shift_roots(P(F3, "X^3"), 0);
  CHECK(s2.multiplicity == 3);
  CHECK(s2.cofactor == P(F3, "1"));
  auto s3 = shift_roots(P(F2, "X^2+1"), 1);
  CHECK(s3.multiplicity == 2);
  CHECK(s3.cofactor.is_one());
  try {
    shift_roots(P(F3, "X^2+1"), 1);
    FAIL("expected NotARoot");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotARoot);
  }
}

TEST_CASE("build_H") {
  const Field F2 = Field::prime(2), F3 = Field::prime(3);
  const auto p1 = HenselProblem::make(P(F2, "X"), 0, P(F2, "y^2"), 0);
  CHECK(p1.rs.r == 1);
  CHECK(p1.rs.s == 1);
  CHECK(build_H(p1, 8) == SP(F2, 8, {"z", "1"}));  // X - z in characteristic 2
  const auto p2 = HenselProblem::make(P(F3, "X^2*(X+1)"), 0, P(F3, "y^3"), 0);
  CHECK(p2.rs.r == 1);
  CHECK(p2.rs.s == 1);
  const SeriesPoly H2 = build_H(p2, 16);
  CHECK(H2 == SP(F3, 16, {"-z", "0", "1", "z"}));  // X^2 (X z + 1) - z
  CHECK(H2.coeff(0).valuation() == std::optional<std::size_t>(1));
}

TEST_CASE("hensel lifting examples") {
  const Field F5 = Field::prime(5), F3 = Field::prime(3);
  const SeriesPoly H1 = SP(F5, 8, {"-z", "1"});
  const auto r1 = hensel_lift(H1, 1, 8);
  CHECK(r1.A == H1);
  CHECK(r1.U == SP(F5, 8, {"1"}));

  const auto p2 = HenselProblem::make(P(F3, "X^2*(X+1)"), 0, P(F3, "y^3"), 0);
  const SeriesPoly H2 = build_H(p2, 16);
  const auto r2 = hensel_lift(H2, 2, 16);
  CHECK_FALSE((H2 - r2.A * r2.U).valuation().has_value());
  CHECK(r2.A.degree() == 2);
  CHECK(r2.A.mod_z() == P(F3, "X^2"));
  CHECK(r2.A.degree() + r2.U.degree() == H2.degree());
  CHECK(eisenstein_check(r2.A).eisenstein);

  for (unsigned a = 1; a <= 5; ++a) {
    std::vector<const char*> c(a + 1, "0");
    c[0] = "-z";
    c[a] = "1";
    const SeriesPoly H = SP(F5, 8, c);
    const auto r = hensel_lift(H, a, 8);
    CHECK(r.A == H);
    CHECK(r.U == SP(F5, 8, {"1"}));
  }
  // X^a and the cofactor share the root 0 mod z.
  CHECK_THROWS_AS(hensel_lift(SP(F5, 8, {"-z", "0", "z", "1"}), 1, 8), Error);
}

TEST_CASE("residual doubling") {
  for (const auto& prob : hensel_instances(kDefaultSeed, 10)) {
    const auto r = hensel_lift(build_H(prob, 32), prob.a, 32);
    REQUIRE(r.residual_valuations.size() == 6);
    for (std::size_t t = 0; t < r.residual_valuations.size(); ++t) {
      CHECK(r.residual_valuations[t] >= std::min<std::size_t>(std::size_t{1} << t, 32));
    }
  }
}

TEST_CASE("eisenstein check") {
  const Field F2 = Field::prime(2);
  CHECK(eisenstein_check(SP(F2, 8, {"z", "0", "0", "1"})).eisenstein);
  const auto rep = eisenstein_check(SP(F2, 8, {"z^2", "0", "1"}));
  CHECK_FALSE(rep.eisenstein);
  CHECK(rep.valuations[0] == std::optional<std::size_t>(2));
  CHECK_FALSE(eisenstein_check(SP(F2, 8, {"z", "1", "1"})).eisenstein);
  try {
    eisenstein_check(SP(F2, 4, {"0", "z", "1"}));
    FAIL("expected PrecisionTooLow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrecisionTooLow);
  }
}

TEST_CASE("newton polygon examples") {
  const Field F5 = Field::prime(5);
  const NewtonPolygon p1 = newton_polygon(shifted_difference(P(F5, "X^2*(X+1)"), 0, P(F5, "X^3"), 0, 32));
  CHECK(p1.vertices == std::vector<PolygonVertex>{{0, 3}, {2, 0}, {3, 0}});
  REQUIRE(p1.segments.size() == 2);
  CHECK(p1.segments[0].slope == Rational(-3, 2));
  CHECK(p1.segments[0].length == 2);
  CHECK(p1.segments[1].slope == Rational(0));

  const NewtonPolygon p2 = newton_polygon(shifted_difference(P(F5, "X"), 0, P(F5, "X"), 0, 32));
  CHECK(p2.vertices == std::vector<PolygonVertex>{{0, 1}, {1, 0}});
  CHECK(p2.segments.size() == 1);

  // g(y) vanishes to the working precision: the polygon cannot be resolved.
  CHECK_THROWS_AS(newton_polygon(shifted_difference(P(F5, "X^2*(X+1)"), 0, P(F5, "X^40"), 0, 32)), Error);
}

TEST_CASE("newton polygon of L(X)/X - L(y)/y at the two multiplicities") {
  Rng rng(8);
  for (std::uint64_t q : {2u, 3u}) {
    const Field F = field_of_order(q);
    for (const auto& L : all_with_interior(F, 3)) {
      const auto md = multiplicity_decomposition(L);
      unsigned split = 1;
      for (const auto& fac : factor(md.h, rng).factors) split = std::lcm(split, static_cast<unsigned>(fac.poly.degree()));
      const auto ext = extend(F, split, rng);
      const Poly f = L.reduced_quotient().mapped(ext.embedding);
      const Elem beta = roots(md.h.mapped(ext.embedding), rng).front();
      const auto prob = HenselProblem::make(f, 0, f, beta);
      CHECK(prob.a == md.zero_root_multiplicity);
      CHECK(prob.b == md.h_root_multiplicity);
      const auto poly = newton_polygon(shifted_difference(f, 0, f, beta, 32));
      const auto n = static_cast<long long>(f.degree());
      CHECK(poly.vertices == std::vector<PolygonVertex>{{0, static_cast<long long>(prob.b)}, {static_cast<long long>(prob.a), 0}, {n, 0}});
      CHECK(run_hensel(prob, 32).pass);
    }
  }
}

TEST_CASE("fifty seeded instances pass every check") {
  const auto probs = hensel_instances(kDefaultSeed, 50);
  CHECK(probs.size() == 50);
  for (const auto& prob : probs) {
    CHECK(prob.field.order() <= 9);
    const auto run = run_hensel(prob, 32);
    CHECK(run.pass);
  }
}

TEST_CASE("choose_problem builds the splitting field") {
  Rng rng(5);
  const Field F2 = Field::prime(2);
  const auto prob = choose_problem(P(F2, "X^2*(X^2+X+1)"), P(F2, "X^3+X+1"), rng);
  CHECK(prob.field.order() == 64);  // lcm(2, 3) = 6
  CHECK(std::gcd(prob.a, prob.b) == 1);
  CHECK_THROWS_AS(choose_problem(P(F2, "X^2"), P(F2, "(X+1)^2"), rng), Error);
}
