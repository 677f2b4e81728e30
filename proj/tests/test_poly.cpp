#include <doctest.h>

#include "linpoly/error.hpp"
#include "linpoly/linearized.hpp"
#include "linpoly/parse.hpp"
#include "linpoly/poly.hpp"
#include "oracles.hpp"

using namespace linpoly;

namespace {

Poly P(const Field& F, const char* s) { return parse_poly(F, s); }

Poly random_poly(const Field& F, unsigned deg, Rng& rng) {
  std::vector<Elem> c(deg + 1);
  for (auto& x : c) x = rng.below(F.order());
  if (c[deg] == 0) c[deg] = 1;
  return Poly(F, std::move(c));
}

}  // namespace

TEST_CASE("arithmetic examples") {
  const Field F2 = Field::prime(2), F3 = Field::prime(3), F5 = Field::prime(5);
  CHECK(P(F2, "X+1") * P(F2, "X+1") == P(F2, "X^2+1"));
  auto [q, r] = divmod(P(F3, "X^3-X"), P(F3, "X"));
  CHECK(q == P(F3, "X^2-1"));
  CHECK(r.is_zero());
  // Repeated squaring against naive expansion.
  const Poly m = P(F5, "X^2+1");
  CHECK(mod_pow(P(F5, "X"), 5, m) == pow(P(F5, "X"), 5) % m);
  CHECK(mod_pow(P(F5, "X+2"), BigInt(1000003), m) == mod_pow(P(F5, "X+2"), 1000003ULL, m));
  CHECK_THROWS_AS(divmod(P(F5, "X"), Poly(F5)), Error);
  CHECK_THROWS_AS(P(F2, "X") + P(F3, "X"), Error);
}

TEST_CASE("gcd") {
  const Field F3 = Field::prime(3), F2 = Field::prime(2);
  CHECK(gcd(P(F3, "X^2-1"), P(F3, "X-1")) == P(F3, "X+2"));
  CHECK(gcd(P(F3, "2*X+1"), Poly(F3)) == P(F3, "X+2"));
  const Poly f = P(F2, "X^7+X");
  CHECK(gcd(f, f.derivative()).degree() >= 1);
  // Root-stripping oracle: X^7+X = X (X+1)^2 (X^2+X+1)^2.
  CHECK(f == P(F2, "X*(X+1)^2*(X^2+X+1)^2"));
  try {
    gcd(Poly(F3), Poly(F3));
    FAIL("expected BothZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BothZero);
  }
  const auto eg = ext_gcd(P(F3, "X^3+2*X+1"), P(F3, "X^2+1"));
  CHECK(eg.s * P(F3, "X^3+2*X+1") + eg.t * P(F3, "X^2+1") == eg.g);
}

TEST_CASE("derivative") {
  const Field F4 = field_of_order(4), F2 = Field::prime(2), F3 = Field::prime(3);
  CHECK(P(F4, "X^4").derivative().is_zero());
  CHECK(P(F2, "X^3+X+1").derivative() == P(F2, "X^2+1"));
  const Poly d = P(F3, "X^8").derivative();  // X^{q^2 - 1}
  CHECK(d[7] == 2);
}

TEST_CASE("squarefree decomposition") {
  const Field F2 = Field::prime(2), F3 = Field::prime(3);
  auto s1 = squarefree_decomposition(P(F2, "X^2+1"));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].poly == P(F2, "X+1"));
  CHECK(s1[0].multiplicity == 2);
  auto s2 = squarefree_decomposition(P(F3, "X*(X+1)^2"));
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].poly == P(F3, "X"));
  CHECK(s2[1].poly == P(F3, "X+1"));
  CHECK(s2[1].multiplicity == 2);
  auto s3 = squarefree_decomposition(pow(P(F2, "X^3+X+1"), 4));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].poly == P(F2, "X^3+X+1"));
  CHECK(s3[0].multiplicity == 4);
  CHECK_THROWS_AS(squarefree_decomposition(Poly(F2)), Error);
}

TEST_CASE("distinct-degree factorization") {
  const Field F2 = Field::prime(2);
  auto d1 = distinct_degree_factorization(P(F2, "X^2+X"));
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].degree == 1);
  auto d2 = distinct_degree_factorization(P(F2, "X^2+X+1"));
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].degree == 2);
  auto d3 = distinct_degree_factorization(P(F2, "X^4+X"));
  REQUIRE(d3.size() == 2);
  CHECK(d3[0].poly == P(F2, "X^2+X"));
  CHECK(d3[1].poly == P(F2, "X^2+X+1"));
  CHECK_THROWS_AS(distinct_degree_factorization(P(F2, "X^2+1")), Error);
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const Field F = field_of_order(i % 2 ? 9 : 8);
    Poly a = random_poly(F, 1 + rng.below(12), rng).monic();
    if (!is_squarefree(a)) continue;
    for (const auto& part : distinct_degree_factorization(a)) CHECK(part.poly.degree() % part.degree == 0);
  }
}

TEST_CASE("equal-degree factorization") {
  Rng rng(9);
  const Field F2 = Field::prime(2), F5 = Field::prime(5);
  auto e1 = equal_degree_factorization(P(F2, "X^2+X"), 1, rng);
  REQUIRE(e1.size() == 2);
  CHECK(e1[0] == P(F2, "X"));
  CHECK(e1[1] == P(F2, "X+1"));
  auto e2 = equal_degree_factorization(P(F5, "X^2+1"), 1, rng);
  REQUIRE(e2.size() == 2);
  CHECK(e2[0] == P(F5, "X+2"));
  CHECK(e2[1] == P(F5, "X+3"));
  // Two irreducible quadratics over F_4 (characteristic 2 trace splitting).
  const Field F4 = field_of_order(4);
  std::vector<Poly> quads;
  for (const Poly& p : oracle::monic_of_degree(F4, 2)) {
    if (is_irreducible(p)) quads.push_back(p);
  }
  REQUIRE(quads.size() == 6);
  auto e3 = equal_degree_factorization(quads[1] * quads[4], 2, rng);
  REQUIRE(e3.size() == 2);
  CHECK(e3[0] == std::min(quads[1], quads[4]));
  CHECK(e3[1] == std::max(quads[1], quads[4]));
  CHECK_THROWS_AS(equal_degree_factorization(P(F2, "X^3+X+1"), 2, rng), Error);
}

TEST_CASE("factor examples") {
  Rng rng(2);
  const Field F3 = Field::prime(3), F2 = Field::prime(2);
  auto f1 = factor(P(F3, "X^3-X"), rng);
  REQUIRE(f1.factors.size() == 3);
  CHECK(f1.factors[0].poly == P(F3, "X"));
  CHECK(f1.factors[1].poly == P(F3, "X+1"));
  CHECK(f1.factors[2].poly == P(F3, "X+2"));
  auto f2 = factor(P(F2, "X^4+X+1"), rng);
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0].multiplicity == 1);
  CHECK(is_irreducible(P(F2, "X^4+X+1")));
  CHECK_THROWS_AS(factor(Poly(F2), rng), Error);
}

TEST_CASE("factoring X^{q^m} h^{q^m} from a linearized polynomial") {
  Rng rng(6);
  for (std::uint64_t q : {2u, 3u}) {
    const Field F = field_of_order(q);
    for (const auto& L : all_with_interior(F, 3)) {
      const auto md = multiplicity_decomposition(L);
      const Poly target = pow(md.h, md.h_root_multiplicity).shifted(md.h_root_multiplicity);
      const Factorization fac = factor(target, rng);
      CHECK(fac.expand(F) == target);
      for (const auto& f : fac.factors) CHECK(f.multiplicity == md.h_root_multiplicity);
      CHECK(fac.factors.front().poly == Poly::x(F));
    }
  }
}

TEST_CASE("irreducibility and squarefreeness") {
  const Field F2 = Field::prime(2);
  CHECK_FALSE(is_squarefree(P(F2, "X^2+1")));
  CHECK(is_irreducible(P(F2, "X^2+X+1")));
  CHECK_FALSE(is_irreducible(P(F2, "X^2+1")));
  CHECK(is_squarefree(P(F2, "X^3+X+1")));
}

TEST_CASE("round trip on 500 random polynomials") {
  Rng rng(2024);
  static const std::uint64_t orders[] = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 81};
  for (int i = 0; i < 500; ++i) {
    const Field F = field_of_order(orders[i % 12]);
    const Poly a = random_poly(F, static_cast<unsigned>(rng.below(13)), rng);
    const Factorization fac = factor(a, rng);
    CHECK(fac.expand(F) == a);
    CHECK(fac.total_degree() == static_cast<std::size_t>(a.degree()));
    for (const auto& f : fac.factors) CHECK(is_irreducible(f.poly));
  }
}

TEST_CASE("agreement with trial division") {
  Rng rng(77);
  static const std::uint64_t orders[] = {2, 3, 4, 5, 7, 8, 9};
  for (int i = 0; i < 500; ++i) {
    const Field F = field_of_order(orders[i % 7]);
    const Poly a = random_poly(F, 1 + static_cast<unsigned>(rng.below(6)), rng);
    CHECK(oracle::as_map(factor(a, rng)) == oracle::trial_division(a));
  }
}

TEST_CASE("roots") {
  Rng rng(1);
  const Field F5 = Field::prime(5);
  CHECK(roots(P(F5, "X^2+1"), rng) == std::vector<Elem>{2, 3});
  CHECK(roots(P(F5, "X^2+2"), rng).empty());
}
