#include <doctest.h>

#include "linpoly/error.hpp"
#include "linpoly/groups.hpp"
#include "oracles.hpp"

using namespace linpoly;

namespace {

CycleType T(std::map<std::uint64_t, std::uint64_t> m) { return CycleType(std::move(m)); }

}  // namespace

TEST_CASE("orders") {
  CHECK(order_gl(1, 7) == 6);
  CHECK(order_gl(3, 2) == 168);
  CHECK(order_gl(2, 3) == 48);
  CHECK(order_gl(4, 2) == 20160);
  CHECK(order_gl(5, 2) == BigInt(9999360));
  CHECK(order_gamma_l(3, 2, 3) == 21);
  CHECK(order_gamma_l(3, 4, 3) == 189);
  CHECK(order_gamma_l(4, 2, 2) == 360);
  CHECK(order_gamma_l(4, 2, 4) == 60);
  for (unsigned n = 1; n <= 7; ++n) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      CHECK(order_gamma_l(n, q, n) == BigInt(n) * (big_pow(BigInt(q), n) - 1));
    }
  }
  try {
    order_gamma_l(4, 2, 3);
    FAIL("expected NotADivisor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotADivisor);
  }
}

TEST_CASE("GL orders against matrix enumeration") {
  const std::pair<unsigned, std::uint64_t> cases[] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {1, 5}};
  for (const auto& [n, q] : cases) CHECK(BigInt(oracle::gl_order_by_matrices(n, q)) == order_gl(n, q));
}

TEST_CASE("GammaL_1(8)") {
  const TypeCensus c = semilinear_cycle_types(2, 3, 3);
  CHECK(c.elements == 21);
  CHECK(c.contains(T({{1, 7}})));
  CHECK(c.contains(T({{1, 1}, {3, 2}})));
  for (const auto& t : c.types()) {
    for (const auto& [len, cnt] : t.parts()) CHECK(len % 2 == 1);
    CHECK(t.total() == 7);
  }
  CHECK(semilinear_cycle_types(2, 1, 1).types() == std::set<CycleType>{T({{1, 1}})});
}

TEST_CASE("GammaL_1 against the direct definition") {
  const std::pair<std::uint64_t, unsigned> cases[] = {{2, 3}, {3, 3}, {4, 3}, {2, 5}, {2, 4}, {3, 2}};
  for (const auto& [q, n] : cases) {
    CAPTURE(q);
    CAPTURE(n);
    const TypeCensus ours = semilinear_cycle_types(q, n, n);
    const TypeCensus ref = oracle::gamma_l1_direct(q, n);
    CHECK(ours.counts == ref.counts);
    CHECK(BigInt(ours.elements) == order_gamma_l(n, q, n));
  }
}

TEST_CASE("GL cycle types") {
  const TypeCensus c1 = gl_cycle_types(1, 3);
  CHECK(c1.types() == std::set<CycleType>{T({{1, 2}}), T({{2, 1}})});
  const TypeCensus c3 = gl_cycle_types(3, 2);
  CHECK(c3.elements == 168);
  CHECK(c3.contains(T({{7, 1}})));
  bool four = false;
  for (const auto& t : c3.types()) four = four || t.parts().count(4);
  CHECK(four);
  CHECK(c3.counts == oracle::gl_types_by_matrices(3, 2).counts);
  CHECK(gl_cycle_types(2, 3).counts == oracle::gl_types_by_matrices(2, 3).counts);
  CHECK(gl_cycle_types(2, 4).counts == oracle::gl_types_by_matrices(2, 4).counts);
}

TEST_CASE("semilinear types lie among GL types") {
  const std::tuple<std::uint64_t, unsigned, unsigned> cases[] = {{2, 3, 3}, {2, 4, 2}, {2, 4, 4}, {3, 2, 2}, {3, 3, 3}, {4, 2, 2}};
  for (const auto& [q, n, d] : cases) {
    const TypeCensus gl = gl_cycle_types(n, q);
    const TypeCensus sl = semilinear_cycle_types(q, n, d);
    CHECK(BigInt(sl.elements) == order_gamma_l(n, q, d));
    std::uint64_t sum = 0;
    for (const auto& [t, c] : sl.counts) {
      CHECK(gl.contains(t));
      CHECK(t.total() == gl.counts.begin()->first.total());
      sum += c;
    }
    CHECK(sum == sl.elements);
  }
}

TEST_CASE("enumeration guards") {
  try {
    gl_cycle_types(4, 3);  // 24261120 elements
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK_THROWS_AS(semilinear_cycle_types(6, 2, 2), Error);
}

TEST_CASE("divisibility deduction") {
  const DeductionReport r = divisibility_deduction(2, 3);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].divisor == 14);
  CHECK_FALSE(r.rows[0].divides);
  CHECK(r.rows[1].divisor == 84);
  CHECK_FALSE(r.rows[1].divides);
  CHECK(r.no_admissible_m);
  CHECK(r.gamma_l1_order == 21);

  const DeductionReport r3 = divisibility_deduction(3, 3);
  CHECK(r3.rows[0].divisor == 156);
  CHECK_FALSE(r3.rows[0].divides);
  CHECK(r3.rows[0].qm_divides_n);
  CHECK(r3.rows[0].reduced_condition == false);

  for (unsigned n : {3u, 5u, 7u, 11u, 13u}) {
    for (std::uint64_t q = 2; q <= 32; ++q) {
      if (prime_power(q)) CHECK(divisibility_deduction(q, n).no_admissible_m);
    }
  }
  try {
    divisibility_deduction(2, 4);
    FAIL("expected BadArity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadArity);
  }
  CHECK_THROWS_AS(divisibility_deduction(2, 2), Error);
}

TEST_CASE("permutation orders") {
  CHECK(permutation_order(T({{1, 7}})) == 1);
  CHECK(permutation_order(T({{3, 2}, {1, 1}})) == 3);
  CHECK(permutation_order(T({{4, 1}, {2, 1}, {1, 1}})) == 4);
  CHECK(T({{1, 1}, {3, 2}}).to_string() == "{1:1, 3:2}");
}
