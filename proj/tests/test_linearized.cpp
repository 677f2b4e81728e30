#include <doctest.h>

#include "linpoly/error.hpp"
#include "linpoly/linearized.hpp"
#include "linpoly/parse.hpp"

using namespace linpoly;

namespace {

Poly P(const Field& F, const char* s) { return parse_poly(F, s); }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("construction and normalization") {
  const Field F2 = Field::prime(2), F3 = Field::prime(3);
  const auto L = LinearizedPoly::make(F2, {{1, 1}, {3, 1}});
  CHECK(L.to_string() == "X^8 + X^2");
  CHECK(L.mlow() == 1u);
  const auto X8 = LinearizedPoly::make(F2, {{3, 1}});
  CHECK_FALSE(X8.mlow().has_value());
  CHECK(X8.is_excluded_case());
  const auto L3 = LinearizedPoly::make(F3, {{1, 2}, {2, 1}});
  CHECK(L3.to_string() == "X^9 + 2*X^3");
  // Scaling by a_n^{-1} and dropping a_0.
  const auto L4 = LinearizedPoly::make(F3, {{0, 1}, {1, 1}, {2, 2}});
  CHECK(L4.coeff(2) == 1);
  CHECK(L4.coeff(1) == 2);
  CHECK(L4.coeff(0) == 0);
  CHECK(L4.original_constant() == 1);
  CHECK(L4.original_leading() == 2);
  try {
    LinearizedPoly::make(F3, {{1, 1}, {2, 0}});
    FAIL("expected LeadingZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LeadingZero);
  }
}

TEST_CASE("conventional form and reduced quotient") {
  const Field F2 = Field::prime(2);
  const auto L = LinearizedPoly::make(F2, {{1, 1}, {3, 1}});
  const Poly c = L.conventional_form();
  CHECK(c.degree() == 8);
  CHECK(c == P(F2, "X^8+X^2"));
  CHECK(L.reduced_quotient() == P(F2, "X^7+X"));
  CHECK(L.reduced_quotient().shifted(1) == c);

  for (std::uint64_t q : {2u, 3u, 4u}) {
    const Field F = field_of_order(q);
    Rng rng(q);
    for (const auto& Lq : all_with_interior(F, 3)) {
      CHECK(Lq.reduced_quotient().degree() == static_cast<long>(ipow(q, 3) - 1));
      auto ext = extend(F, 3, rng);
      const Poly conv = Lq.conventional_form().mapped(ext.embedding);
      for (int i = 0; i < 50; ++i) {
        const Elem x = rng.below(ext.field.order());
        const Elem y = rng.below(ext.field.order());
        CHECK(conv.eval(x) == Lq.apply(ext.embedding, x));
        CHECK(Lq.apply(ext.embedding, ext.field.add(x, y)) ==
              ext.field.add(Lq.apply(ext.embedding, x), Lq.apply(ext.embedding, y)));
      }
      break;
    }
  }
}

TEST_CASE("multiplicity decomposition examples") {
  const Field F2 = Field::prime(2);
  const auto md1 = multiplicity_decomposition(LinearizedPoly::make(F2, {{1, 1}, {3, 1}}));
  CHECK(md1.m == 1);
  CHECK(md1.h == P(F2, "X^3+1"));
  CHECK(md1.zero_root_multiplicity == 1);
  CHECK(md1.h_root_multiplicity == 2);
  const auto md2 = multiplicity_decomposition(LinearizedPoly::make(F2, {{2, 1}, {3, 1}}));
  CHECK(md2.m == 2);
  CHECK(md2.h == P(F2, "X+1"));
  CHECK(pow(md2.h, 4).shifted(3) == P(F2, "X^7+X^3"));
  try {
    multiplicity_decomposition(LinearizedPoly::make(F2, {{3, 1}}));
    FAIL("expected NoInteriorTerm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoInteriorTerm);
  }
}

TEST_CASE("exhaustive identities for q <= 5, n <= 5") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const Field F = field_of_order(q);
    for (unsigned n = 2; n <= 5; ++n) {
      const auto all = all_with_interior(F, n);
      CHECK(all.size() == ipow(q, n - 1) - 1);
      for (const auto& L : all) {
        const auto md = multiplicity_decomposition(L);
        const std::uint64_t qm = ipow(q, md.m);
        CHECK(std::gcd(qm - 1, qm) == 1);
        CHECK(md.zero_root_multiplicity == qm - 1);
        CHECK(md.h_root_multiplicity == qm);
        // a_m - X h' = h
        const Poly lhs = Poly::constant(F, L.coeff(md.m)) - md.h.derivative().shifted(1);
        CHECK(lhs == md.h);
        CHECK(is_squarefree(md.h));
        CHECK(md.h[0] == L.coeff(md.m));
        CHECK(md.h[0] != 0);
      }
    }
  }
}

TEST_CASE("specialization") {
  const Field F2 = Field::prime(2);
  const auto L = LinearizedPoly::make(F2, {{1, 1}, {3, 1}});
  const Embedding id = Embedding::find(F2, F2);
  CHECK(specialize(L, id, 1) == P(F2, "X^7+X+1"));
  CHECK(specialize(L, id, 0) == P(F2, "X^7+X"));
  CHECK_FALSE(is_squarefree(specialize(L, id, 0)));
  const Field F3 = Field::prime(3);
  CHECK_THROWS_AS(specialize(L, Embedding::find(F3, F3), 1), Error);
  // Every nonzero c in F_q gives a squarefree specialization (q in {2,3}, n = 3).
  unsigned failures = 0;
  for (std::uint64_t q : {2u, 3u}) {
    const Field F = Field::prime(q);
    const Embedding e = Embedding::find(F, F);
    for (const auto& Lq : all_with_interior(F, 3)) {
      for (Elem c = 1; c < q; ++c) {
        const Poly s = specialize(Lq, e, c);
        CHECK(s.degree() == static_cast<long>(ipow(q, 3) - 1));
        if (!is_squarefree(s)) ++failures;
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("parsing and printing") {
  const Field F4 = field_of_order(4);
  const auto L = parse_linearized(F4, "1:w;3:1");
  CHECK(L.coeff(1) == F4.generator());
  CHECK(parse_linearized(F4, L.spec_string()) == L);
  const auto L2 = parse_linearized_spec("q=2 L=1:1;3:1");
  CHECK(L2.to_string() == "X^8 + X^2");
}
