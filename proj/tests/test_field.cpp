#include <doctest.h>

#include "linpoly/error.hpp"
#include "linpoly/field.hpp"
#include "linpoly/poly.hpp"

using namespace linpoly;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

Field f4() {
  const Elem mod[] = {1, 1, 1};
  return Field::extension(Field::prime(2), 2, mod);
}

}  // namespace

TEST_CASE("prime fields") {
  CHECK(Field::prime(2).order() == 2);
  CHECK(Field::prime(3).order() == 3);
  CHECK(Field::prime(3).degree() == 1);
  CHECK(code_of([] { Field::prime(4); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { Field::prime(1); }) == ErrorCode::NotPrime);
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
}

TEST_CASE("extensions") {
  const Field F = f4();
  CHECK(F.order() == 4);
  const Elem bad[] = {1, 0, 1};
  CHECK(code_of([&] { Field::extension(Field::prime(2), 2, bad); }) == ErrorCode::NotIrreducible);

  Rng rng(7);
  const Field F9 = Field::extension(Field::prime(3), 2, rng);
  CHECK(F9.order() == 9);
  const auto& m = F9.modulus();
  for (std::int64_t x = 0; x < 3; ++x) {
    const std::int64_t v = (static_cast<std::int64_t>(m[0]) + static_cast<std::int64_t>(m[1]) * x + x * x) % 3;
    CHECK(v != 0);
  }

  Rng a(99), b(99);
  CHECK(Field::extension(Field::prime(5), 3, a).modulus() == Field::extension(Field::prime(5), 3, b).modulus());
  CHECK(field_of_order(16, 3).modulus() == field_of_order(16, 3).modulus());
}

TEST_CASE("arithmetic examples") {
  const Field F = f4();
  const Elem w = F.generator();
  CHECK(F.mul(w, F.add(w, 1)) == 1);
  const Field F3 = Field::prime(3);
  CHECK(F3.inv(2) == 2);
  CHECK(Field::prime(5).pow(2, 4) == 1);
  CHECK(code_of([&] { F3.inv(0); }) == ErrorCode::DivisionByZero);
  CHECK(F.format(F.add(w, 1)) == "1+w");
}

TEST_CASE("frobenius") {
  const Field F = f4();
  const Elem w = F.generator();
  CHECK(F.frobenius(w, 1) == F.add(w, 1));
  CHECK(F.frobenius(w, 2) == w);
  Rng rng(1);
  const Field F9 = Field::extension(Field::prime(3), 2, rng);
  for (int i = 0; i < 20; ++i) {
    const Elem x = rng.below(9);
    CHECK(F9.frobenius(F9.frobenius(x, 1), 1) == x);
  }
}

TEST_CASE("element orders") {
  CHECK(Field::prime(7).element_order(1) == 1);
  CHECK(Field::prime(5).element_order(2) == 4);
  Rng rng(3);
  const Field F8 = Field::extension(Field::prime(2), 3, rng);
  for (Elem x = 2; x < 8; ++x) CHECK(F8.element_order(x) == 7);
  CHECK(code_of([&] { F8.element_order(0); }) == ErrorCode::ZeroElement);
  for (std::uint64_t q : {256u, 243u, 343u, 512u, 125u}) {
    const Field F = field_of_order(q);
    for (Elem x = 1; x < q; ++x) CHECK((q - 1) % F.element_order(x) == 0);
  }
}

TEST_CASE("enumeration") {
  CHECK(Field::prime(2).elements() == std::vector<Elem>{0, 1});
  const auto e4 = f4().elements();
  CHECK(e4.size() == 4);
  CHECK(e4.front() == 0);
  CHECK(field_of_order(27).elements().size() == 27);
  CHECK(code_of([] { field_of_order(std::uint64_t{1} << 21).elements(); }) == ErrorCode::TooLarge);
}

TEST_CASE("field axioms on exhaustive pairs") {
  for (std::uint64_t q : {4u, 8u, 9u, 25u, 27u, 49u, 81u}) {
    const Field F = field_of_order(q);
    CAPTURE(q);
    const auto E = F.elements();
    bool ok = true;
    for (Elem x : E) {
      if (x && F.mul(x, F.inv(x)) != 1) ok = false;
      if (F.add(x, F.neg(x)) != 0) ok = false;
      for (Elem y : E) {
        if (F.mul(x, y) != F.mul(y, x) || F.add(x, y) != F.add(y, x)) ok = false;
        if (F.frobenius(F.add(x, y), 1) != F.add(F.frobenius(x, 1), F.frobenius(y, 1))) ok = false;
        if (F.frobenius(F.mul(x, y), 1) != F.mul(F.frobenius(x, 1), F.frobenius(y, 1))) ok = false;
        if (q > 27) continue;
        for (Elem z : E) {
          if (F.mul(F.mul(x, y), z) != F.mul(x, F.mul(y, z))) ok = false;
          if (F.add(F.add(x, y), z) != F.add(x, F.add(y, z))) ok = false;
          if (F.mul(x, F.add(y, z)) != F.add(F.mul(x, y), F.mul(x, z))) ok = false;
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("large extensions use coordinate arithmetic") {
  const Field F = field_of_order(std::uint64_t{1} << 20);
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Elem x = 1 + rng.below(F.order() - 1);
    CHECK(F.mul(x, F.inv(x)) == 1);
    CHECK(F.pow(x, F.order() - 1) == 1);
  }
}

TEST_CASE("embeddings") {
  const Field F4 = f4();
  Rng rng(11);
  const auto ext = extend(F4, 3, rng);
  CHECK(ext.field.order() == 64);
  const Embedding& e = ext.embedding;
  for (Elem x : F4.elements()) {
    for (Elem y : F4.elements()) {
      CHECK(e(F4.mul(x, y)) == ext.field.mul(e(x), e(y)));
      CHECK(e(F4.add(x, y)) == ext.field.add(e(x), e(y)));
    }
  }
  // The generator goes to the smallest root of its modulus.
  const Poly m(ext.field, {e(1), e(1), e(1)});
  Rng r2(0);
  CHECK(roots(m, r2).front() == e.generator_image());
}
