#include "linpoly/field.hpp"

#include <algorithm>
#include <sstream>

#include "linpoly/error.hpp"
#include "linpoly/poly.hpp"

namespace linpoly {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::LeadingZero: return "LeadingZero";
    case ErrorCode::NoInteriorTerm: return "NoInteriorTerm";
    case ErrorCode::EmbeddingUnavailable: return "EmbeddingUnavailable";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::NotCoprimeModZ: return "NotCoprimeModZ";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::NoUsableSamples: return "NoUsableSamples";
    case ErrorCode::Inseparable: return "Inseparable";
    case ErrorCode::NoCoprimePair: return "NoCoprimePair";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Fields with q above this use coordinate arithmetic instead of log tables.
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto ps = prime_factors(n);
  if (ps.size() != 1) return std::nullopt;
  unsigned k = 0;
  while (n > 1) {
    n /= ps[0];
    ++k;
  }
  return std::make_pair(ps[0], k);
}

struct Field::Data {
  std::uint64_t p = 0;
  unsigned k = 1;
  std::uint64_t q = 0;
  std::vector<Elem> modulus;       // monic, length k+1
  std::vector<std::uint64_t> pw;   // p^i, i <= k
  std::vector<std::uint64_t> group_primes;  // prime factors of q-1
  // Log tables relative to a primitive element (extension fields, q small).
  std::vector<std::uint32_t> exp;  // length 2(q-1)
  std::vector<std::uint32_t> log;  // length q, log[0] unused

  std::uint64_t digit(Elem x, unsigned i) const { return (x / pw[i]) % p; }

  Elem add(Elem a, Elem b) const {
    if (k == 1) {
      Elem s = a + b;
      return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    Elem r = 0;
    for (unsigned i = 0; i < k; ++i) {
      std::uint64_t d = a % p + b % p;
      if (d >= p) d -= p;
      r += d * pw[i];
      a /= p;
      b /= p;
    }
    return r;
  }

  Elem neg(Elem a) const {
    if (k == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    Elem r = 0;
    for (unsigned i = 0; i < k; ++i) {
      std::uint64_t d = a % p;
      r += (d == 0 ? 0 : p - d) * pw[i];
      a /= p;
    }
    return r;
  }

  Elem mul_coords(Elem a, Elem b) const {
    std::vector<std::uint64_t> x(k), y(k), prod(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i) {
      x[i] = a % p;
      y[i] = b % p;
      a /= p;
      b /= p;
    }
    for (unsigned i = 0; i < k; ++i) {
      if (!x[i]) continue;
      for (unsigned j = 0; j < k; ++j) {
        prod[i + j] = (prod[i + j] + mulmod64(x[i], y[j], p)) % p;
      }
    }
    for (unsigned i = 2 * k - 1; i-- > k;) {
      std::uint64_t c = prod[i];
      if (!c) continue;
      // w^k = -(m_0 + ... + m_{k-1} w^{k-1})
      for (unsigned j = 0; j < k; ++j) {
        std::uint64_t t = mulmod64(c, modulus[j], p);
        prod[i - k + j] = (prod[i - k + j] + p - t) % p;
      }
      prod[i] = 0;
    }
    Elem r = 0;
    for (unsigned i = 0; i < k; ++i) r += prod[i] * pw[i];
    return r;
  }

  Elem mul(Elem a, Elem b) const {
    if (k == 1) return mulmod64(a, b, p);
    if (a == 0 || b == 0) return 0;
    if (!log.empty()) {
      return exp[log[a] + log[b]];
    }
    return mul_coords(a, b);
  }

  Elem pow(Elem a, std::uint64_t e) const {
    if (k == 1) return powmod64(a, e, p);
    if (!log.empty()) {
      if (a == 0) return e == 0 ? 1 : 0;
      std::uint64_t l = static_cast<std::uint64_t>(static_cast<u128>(log[a]) * (e % (q - 1)) % (q - 1));
      return exp[l];
    }
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t order_of(Elem x) const {
    std::uint64_t e = q - 1;
    for (std::uint64_t r : group_primes) {
      while (e % r == 0 && pow(x, e / r) == 1) e /= r;
    }
    return e;
  }

  void build_tables() {
    // Find a primitive element by increasing code, using coordinate arithmetic.
    Elem g = 0;
    for (Elem cand = 2; cand < q; ++cand) {
      bool primitive = true;
      for (std::uint64_t r : group_primes) {
        Elem t = 1, base = cand;
        std::uint64_t e = (q - 1) / r;
        while (e) {
          if (e & 1) t = mul_coords(t, base);
          base = mul_coords(base, base);
          e >>= 1;
        }
        if (t == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }
    exp.assign(2 * (q - 1), 0);
    log.assign(q, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      exp[i] = static_cast<std::uint32_t>(cur);
      exp[i + q - 1] = static_cast<std::uint32_t>(cur);
      log[cur] = static_cast<std::uint32_t>(i);
      cur = mul_coords(cur, g);
    }
  }
};

namespace {

std::shared_ptr<Field::Data> make_data(std::uint64_t p, unsigned k, std::vector<Elem> modulus) {
  auto d = std::make_shared<Field::Data>();
  d->p = p;
  d->k = k;
  d->modulus = std::move(modulus);
  d->pw.resize(k + 1);
  d->pw[0] = 1;
  for (unsigned i = 1; i <= k; ++i) {
    if (d->pw[i - 1] > kMaxOrder / p) fail(ErrorCode::TooLarge, "field order exceeds 2^62");
    d->pw[i] = d->pw[i - 1] * p;
  }
  d->q = d->pw[k];
  d->group_primes = prime_factors(d->q - 1);
  if (k > 1 && d->q <= kTableLimit) d->build_tables();
  return d;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) fail(ErrorCode::TooLarge, "characteristic must be below 2^32");
  return Field(make_data(p, 1, {0, 1}));
}

Field Field::extension(const Field& base, unsigned k, std::span<const Elem> modulus) {
  if (!base.is_prime_field()) fail(ErrorCode::BadInput, "extensions are built over a prime field");
  if (k == 0) fail(ErrorCode::BadInput, "extension degree must be positive");
  const auto p = base.characteristic();
  if (modulus.size() != k + 1 || modulus.back() != 1) {
    fail(ErrorCode::BadInput, "modulus must be monic of degree " + std::to_string(k));
  }
  for (Elem c : modulus) {
    if (c >= p) fail(ErrorCode::BadInput, "modulus coefficient out of range");
  }
  if (k == 1) {
    // A linear modulus gives back the prime field itself.
    return base;
  }
  Poly m(base, std::vector<Elem>(modulus.begin(), modulus.end()));
  if (!is_irreducible(m)) fail(ErrorCode::NotIrreducible, m.to_string("w") + " is reducible");
  return Field(make_data(p, k, std::vector<Elem>(modulus.begin(), modulus.end())));
}

Field Field::extension(const Field& base, unsigned k, Rng& rng) {
  if (!base.is_prime_field()) fail(ErrorCode::BadInput, "extensions are built over a prime field");
  if (k == 0) fail(ErrorCode::BadInput, "extension degree must be positive");
  if (k == 1) return base;
  const auto p = base.characteristic();
  {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (q > kMaxOrder / p) fail(ErrorCode::TooLarge, "field order exceeds 2^62");
      q *= p;
    }
  }
  for (;;) {
    std::vector<Elem> m(k + 1);
    for (unsigned i = 0; i < k; ++i) m[i] = rng.below(p);
    m[k] = 1;
    if (m[0] == 0) continue;
    if (is_irreducible(Poly(base, m))) return Field(make_data(p, k, std::move(m)));
  }
}

std::uint64_t Field::characteristic() const { return data_->p; }
unsigned Field::degree() const { return data_->k; }
std::uint64_t Field::order() const { return data_->q; }
const std::vector<Elem>& Field::modulus() const { return data_->modulus; }

Field Field::prime_field() const {
  if (is_prime_field()) return *this;
  return Field::prime(data_->p);
}

Elem Field::generator() const { return data_->k == 1 ? 0 : data_->p; }

Elem Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem Field::add(Elem a, Elem b) const { return data_->add(a, b); }
Elem Field::sub(Elem a, Elem b) const { return data_->add(a, data_->neg(b)); }
Elem Field::neg(Elem a) const { return data_->neg(a); }
Elem Field::mul(Elem a, Elem b) const { return data_->mul(a, b); }

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (!data_->log.empty()) {
    auto l = data_->log[a];
    return data_->exp[(data_->q - 1 - l) % (data_->q - 1)];
  }
  return data_->pow(a, data_->q - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }
Elem Field::pow(Elem a, std::uint64_t e) const { return data_->pow(a, e); }

Elem Field::pow(Elem a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), BigInt(-e));
  if (a == 0) return e == 0 ? 1 : 0;
  // Reduce the exponent modulo the group order.
  BigInt r = e % BigInt(data_->q - 1);
  return data_->pow(a, r.convert_to<std::uint64_t>());
}

Elem Field::frobenius(Elem x, unsigned levels) const {
  levels %= data_->k;
  for (unsigned i = 0; i < levels; ++i) x = data_->pow(x, data_->p);
  return x;
}

std::uint64_t Field::element_order(Elem x) const {
  if (x == 0) fail(ErrorCode::ZeroElement, "zero has no multiplicative order");
  return data_->order_of(x);
}

Elem Field::scale(Elem a, std::uint64_t n) const { return mul(a, from_int(static_cast<std::int64_t>(n % data_->p))); }

std::vector<Elem> Field::coordinates(Elem x) const {
  std::vector<Elem> out(data_->k);
  for (unsigned i = 0; i < data_->k; ++i) out[i] = data_->digit(x, i);
  return out;
}

Elem Field::from_coordinates(std::span<const Elem> coords) const {
  if (coords.size() > data_->k) fail(ErrorCode::BadInput, "too many coordinates");
  Elem r = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) r += (coords[i] % data_->p) * data_->pw[i];
  return r;
}

std::vector<Elem> Field::elements() const {
  if (data_->q > kEnumerationGuard) {
    fail(ErrorCode::TooLarge, "cannot enumerate a field of order " + std::to_string(data_->q));
  }
  std::vector<Elem> out(data_->q);
  for (Elem i = 0; i < data_->q; ++i) out[i] = i;
  return out;
}

std::string Field::format(Elem x) const {
  if (data_->k == 1) return std::to_string(x);
  if (x == 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < data_->k; ++i) {
    auto c = data_->digit(x, i);
    if (!c) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'w';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << data_->q;
  if (data_->k > 1) {
    os << " = F_" << data_->p << "[w]/(" << Poly(prime_field(), data_->modulus).to_string("w") << ")";
  }
  return os.str();
}

std::string Field::spec_string() const {
  if (data_->k == 1) return std::to_string(data_->p);
  std::ostringstream os;
  os << data_->p << '^' << data_->k << '/';
  for (std::size_t i = 0; i < data_->modulus.size(); ++i) {
    if (i) os << ',';
    os << data_->modulus[i];
  }
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus;
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_)) fail(ErrorCode::BadInput, "element code out of range");
}

const Field& FieldElement::same(const FieldElement& o) const {
  if (field_ != o.field_) fail(ErrorCode::FieldMismatch, "elements of different fields");
  return field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {same(o), field_.add(value_, o.value_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {same(o), field_.sub(value_, o.value_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {same(o), field_.mul(value_, o.value_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {same(o), field_.div(value_, o.value_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }
FieldElement FieldElement::frobenius(unsigned levels) const { return {field_, field_.frobenius(value_, levels)}; }
std::uint64_t FieldElement::order() const { return field_.element_order(value_); }

Embedding Embedding::find(const Field& from, const Field& to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0) {
    fail(ErrorCode::EmbeddingUnavailable, from.describe() + " does not embed in " + to.describe());
  }
  if (from.is_prime_field()) {
    return Embedding(from, to, 0, {1});
  }
  if (from == to) {
    std::vector<Elem> powers(from.degree());
    powers[0] = 1;
    for (unsigned i = 1; i < from.degree(); ++i) powers[i] = to.mul(powers[i - 1], from.generator());
    return Embedding(from, to, from.generator(), std::move(powers));
  }
  // The modulus has coefficients in F_p, whose codes coincide in every field
  // of the same characteristic.
  Poly m(to, from.modulus());
  Rng rng(0x5eed);
  auto rs = roots(m, rng);
  if (rs.empty()) fail(ErrorCode::EmbeddingUnavailable, "modulus has no root in " + to.describe());
  Elem image = rs.front();
  std::vector<Elem> powers(from.degree());
  powers[0] = 1;
  for (unsigned i = 1; i < from.degree(); ++i) powers[i] = to.mul(powers[i - 1], image);
  return Embedding(from, to, image, std::move(powers));
}

Elem Embedding::operator()(Elem x) const {
  if (from_.is_prime_field()) return x;
  Elem r = 0;
  auto coords = from_.coordinates(x);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i]) r = to_.add(r, to_.scale(powers_[i], coords[i]));
  }
  return r;
}

ExtensionPair extend(const Field& base, unsigned k, Rng& rng) {
  if (k == 0) fail(ErrorCode::BadInput, "extension degree must be positive");
  if (k == 1) return {base, Embedding::find(base, base)};
  Field big = Field::extension(base.prime_field(), base.degree() * k, rng);
  return {big, Embedding::find(base, big)};
}

Field field_of_order(std::uint64_t q, std::uint64_t seed) {
  const auto pp = prime_power(q);
  if (!pp) fail(ErrorCode::BadInput, std::to_string(q) + " is not a prime power");
  const Field base = Field::prime(pp->first);
  if (pp->second == 1) return base;
  Rng rng = Rng::stream(seed, "modulus-search");
  return Field::extension(base, pp->second, rng);
}

}  // namespace linpoly
