#include "linpoly/poly.hpp"

#include <algorithm>
#include <sstream>

#include "linpoly/error.hpp"

namespace linpoly {

namespace {

void check_same(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
}

}  // namespace

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (Elem c : c_) {
    if (!field_.contains(c)) fail(ErrorCode::BadInput, "coefficient outside the field");
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Field& field, Elem c) { return Poly(field, std::vector<Elem>{c}); }

Poly Poly::monomial(const Field& field, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(field, std::move(v));
}

Poly Poly::from_ints(const Field& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return Poly(field, std::move(v));
}

std::size_t Poly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Elem c) { return c != 0; }));
}

Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), c_[i]);
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_.inv(lead()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Elem> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = field_.scale(c_[i], i);
  return Poly(field_, std::move(d));
}

Poly Poly::scaled(Elem c) const {
  if (c == 0) return Poly(field_);
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], c);
  return Poly(field_, std::move(v));
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Elem> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(field_, std::move(v));
}

Poly Poly::taylor_shift(Elem a) const {
  std::vector<Elem> v = c_;
  const std::size_t n = v.size();
  if (a == 0 || n <= 1) return *this;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      v[j] = field_.add(v[j], field_.mul(a, v[j + 1]));
    }
  }
  return Poly(field_, std::move(v));
}

Poly Poly::mapped(const Embedding& emb) const {
  if (emb.source() != field_) fail(ErrorCode::FieldMismatch, "embedding source differs from coefficient field");
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = emb(c_[i]);
  return Poly(emb.target(), std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.neg(c_[i]);
  return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same(a, b);
  const auto& f = a.field();
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a[i], b[i]);
  return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same(a, b);
  const auto& f = a.field();
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a[i], b[i]);
  return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a, b);
  const auto& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  // Sparse-aware schoolbook product: cost is nnz(a) * nnz(b).
  std::vector<std::size_t> nb;
  for (std::size_t j = 0; j < b.c_.size(); ++j) {
    if (b.c_[j]) nb.push_back(j);
  }
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const Elem ai = a.c_[i];
    if (!ai) continue;
    for (std::size_t j : nb) v[i + j] = f.add(v[i + j], f.mul(ai, b.c_[j]));
  }
  return Poly(f, std::move(v));
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Elem c = c_[i];
    if (!c) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = field_.format(c);
    const bool compound = cs.find('+') != std::string::npos;
    if (i == 0) {
      os << cs;
      continue;
    }
    if (c != 1) os << (compound ? "(" + cs + ")" : cs) << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Elem> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const Elem inv_lead = f.inv(d.back());
  std::vector<Elem> q(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    if (!r[i]) continue;
    const Elem c = b.is_monic() ? r[i] : f.mul(r[i], inv_lead);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      if (d[j]) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, d[j]));
    }
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly pow(const Poly& base, std::uint64_t e) {
  Poly result = Poly::constant(base.field(), 1);
  Poly b = base;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus) { return (a * b) % modulus; }

Poly mod_pow(const Poly& base, std::uint64_t e, const Poly& modulus) {
  Poly result = Poly::constant(base.field(), 1) % modulus;
  Poly b = base % modulus;
  while (e) {
    if (e & 1) result = mul_mod(result, b, modulus);
    e >>= 1;
    if (e) b = mul_mod(b, b, modulus);
  }
  return result;
}

Poly mod_pow(const Poly& base, const BigInt& e, const Poly& modulus) {
  if (e < 0) fail(ErrorCode::BadInput, "negative exponent");
  Poly result = Poly::constant(base.field(), 1) % modulus;
  const Poly b = base % modulus;
  const auto bits = e == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    result = mul_mod(result, result, modulus);
    if (boost::multiprecision::bit_test(e, i)) result = mul_mod(result, b, modulus);
  }
  return result;
}

Poly gcd(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd ext_gcd(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  const auto& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const Elem inv = f.inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly pth_root(const Poly& a) {
  const auto& f = a.field();
  const std::uint64_t p = f.characteristic();
  std::vector<Elem> v;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Elem c = a.coeffs()[i];
    if (i % p) {
      if (c) fail(ErrorCode::BadInput, "polynomial is not a p-th power");
      continue;
    }
    // Inverse Frobenius on F_{p^k} is the (k-1)-fold Frobenius.
    v.push_back(f.frobenius(c, f.degree() - 1));
  }
  return Poly(f, std::move(v));
}

Poly Factorization::expand(const Field& field) const {
  Poly r = Poly::constant(field, unit);
  for (const auto& fac : factors) r = r * pow(fac.poly, fac.multiplicity);
  return r;
}

std::size_t Factorization::total_degree() const {
  std::size_t d = 0;
  for (const auto& fac : factors) d += static_cast<std::size_t>(fac.poly.degree()) * fac.multiplicity;
  return d;
}

namespace {

// Squarefree factorization of a monic polynomial, multiplicities scaled by `mult`.
void sqf_into(const Poly& f, unsigned mult, std::vector<Factor>& out) {
  if (f.degree() < 1) return;
  const Field& fld = f.field();
  const unsigned p = static_cast<unsigned>(std::min<std::uint64_t>(fld.characteristic(), 1u << 30));
  const Poly d = f.derivative();
  if (d.is_zero()) {
    sqf_into(pth_root(f), mult * p, out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) sqf_into(pth_root(c.monic()), mult * p, out);
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const Poly& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<Factor> raw;
  sqf_into(a.monic(), 1, raw);
  // Merge parts that ended up with the same multiplicity on different layers.
  std::sort(raw.begin(), raw.end(), [](const Factor& x, const Factor& y) { return x.multiplicity < y.multiplicity; });
  std::vector<Factor> out;
  for (auto& fac : raw) {
    if (!out.empty() && out.back().multiplicity == fac.multiplicity) {
      out.back().poly = out.back().poly * fac.poly;
    } else {
      out.push_back(std::move(fac));
    }
  }
  return out;
}

bool is_squarefree(const Poly& a) {
  if (a.is_zero()) return false;
  if (a.degree() < 1) return true;
  const Poly d = a.derivative();
  if (d.is_zero()) return false;
  return gcd(a, d).is_one();
}

namespace {

// X^(q^d) mod m, by d successive q-th powers.
Poly frobenius_power_of_x(const Poly& base, unsigned times, const Poly& m) {
  const std::uint64_t q = m.field().order();
  Poly h = base % m;
  for (unsigned i = 0; i < times; ++i) h = mod_pow(h, q, m);
  return h;
}

}  // namespace

bool is_irreducible(const Poly& a) {
  if (a.degree() < 1) fail(ErrorCode::BadInput, "irreducibility needs degree >= 1");
  const auto n = static_cast<unsigned>(a.degree());
  if (n == 1) return true;
  const Poly m = a.monic();
  const Poly x = Poly::x(m.field());
  // Rabin: X^(q^n) = X mod m, and gcd(X^(q^(n/r)) - X, m) = 1 for primes r | n.
  for (std::uint64_t r : prime_factors(n)) {
    Poly h = frobenius_power_of_x(x, n / static_cast<unsigned>(r), m);
    if (!gcd(m, h - x).is_one()) return false;
  }
  return frobenius_power_of_x(x, n, m) == x % m;
}

std::vector<DegreePart> distinct_degree_factorization(const Poly& a) {
  if (a.degree() < 1) fail(ErrorCode::BadInput, "distinct-degree factorization needs degree >= 1");
  if (!a.is_monic()) fail(ErrorCode::BadInput, "distinct-degree factorization needs a monic input");
  if (!is_squarefree(a)) fail(ErrorCode::NotSquarefree, a.to_string() + " is not squarefree");
  const Field& fld = a.field();
  const Poly x = Poly::x(fld);
  const std::uint64_t q = fld.order();
  std::vector<DegreePart> out;
  Poly rest = a;
  Poly h = x % rest;
  unsigned d = 1;
  while (rest.degree() >= 2 * static_cast<long>(d)) {
    h = mod_pow(h, q, rest);
    Poly g = gcd(rest, h - x);
    if (!g.is_one()) {
      out.push_back({g, d});
      rest = rest / g;
      h = h % rest;
    }
    ++d;
  }
  if (rest.degree() > 0) out.push_back({rest, static_cast<unsigned>(rest.degree())});
  return out;
}

std::vector<Poly> equal_degree_factorization(const Poly& a, unsigned d, Rng& rng) {
  if (d == 0 || a.degree() < 1 || a.degree() % d != 0) {
    fail(ErrorCode::BadInput, "degree is not a multiple of " + std::to_string(d));
  }
  const Field& fld = a.field();
  const std::uint64_t p = fld.characteristic();
  const std::uint64_t q = fld.order();
  std::vector<Poly> done;
  std::vector<Poly> work{a.monic()};
  const std::size_t cap = 64 * static_cast<std::size_t>(d) + 64 * static_cast<std::size_t>(a.degree() / d);
  std::size_t tries = 0;

  // Exponent (q^d - 1)/2 for the odd-characteristic splitting.
  BigInt half = (big_pow(BigInt(q), d) - 1) / 2;

  while (!work.empty()) {
    Poly f = std::move(work.back());
    work.pop_back();
    if (f.degree() == static_cast<long>(d)) {
      done.push_back(std::move(f));
      continue;
    }
    for (;;) {
      if (++tries > cap) fail(ErrorCode::Internal, "equal-degree splitting did not converge");
      const auto n = static_cast<std::size_t>(f.degree());
      std::vector<Elem> rc(n);
      for (auto& c : rc) c = rng.below(q);
      Poly r(fld, rc);
      if (r.degree() < 1) continue;
      Poly s(fld);
      if (p == 2) {
        // T(r) = r + r^2 + ... + r^(2^(kd-1)) mod f
        const unsigned levels = fld.degree() * d;
        Poly term = r % f;
        s = term;
        for (unsigned i = 1; i < levels; ++i) {
          term = mul_mod(term, term, f);
          s = s + term;
        }
      } else {
        s = mod_pow(r, half, f) - Poly::constant(fld, 1);
      }
      if (s.is_zero()) continue;
      Poly g = gcd(f, s);
      if (g.degree() > 0 && g.degree() < f.degree()) {
        work.push_back(f / g);
        work.push_back(std::move(g));
        break;
      }
    }
  }
  std::sort(done.begin(), done.end());
  return done;
}

Factorization factor(const Poly& a, Rng& rng) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor zero");
  Factorization out;
  out.unit = a.lead();
  for (const auto& part : squarefree_decomposition(a)) {
    for (const auto& dp : distinct_degree_factorization(part.poly)) {
      for (auto& irr : equal_degree_factorization(dp.poly, dp.degree, rng)) {
        out.factors.push_back({std::move(irr), part.multiplicity});
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& x, const Factor& y) {
    if (x.poly == y.poly) return x.multiplicity < y.multiplicity;
    return x.poly < y.poly;
  });
  return out;
}

std::vector<Elem> roots(const Poly& a, Rng& rng) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of zero");
  std::vector<Elem> out;
  if (a.degree() < 1) return out;
  const Field& fld = a.field();
  const Poly x = Poly::x(fld);
  // Product of the distinct linear factors: gcd(a, X^q - X).
  Poly lin = gcd(a, mod_pow(x, fld.order(), a.monic()) - x);
  if (lin.degree() < 1) return out;
  for (const auto& f : equal_degree_factorization(lin, 1, rng)) out.push_back(fld.neg(f[0]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace linpoly
