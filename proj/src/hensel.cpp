#include <algorithm>
#include <numeric>

#include "linpoly/error.hpp"
#include "linpoly/series.hpp"

namespace linpoly {

BezoutPair bezout_rs(unsigned a, unsigned b) {
  if (a == 0 || b == 0) fail(ErrorCode::BadInput, "multiplicities must be positive");
  if (std::gcd(a, b) != 1) {
    fail(ErrorCode::NotCoprime, "gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  }
  // Extended Euclid for s = b^{-1} mod a.
  long long old_r = b, r = a, old_s = 1, s = 0;
  while (r != 0) {
    const long long quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
  }
  long long sv = old_s % static_cast<long long>(a);
  if (sv <= 0) sv += a;
  // Smallest s in that residue class with r = (s b - 1)/a >= 1.
  while ((sv * static_cast<long long>(b) - 1) / static_cast<long long>(a) < 1) sv += a;
  const long long rv = (sv * static_cast<long long>(b) - 1) / static_cast<long long>(a);
  BezoutPair out{static_cast<unsigned>(rv), static_cast<unsigned>(sv)};
  if (static_cast<long long>(out.s) * b - static_cast<long long>(out.r) * a != 1) {
    fail(ErrorCode::Internal, "s*b - r*a != 1");
  }
  return out;
}

ShiftedRoot shift_roots(const Poly& f, Elem alpha) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has no root multiplicity");
  if (f.eval(alpha) != 0) {
    fail(ErrorCode::NotARoot, f.field().format(alpha) + " is not a root of " + f.to_string());
  }
  const Poly shifted = f.taylor_shift(alpha);
  std::size_t a = 0;
  while (shifted[a] == 0) ++a;
  std::vector<Elem> u(shifted.coeffs().begin() + static_cast<long>(a), shifted.coeffs().end());
  return {static_cast<unsigned>(a), Poly(f.field(), std::move(u))};
}

HenselProblem HenselProblem::make(const Poly& f, Elem alpha, const Poly& g, Elem beta) {
  if (f.field() != g.field()) fail(ErrorCode::FieldMismatch, "f and g must share the field E");
  if (f.degree() < 1 || g.degree() < 1) fail(ErrorCode::BadInput, "f and g must be non-constant");
  auto fs = shift_roots(f, alpha);
  auto gs = shift_roots(g, beta);
  HenselProblem prob{f.field(), f, g, alpha, beta, fs.multiplicity, gs.multiplicity,
                     std::move(fs.cofactor), std::move(gs.cofactor), {}};
  prob.rs = bezout_rs(prob.a, prob.b);
  // f(X + alpha) = X^a u(X) and g(y + beta) = y^b v(y)
  if (!(prob.u.shifted(prob.a) == f.taylor_shift(alpha)) || !(prob.v.shifted(prob.b) == g.taylor_shift(beta))) {
    fail(ErrorCode::Internal, "root shift identity failed");
  }
  return prob;
}

HenselProblem choose_problem(const Poly& f, const Poly& g, Rng& rng) {
  if (f.field() != g.field()) fail(ErrorCode::FieldMismatch, "f and g must share a field");
  if (f.degree() < 1 || g.degree() < 1) fail(ErrorCode::BadInput, "f and g must be non-constant");
  const Field& base = f.field();
  unsigned split = 1;
  for (const auto& fac : factor(f * g, rng).factors) {
    split = std::lcm(split, static_cast<unsigned>(fac.poly.degree()));
  }
  auto ext = extend(base, split, rng);
  const Poly fe = f.mapped(ext.embedding);
  const Poly ge = g.mapped(ext.embedding);

  struct Root {
    unsigned mult;
    Elem value;
  };
  auto rooted = [&](const Poly& p) {
    std::vector<Root> out;
    for (Elem r : roots(p, rng)) out.push_back({shift_roots(p, r).multiplicity, r});
    std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
      return x.mult != y.mult ? x.mult < y.mult : x.value < y.value;
    });
    return out;
  };
  const auto fr = rooted(fe);
  const auto gr = rooted(ge);
  for (const auto& x : fr) {
    for (const auto& y : gr) {
      if (std::gcd(x.mult, y.mult) == 1) return HenselProblem::make(fe, x.value, ge, y.value);
    }
  }
  fail(ErrorCode::NoCoprimePair, "no roots of f and g with coprime multiplicities");
}

SeriesPoly build_H(const HenselProblem& prob, std::size_t precision) {
  const Field& E = prob.field;
  if (precision < 2) fail(ErrorCode::PrecisionTooLow, "H needs precision at least 2");
  const std::size_t deg = static_cast<std::size_t>(prob.f.degree());
  SeriesPoly H(E, precision, deg);
  // X^a u(X z^r): coefficient of X^{a+j} is u_j z^{r j}.
  for (std::size_t j = 0; j < prob.u.coeffs().size(); ++j) {
    H.coeff(prob.a + j) = TruncatedSeries::monomial(E, precision, prob.u[j], prob.rs.r * j);
  }
  // - z v(z^s)
  const TruncatedSeries v = TruncatedSeries::from_poly(prob.v, precision);
  const TruncatedSeries tail = -(v.compose_with_z_power(prob.rs.s).shifted(1));
  H.coeff(0) = H.coeff(0) + tail;
  if (H.coeff(0).valuation() != std::optional<std::size_t>(1)) {
    fail(ErrorCode::Internal, "constant term of H must have z-valuation 1");
  }
  return H;
}

namespace {

SeriesPoly lift_constant(const Poly& p, std::size_t precision, std::size_t degree) {
  return SeriesPoly::from_poly(p, precision).with_degree(degree);
}

SeriesPoly trimmed(const SeriesPoly& p) {
  std::size_t d = p.degree();
  while (d > 0 && p.coeff(d).is_zero()) --d;
  return p.with_degree(d);
}

std::size_t residual_valuation(const SeriesPoly& H, const SeriesPoly& A, const SeriesPoly& U) {
  const std::size_t N = H.precision();
  const SeriesPoly res = H - A.truncated(N) * U.truncated(N);
  return res.valuation().value_or(N);
}

}  // namespace

HenselResult hensel_lift(const SeriesPoly& H, unsigned a, std::size_t precision) {
  const Field& E = H.field();
  const std::size_t N = std::min(precision, H.precision());
  if (N < 1) fail(ErrorCode::PrecisionTooLow, "precision must be positive");
  if (a == 0 || a > H.degree()) fail(ErrorCode::BadInput, "factor degree out of range");
  const SeriesPoly target = H.truncated(N);
  const std::size_t deg_u = H.degree() - a;

  // Mod z: H = X^a * U0 with U0(0) != 0.
  const Poly hbar = target.mod_z();
  for (unsigned i = 0; i < a; ++i) {
    if (hbar[i] != 0) fail(ErrorCode::NotCoprimeModZ, "H mod z is not divisible by X^a");
  }
  std::vector<Elem> u0c(hbar.coeffs().begin() + std::min<std::size_t>(a, hbar.coeffs().size()), hbar.coeffs().end());
  const Poly u0(E, std::move(u0c));
  if (u0.is_zero() || u0[0] == 0) fail(ErrorCode::NotCoprimeModZ, "X^a and H/X^a share the root 0 mod z");
  const Poly a0 = Poly::monomial(E, 1, a);
  const auto eg = ext_gcd(u0, a0);  // s*U0 + t*A0 = 1
  if (!eg.g.is_one()) fail(ErrorCode::NotCoprimeModZ, "mod-z factors are not coprime");

  HenselResult out{lift_constant(a0, N, a), lift_constant(u0, N, deg_u), {1}, {}};
  SeriesPoly s = SeriesPoly::from_poly(eg.s.is_zero() ? Poly::constant(E, 0) : eg.s, N);
  SeriesPoly t = SeriesPoly::from_poly(eg.t.is_zero() ? Poly::constant(E, 0) : eg.t, N);
  out.residual_valuations.push_back(residual_valuation(target, out.A, out.U));

  std::size_t cur = 1;
  const SeriesPoly one = SeriesPoly::from_poly(Poly::constant(E, 1), N);
  while (cur < N) {
    const std::size_t next = std::min(2 * cur, N);
    const SeriesPoly Hn = target.truncated(next);
    SeriesPoly A = out.A.truncated(next);
    SeriesPoly U = out.U.truncated(next);
    s = s.truncated(next);
    t = t.truncated(next);

    // e = H - A U; s e = q A + r; A' = A + r; U' = U + t e + q U.
    const SeriesPoly e = Hn - U * A;
    auto [q, r] = divmod_monic(s * e, A);
    SeriesPoly A2 = (A + r).with_degree(a);
    SeriesPoly U2 = (U + t * e + q * U).with_degree(deg_u);
    // Refresh the Bezout pair: b = s U' + t A' - 1; s b = c A' + d.
    const SeriesPoly bb = s * U2 + t * A2 - one.truncated(next);
    auto [c, d] = divmod_monic(s * bb, A2);
    s = trimmed(s - d);
    t = trimmed(t - t * bb - c * U2);

    out.A = std::move(A2);
    out.U = std::move(U2);
    cur = next;
    out.precisions.push_back(cur);
    out.residual_valuations.push_back(residual_valuation(target, out.A.truncated(N), out.U.truncated(N)));
  }
  out.A = out.A.truncated(N);
  out.U = out.U.truncated(N);
  if (!out.A.is_monic()) fail(ErrorCode::Internal, "lifted factor lost monicity");
  return out;
}

EisensteinReport eisenstein_check(const SeriesPoly& A) {
  EisensteinReport rep;
  if (!A.is_monic()) fail(ErrorCode::BadInput, "Eisenstein check needs an X-monic polynomial");
  for (std::size_t i = 0; i < A.degree(); ++i) rep.valuations.push_back(A.coeff(i).valuation());
  if (A.degree() == 0) {
    rep.reason = "degree 0";
    return rep;
  }
  const auto v0 = rep.valuations[0];
  if (!v0) fail(ErrorCode::PrecisionTooLow, "constant term vanishes to precision " + std::to_string(A.precision()));
  for (std::size_t i = 1; i < A.degree(); ++i) {
    if (rep.valuations[i] && *rep.valuations[i] == 0) {
      rep.reason = "coefficient of X^" + std::to_string(i) + " is a unit";
      return rep;
    }
  }
  if (*v0 != 1) {
    rep.reason = "constant term has valuation " + std::to_string(*v0);
    return rep;
  }
  rep.eisenstein = true;
  rep.reason = "ok";
  return rep;
}

}  // namespace linpoly
