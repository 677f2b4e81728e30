#include "linpoly/linearized.hpp"

#include <sstream>

#include "linpoly/error.hpp"

namespace linpoly {

namespace {

std::uint64_t checked_qpow(std::uint64_t q, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > kDenseDegreeGuard / q) {
      fail(ErrorCode::TooLarge, "q^" + std::to_string(e) + " exceeds the dense degree guard");
    }
    r *= q;
  }
  return r;
}

}  // namespace

LinearizedPoly LinearizedPoly::make(const Field& field, const std::map<unsigned, Elem>& coeffs) {
  unsigned n = 0;
  bool any = false;
  for (const auto& [i, c] : coeffs) {
    if (!field.contains(c)) fail(ErrorCode::BadInput, "coefficient outside the field");
    if (c != 0) {
      n = std::max(n, i);
      any = true;
    }
  }
  if (!any) fail(ErrorCode::LeadingZero, "L has no nonzero coefficient");
  if (!coeffs.empty() && coeffs.rbegin()->first > n) {
    fail(ErrorCode::LeadingZero, "declared top coefficient a_" + std::to_string(coeffs.rbegin()->first) + " is zero");
  }
  if (n == 0) fail(ErrorCode::LeadingZero, "q-degree must be at least 1");
  const Elem an = coeffs.at(n);
  const Elem inv = field.inv(an);
  std::vector<Elem> a(n + 1, 0);
  for (const auto& [i, c] : coeffs) a[i] = field.mul(c, inv);
  const auto it = coeffs.find(0);
  const Elem a0 = it == coeffs.end() ? 0 : it->second;
  a[0] = 0;
  return LinearizedPoly(field, std::move(a), a0, an);
}

LinearizedPoly LinearizedPoly::from_interior(const Field& field, const std::vector<Elem>& interior) {
  std::vector<Elem> a;
  a.reserve(interior.size() + 2);
  a.push_back(0);
  a.insert(a.end(), interior.begin(), interior.end());
  a.push_back(1);
  return LinearizedPoly(field, std::move(a), 0, 1);
}

std::optional<unsigned> LinearizedPoly::mlow() const {
  for (unsigned i = 1; i < qdegree(); ++i) {
    if (a_[i]) return i;
  }
  return std::nullopt;
}

std::uint64_t LinearizedPoly::degree() const { return checked_qpow(field_.order(), qdegree()); }

Poly LinearizedPoly::conventional_form() const {
  const std::uint64_t q = field_.order();
  std::vector<Elem> c(degree() + 1, 0);
  std::uint64_t e = 1;
  for (unsigned i = 0; i <= qdegree(); ++i, e *= q) c[e] = a_[i];
  return Poly(field_, std::move(c));
}

Poly LinearizedPoly::reduced_quotient() const {
  const std::uint64_t q = field_.order();
  std::vector<Elem> c(degree(), 0);
  std::uint64_t e = 1;
  for (unsigned i = 0; i <= qdegree(); ++i, e *= q) c[e - 1] = a_[i];
  return Poly(field_, std::move(c));
}

Elem LinearizedPoly::apply(const Embedding& emb, Elem x) const {
  if (emb.source() != field_) fail(ErrorCode::FieldMismatch, "embedding source differs from F_q");
  const Field& big = emb.target();
  const unsigned k = field_.degree();
  Elem acc = 0;
  Elem xp = x;  // x^{q^i}
  for (unsigned i = 0; i <= qdegree(); ++i) {
    if (a_[i]) acc = big.add(acc, big.mul(emb(a_[i]), xp));
    xp = big.frobenius(xp, k);
  }
  return acc;
}

std::string LinearizedPoly::to_string() const {
  std::ostringstream os;
  const std::uint64_t q = field_.order();
  bool first = true;
  for (unsigned i = qdegree() + 1; i-- > 0;) {
    if (!a_[i]) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = field_.format(a_[i]);
    if (a_[i] != 1) os << (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) << '*';
    os << "X";
    std::uint64_t e = 1;
    bool fits = true;
    for (unsigned j = 0; j < i && fits; ++j) {
      if (e > (std::uint64_t{1} << 40) / q) fits = false;
      e *= q;
    }
    if (!fits) {
      os << "^{q^" << i << '}';
    } else if (e > 1) {
      os << '^' << e;
    }
  }
  return os.str();
}

std::string LinearizedPoly::spec_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i <= qdegree(); ++i) {
    if (!a_[i]) continue;
    if (!first) os << ';';
    first = false;
    os << i << ':' << field_.format(a_[i]);
  }
  return os.str();
}

MultiplicityDecomposition multiplicity_decomposition(const LinearizedPoly& L) {
  const auto m = L.mlow();
  if (!m) fail(ErrorCode::NoInteriorTerm, L.to_string() + " is the excluded case X^{q^n}");
  const Field& f = L.field();
  const std::uint64_t q = f.order();
  const unsigned n = L.qdegree();
  const std::uint64_t qm = checked_qpow(q, *m);

  // h(X) = sum_{i=m}^{n} a_i X^{q^{i-m} - 1}
  std::vector<Elem> hc(checked_qpow(q, n - *m), 0);
  for (unsigned i = *m; i <= n; ++i) hc[checked_qpow(q, i - *m) - 1] = L.coeff(i);
  Poly h(f, std::move(hc));

  // (1) reconstruction by genuine polynomial powering.
  const Poly rebuilt = pow(h, qm).shifted(qm - 1);
  if (!(rebuilt == L.reduced_quotient())) {
    fail(ErrorCode::Internal, "X^{q^m-1} h^{q^m} differs from L(X)/X for " + L.to_string());
  }
  // (2) a_m - X h'(X) = h(X)
  const Poly lhs = Poly::constant(f, L.coeff(*m)) - h.derivative().shifted(1);
  if (!(lhs == h)) fail(ErrorCode::Internal, "a_m - X h'(X) != h(X) for " + L.to_string());
  // (3) separability and h(0) = a_m != 0
  if (h[0] == 0 || h[0] != L.coeff(*m)) fail(ErrorCode::Internal, "h(0) != a_m for " + L.to_string());
  if (!is_squarefree(h)) fail(ErrorCode::Internal, "h is not squarefree for " + L.to_string());

  return {*m, std::move(h), qm - 1, qm};
}

Poly specialize(const LinearizedPoly& L, const Embedding& emb, Elem c) {
  if (emb.source() != L.field()) fail(ErrorCode::EmbeddingUnavailable, "embedding does not start at F_q");
  if (!emb.target().contains(c)) fail(ErrorCode::BadInput, "specialization point outside the target field");
  Poly r = L.reduced_quotient().mapped(emb);
  return r - Poly::constant(emb.target(), c);
}

std::vector<LinearizedPoly> all_with_interior(const Field& field, unsigned n) {
  std::vector<LinearizedPoly> out;
  if (n < 2) return out;
  const std::uint64_t q = field.order();
  std::vector<Elem> interior(n - 1, 0);
  for (;;) {
    // increment little-endian counter
    unsigned i = 0;
    while (i < interior.size()) {
      if (++interior[i] < q) break;
      interior[i] = 0;
      ++i;
    }
    if (i == interior.size()) break;
    out.push_back(LinearizedPoly::from_interior(field, interior));
  }
  return out;
}

}  // namespace linpoly
