#include "linpoly/groups.hpp"

#include <sstream>

#include "linpoly/error.hpp"
#include "linpoly/field.hpp"

namespace linpoly {

CycleType::CycleType(std::map<std::uint64_t, std::uint64_t> parts) {
  for (const auto& [len, cnt] : parts) add(len, cnt);
}

CycleType CycleType::from_lengths(std::span<const std::uint64_t> lengths) {
  CycleType t;
  for (auto len : lengths) t.add(len);
  return t;
}

CycleType CycleType::of_permutation(std::span<const std::uint32_t> perm, std::size_t from) {
  CycleType t;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t start = from; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      ++len;
    }
    t.add(len);
  }
  return t;
}

void CycleType::add(std::uint64_t length, std::uint64_t count) {
  if (length == 0) fail(ErrorCode::BadInput, "cycle length must be positive");
  if (count) parts_[length] += count;
}

std::uint64_t CycleType::total() const {
  std::uint64_t s = 0;
  for (const auto& [len, cnt] : parts_) s += len * cnt;
  return s;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [len, cnt] : parts_) {
    if (!first) os << ", ";
    first = false;
    os << len << ':' << cnt;
  }
  os << '}';
  return os.str();
}

BigInt permutation_order(const CycleType& t) {
  BigInt r = 1;
  for (const auto& [len, cnt] : t.parts()) r = big_lcm(r, BigInt(len));
  return r;
}

BigInt order_gl(unsigned n, const BigInt& q) {
  if (n == 0) fail(ErrorCode::BadInput, "dimension must be positive");
  const BigInt qn = big_pow(q, n);
  BigInt r = 1;
  BigInt qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    r *= qn - qi;
    qi *= q;
  }
  return r;
}

BigInt order_gamma_l(unsigned n, const BigInt& q, unsigned d) {
  if (d == 0 || n % d != 0) {
    fail(ErrorCode::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(n));
  }
  return BigInt(d) * order_gl(n / d, big_pow(q, d));
}

std::set<CycleType> TypeCensus::types() const {
  std::set<CycleType> out;
  for (const auto& [t, c] : counts) out.insert(t);
  return out;
}

std::string GroupDescriptor::name() const {
  std::ostringstream os;
  if (kind == Kind::GL) {
    os << "GL_" << n << '(' << q << ')';
  } else {
    os << "GammaL_" << n / d << '(' << q << '^' << d << ')';
  }
  return os.str();
}

GroupDescriptor describe_gl(unsigned n, std::uint64_t q) {
  return {GroupDescriptor::Kind::GL, n, q, 1, order_gl(n, q), std::nullopt};
}

GroupDescriptor describe_gamma_l(unsigned n, std::uint64_t q, unsigned d) {
  return {GroupDescriptor::Kind::GammaL, n, q, d, order_gamma_l(n, q, d), std::nullopt};
}

namespace {

// Enumerates GL_m(S) x <phi> on F_{q^n}, S = F_{q^d}, by choosing the images
// of the basis 1, w, ..., w^{m-1} one at a time outside the current span.
class SemilinearEnumerator {
 public:
  SemilinearEnumerator(std::uint64_t q, unsigned n, unsigned d) : n_(n), d_(d), m_(n / d) {
    const auto pp = prime_power(q);
    if (!pp) fail(ErrorCode::BadInput, std::to_string(q) + " is not a prime power");
    const auto [p, k1] = *pp;
    k1_ = k1;
    Rng rng = Rng::stream(kDefaultSeed, "modulus-search");
    field_ = std::make_unique<Field>(Field::extension(Field::prime(p), k1 * n, rng));
    Q_ = field_->order();

    for (Elem x = 0; x < Q_; ++x) {
      if (field_->frobenius(x, k1 * d) == x) sub_.push_back(x);
    }
    basis_.push_back(1);
    for (unsigned i = 1; i < m_; ++i) basis_.push_back(field_->mul(basis_.back(), field_->generator()));

    // coords_[x*m + i] = i-th coordinate of x over the subfield.
    coords_.assign(Q_ * m_, 0);
    std::vector<std::size_t> idx(m_, 0);
    for (;;) {
      Elem x = 0;
      for (unsigned i = 0; i < m_; ++i) x = field_->add(x, field_->mul(sub_[idx[i]], basis_[i]));
      for (unsigned i = 0; i < m_; ++i) coords_[x * m_ + i] = sub_[idx[i]];
      unsigned i = 0;
      while (i < m_ && ++idx[i] == sub_.size()) idx[i++] = 0;
      if (i == m_) break;
    }

    frob_.resize(d_);
    for (unsigned j = 0; j < d_; ++j) {
      frob_[j].resize(Q_);
      for (Elem x = 0; x < Q_; ++x) frob_[j][x] = field_->frobenius(x, k1 * j);
    }
  }

  TypeCensus run() {
    TypeCensus census;
    std::vector<Elem> images;
    std::vector<char> in_span(Q_, 0);
    in_span[0] = 1;
    recurse(images, in_span, census);
    return census;
  }

 private:
  void recurse(std::vector<Elem>& images, const std::vector<char>& in_span, TypeCensus& census) {
    if (images.size() == m_) {
      record(images, census);
      return;
    }
    for (Elem v = 1; v < Q_; ++v) {
      if (in_span[v]) continue;
      // span + S v
      std::vector<char> next(Q_, 0);
      for (Elem x = 0; x < Q_; ++x) {
        if (!in_span[x]) continue;
        for (Elem c : sub_) next[field_->add(x, field_->mul(c, v))] = 1;
      }
      images.push_back(v);
      recurse(images, next, census);
      images.pop_back();
    }
  }

  void record(const std::vector<Elem>& images, TypeCensus& census) {
    std::vector<std::uint32_t> linear(Q_);
    for (Elem x = 0; x < Q_; ++x) {
      Elem y = 0;
      for (unsigned i = 0; i < m_; ++i) {
        const Elem c = coords_[x * m_ + i];
        if (c) y = field_->add(y, field_->mul(c, images[i]));
      }
      linear[x] = static_cast<std::uint32_t>(y);
    }
    std::vector<std::uint32_t> perm(Q_);
    for (unsigned j = 0; j < d_; ++j) {
      for (Elem x = 0; x < Q_; ++x) perm[x] = linear[frob_[j][x]];
      ++census.counts[CycleType::of_permutation(perm, 1)];
      ++census.elements;
    }
  }

  unsigned n_, d_, m_;
  unsigned k1_ = 1;
  std::unique_ptr<Field> field_;
  std::uint64_t Q_ = 0;
  std::vector<Elem> sub_;
  std::vector<Elem> basis_;
  std::vector<Elem> coords_;
  std::vector<std::vector<Elem>> frob_;
};

}  // namespace

TypeCensus semilinear_cycle_types(std::uint64_t q, unsigned n, unsigned d) {
  if (n == 0) fail(ErrorCode::BadInput, "dimension must be positive");
  if (!prime_power(q)) fail(ErrorCode::BadInput, std::to_string(q) + " is not a prime power");
  const BigInt order = order_gamma_l(n, q, d);
  if (order > kGroupGuard) {
    fail(ErrorCode::TooLarge, "group of order " + order.str() + " exceeds the enumeration guard");
  }
  if (big_pow(BigInt(q), n) > kEnumerationGuard) {
    fail(ErrorCode::TooLarge, "q^n exceeds the enumeration guard");
  }
  TypeCensus census = SemilinearEnumerator(q, n, d).run();
  if (BigInt(census.elements) != order) {
    fail(ErrorCode::Internal, "enumerated " + std::to_string(census.elements) + " elements, expected " + order.str());
  }
  return census;
}

TypeCensus gl_cycle_types(unsigned n, std::uint64_t q) { return semilinear_cycle_types(q, n, 1); }

DeductionReport divisibility_deduction(std::uint64_t q, unsigned n) {
  if (n < 3 || !is_prime(n)) fail(ErrorCode::BadArity, std::to_string(n) + " is not an odd prime");
  if (!prime_power(q)) fail(ErrorCode::BadInput, std::to_string(q) + " is not a prime power");
  DeductionReport rep;
  rep.q = q;
  rep.n = n;
  const BigInt Q = q;
  const BigInt qn1 = big_pow(Q, n) - 1;
  rep.gamma_l1_order = BigInt(n) * qn1;
  rep.no_admissible_m = true;
  for (unsigned m = 1; m < n; ++m) {
    DeductionRow row;
    row.m = m;
    const BigInt qm = big_pow(Q, m);
    row.divisor = qm * (qm - 1) * qn1;
    row.divides = divides(row.divisor, rep.gamma_l1_order);
    row.qm_divides_n = divides(qm, BigInt(n));
    if (row.qm_divides_n) {
      // q^m | n with n prime forces m = 1 and q = n; the divisibility then
      // cancels to (n - 1) | 1.
      row.reduced_condition = (1 % (n - 1)) == 0;
    }
    if (row.divides) rep.no_admissible_m = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace linpoly
