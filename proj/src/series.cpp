#include <algorithm>
#include <sstream>

#include "linpoly/error.hpp"
#include "linpoly/series.hpp"

namespace linpoly {

TruncatedSeries::TruncatedSeries(Field field, std::size_t precision)
    : field_(std::move(field)), c_(precision, 0) {}

TruncatedSeries::TruncatedSeries(Field field, std::size_t precision, std::vector<Elem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  c_.resize(precision, 0);
}

TruncatedSeries TruncatedSeries::constant(const Field& field, std::size_t precision, Elem c) {
  return monomial(field, precision, c, 0);
}

TruncatedSeries TruncatedSeries::monomial(const Field& field, std::size_t precision, Elem c, std::size_t k) {
  TruncatedSeries s(field, precision);
  if (k < precision) s.c_[k] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, std::size_t precision) {
  std::vector<Elem> c(p.coeffs().begin(), p.coeffs().begin() + std::min(p.coeffs().size(), precision));
  return TruncatedSeries(p.field(), precision, std::move(c));
}

std::optional<std::size_t> TruncatedSeries::valuation() const {
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j]) return j;
  }
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
  std::vector<Elem> c(c_.begin(), c_.begin() + std::min(precision, c_.size()));
  return TruncatedSeries(field_, precision, std::move(c));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(field_, c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] = field_.neg(c_[j]);
  return r;
}

TruncatedSeries TruncatedSeries::scaled(Elem c) const {
  TruncatedSeries r(field_, c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] = field_.mul(c_[j], c);
  return r;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  TruncatedSeries r(field_, c_.size());
  for (std::size_t j = 0; j + k < c_.size(); ++j) r.c_[j + k] = c_[j];
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_.empty() || c_[0] == 0) fail(ErrorCode::NotAUnit, "series with positive valuation is not invertible");
  const std::size_t n = c_.size();
  TruncatedSeries r(field_, n);
  const Elem inv0 = field_.inv(c_[0]);
  r.c_[0] = inv0;
  for (std::size_t j = 1; j < n; ++j) {
    Elem acc = 0;
    for (std::size_t i = 1; i <= j; ++i) {
      if (c_[i]) acc = field_.add(acc, field_.mul(c_[i], r.c_[j - i]));
    }
    r.c_[j] = field_.neg(field_.mul(inv0, acc));
  }
  return r;
}

TruncatedSeries TruncatedSeries::compose_with_z_power(std::size_t s) const {
  if (s == 0) fail(ErrorCode::BadInput, "substitution z -> z^0 is not allowed");
  TruncatedSeries r(field_, c_.size());
  for (std::size_t j = 0; j * s < c_.size(); ++j) r.c_[j * s] = c_[j];
  return r;
}

namespace {

void check_field(const Field& a, const Field& b) {
  if (a != b) fail(ErrorCode::FieldMismatch, "series over different fields");
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_field(a.field_, b.field_);
  const std::size_t n = std::min(a.precision(), b.precision());
  TruncatedSeries r(a.field_, n);
  for (std::size_t j = 0; j < n; ++j) r.c_[j] = a.field_.add(a.c_[j], b.c_[j]);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_field(a.field_, b.field_);
  const std::size_t n = std::min(a.precision(), b.precision());
  TruncatedSeries r(a.field_, n);
  for (std::size_t j = 0; j < n; ++j) r.c_[j] = a.field_.sub(a.c_[j], b.c_[j]);
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_field(a.field_, b.field_);
  const Field& f = a.field_;
  const std::size_t n = std::min(a.precision(), b.precision());
  TruncatedSeries r(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.c_[j]) r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
    }
  }
  return r;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (!c_[j]) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = field_.format(c_[j]);
    if (j == 0) {
      os << cs;
      continue;
    }
    if (c_[j] != 1) os << (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) << '*';
    os << var;
    if (j > 1) os << '^' << j;
  }
  if (first) os << '0';
  os << " + O(" << var << '^' << c_.size() << ')';
  return os.str();
}

SeriesPoly::SeriesPoly(Field field, std::size_t precision, std::size_t degree)
    : field_(field), precision_(precision), c_(degree + 1, TruncatedSeries(field, precision)) {}

SeriesPoly::SeriesPoly(Field field, std::size_t precision, std::vector<TruncatedSeries> coeffs)
    : field_(std::move(field)), precision_(precision), c_(std::move(coeffs)) {
  if (c_.empty()) c_.emplace_back(field_, precision_);
  for (auto& s : c_) {
    check_field(field_, s.field());
    if (s.precision() != precision_) s = s.truncated(precision_);
  }
}

SeriesPoly SeriesPoly::from_poly(const Poly& p, std::size_t precision) {
  SeriesPoly r(p.field(), precision, p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    r.c_[i] = TruncatedSeries::constant(p.field(), precision, p.coeffs()[i]);
  }
  return r;
}

bool SeriesPoly::is_monic() const {
  return c_.back() == TruncatedSeries::constant(field_, precision_, 1);
}

Poly SeriesPoly::mod_z() const {
  std::vector<Elem> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i][0];
  return Poly(field_, std::move(c));
}

std::optional<std::size_t> SeriesPoly::valuation() const {
  std::optional<std::size_t> best;
  for (const auto& s : c_) {
    auto v = s.valuation();
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

SeriesPoly SeriesPoly::truncated(std::size_t precision) const {
  std::vector<TruncatedSeries> c;
  c.reserve(c_.size());
  for (const auto& s : c_) c.push_back(s.truncated(precision));
  return SeriesPoly(field_, precision, std::move(c));
}

SeriesPoly SeriesPoly::with_degree(std::size_t degree) const {
  std::vector<TruncatedSeries> c(c_.begin(), c_.begin() + std::min(degree + 1, c_.size()));
  for (std::size_t i = degree + 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) {
      fail(ErrorCode::Internal, "nonzero X^" + std::to_string(i) + " coefficient above degree " + std::to_string(degree));
    }
  }
  while (c.size() < degree + 1) c.emplace_back(field_, precision_);
  return SeriesPoly(field_, precision_, std::move(c));
}

SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
  check_field(a.field_, b.field_);
  const std::size_t n = std::min(a.precision_, b.precision_);
  const std::size_t len = std::max(a.c_.size(), b.c_.size());
  std::vector<TruncatedSeries> c(len, TruncatedSeries(a.field_, n));
  for (std::size_t i = 0; i < len; ++i) {
    if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
    if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
  }
  return SeriesPoly(a.field_, n, std::move(c));
}

SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) {
  check_field(a.field_, b.field_);
  const std::size_t n = std::min(a.precision_, b.precision_);
  const std::size_t len = std::max(a.c_.size(), b.c_.size());
  std::vector<TruncatedSeries> c(len, TruncatedSeries(a.field_, n));
  for (std::size_t i = 0; i < len; ++i) {
    if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
    if (i < b.c_.size()) c[i] = c[i] - b.c_[i];
  }
  return SeriesPoly(a.field_, n, std::move(c));
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
  check_field(a.field_, b.field_);
  const std::size_t n = std::min(a.precision_, b.precision_);
  std::vector<TruncatedSeries> c(a.c_.size() + b.c_.size() - 1, TruncatedSeries(a.field_, n));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
  }
  return SeriesPoly(a.field_, n, std::move(c));
}

bool operator==(const SeriesPoly& a, const SeriesPoly& b) {
  if (a.field_ != b.field_ || a.precision_ != b.precision_) return false;
  const std::size_t len = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < len; ++i) {
    const bool az = i >= a.c_.size() || a.c_[i].is_zero();
    const bool bz = i >= b.c_.size() || b.c_[i].is_zero();
    if (az && bz) continue;
    if (az != bz || !(a.c_[i] == b.c_[i])) return false;
  }
  return true;
}

std::string SeriesPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    // Strip the O(z^N) tail of each coefficient; it is reported once at the end.
    std::string s = c_[i].to_string();
    s = s.substr(0, s.rfind(" + O("));
    const bool is_one = c_[i] == TruncatedSeries::constant(field_, precision_, 1);
    if (i == 0) {
      os << '(' << s << ')';
    } else {
      if (!is_one) os << '(' << s << ")*";
      os << 'X';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  os << " mod z^" << precision_;
  return os.str();
}

std::pair<SeriesPoly, SeriesPoly> divmod_monic(const SeriesPoly& a, const SeriesPoly& b) {
  if (!b.is_monic()) fail(ErrorCode::BadInput, "divisor must be X-monic");
  const std::size_t n = std::min(a.precision(), b.precision());
  const Field& f = a.field();
  const std::size_t db = b.degree();
  std::vector<TruncatedSeries> r;
  for (const auto& s : a.coeffs()) r.push_back(s.truncated(n));
  if (r.size() <= db) {
    return {SeriesPoly(f, n, 0), SeriesPoly(f, n, std::move(r)).with_degree(db == 0 ? 0 : db - 1)};
  }
  std::vector<TruncatedSeries> q(r.size() - db, TruncatedSeries(f, n));
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    const TruncatedSeries c = r[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - c * b.coeff(j);
  }
  r.resize(db == 0 ? 1 : db, TruncatedSeries(f, n));
  if (db == 0) r[0] = TruncatedSeries(f, n);
  return {SeriesPoly(f, n, std::move(q)), SeriesPoly(f, n, std::move(r))};
}

}  // namespace linpoly
