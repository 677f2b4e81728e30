#include "linpoly/newton.hpp"

#include <sstream>

#include "linpoly/error.hpp"

namespace linpoly {

namespace {

// Cross product of (a - o) and (b - o); > 0 for a counter-clockwise turn.
long long cross(const PolygonVertex& o, const PolygonVertex& a, const PolygonVertex& b) {
  return (a.i - o.i) * (b.v - o.v) - (a.v - o.v) * (b.i - o.i);
}

}  // namespace

NewtonPolygon newton_polygon(const SeriesPoly& F) {
  NewtonPolygon out;
  const auto N = static_cast<long long>(F.precision());
  std::vector<PolygonVertex> finite;
  for (std::size_t i = 0; i <= F.degree(); ++i) {
    auto v = F.coeff(i).valuation();
    out.points.emplace_back(static_cast<long long>(i), v ? std::optional<long long>(static_cast<long long>(*v)) : std::nullopt);
    if (v) finite.push_back({static_cast<long long>(i), static_cast<long long>(*v)});
  }
  if (finite.empty()) fail(ErrorCode::PrecisionTooLow, "every coefficient vanishes to precision");
  if (!out.points.front().second || !out.points.back().second) {
    fail(ErrorCode::PrecisionTooLow, "an end coefficient vanishes to precision " + std::to_string(N));
  }

  std::vector<PolygonVertex> hull;
  for (const auto& pt : finite) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }

  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const auto& s = hull[k];
    const auto& e = hull[k + 1];
    out.segments.push_back({s, e, Rational(e.v - s.v, e.i - s.i), e.i - s.i});
  }

  // An unresolved coefficient must not be able to pull the hull down.
  for (const auto& [i, v] : out.points) {
    if (v) continue;
    for (const auto& seg : out.segments) {
      if (i <= seg.start.i || i >= seg.end.i) continue;
      const Rational height = Rational(seg.start.v) + seg.slope * Rational(i - seg.start.i);
      if (Rational(N) < height) {
        fail(ErrorCode::PrecisionTooLow, "coefficient of X^" + std::to_string(i) + " is unresolved below the hull");
      }
    }
  }
  out.vertices = std::move(hull);
  return out;
}

std::string NewtonPolygon::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k) os << " -> ";
    os << '(' << vertices[k].i << ", " << vertices[k].v << ')';
  }
  return os.str();
}

SeriesPoly shifted_difference(const Poly& f, Elem alpha, const Poly& g, Elem beta, std::size_t precision) {
  if (f.field() != g.field()) fail(ErrorCode::FieldMismatch, "f and g must share a field");
  if (f.degree() < 1) fail(ErrorCode::BadInput, "f must be non-constant");
  SeriesPoly F = SeriesPoly::from_poly(f.taylor_shift(alpha), precision).with_degree(static_cast<std::size_t>(f.degree()));
  const TruncatedSeries gy = TruncatedSeries::from_poly(g.taylor_shift(beta), precision);
  F.coeff(0) = F.coeff(0) - gy;
  return F;
}

std::vector<PolygonVertex> predicted_vertices(unsigned a, unsigned b, unsigned deg_f) {
  std::vector<PolygonVertex> v{{0, static_cast<long long>(b)}, {static_cast<long long>(a), 0}};
  if (deg_f > a) v.push_back({static_cast<long long>(deg_f), 0});
  return v;
}

}  // namespace linpoly
