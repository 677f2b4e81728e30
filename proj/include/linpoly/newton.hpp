#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "linpoly/field.hpp"
#include "linpoly/poly.hpp"
#include "linpoly/series.hpp"

namespace linpoly {

using Rational = boost::rational<long long>;

struct PolygonVertex {
  long long i = 0;  // X-exponent
  long long v = 0;  // valuation
  friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

struct PolygonSegment {
  PolygonVertex start;
  PolygonVertex end;
  Rational slope;
  long long length = 0;  // horizontal
};

/// Lower convex hull of {(i, v(c_i))}; v = infinity for vanishing coefficients.
struct NewtonPolygon {
  std::vector<std::pair<long long, std::optional<long long>>> points;
  std::vector<PolygonVertex> vertices;
  std::vector<PolygonSegment> segments;

  std::string to_string() const;
};

/// Newton polygon of a polynomial with power-series coefficients. A
/// coefficient that vanishes to the stored precision counts as infinite only
/// when (i, N) lies on or above the hull of the others; otherwise, and
/// whenever the first or last coefficient vanishes to precision, this throws
/// PrecisionTooLow.
NewtonPolygon newton_polygon(const SeriesPoly& F);

/// f(X + alpha) - g(y + beta) as a polynomial in X over E[[y]]/(y^N).
SeriesPoly shifted_difference(const Poly& f, Elem alpha, const Poly& g, Elem beta,
                              std::size_t precision = kDefaultTruncation);

/// The vertex list [(0, b), (a, 0), (deg f, 0)] predicted for f(X) - g(y)
/// when alpha, beta have multiplicities a, b (a single segment when a = deg f).
std::vector<PolygonVertex> predicted_vertices(unsigned a, unsigned b, unsigned deg_f);

}  // namespace linpoly
