#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "mfmut/combinat.hpp"
#include "mfmut/rational.hpp"

namespace mfmut {

using Point = RatVec;
using Coords = std::vector<std::int64_t>;

/// base + Z-span(basis) = aff(points) ∩ Z^D.
struct AffineFrame {
  IntVec base;
  IntMatrix basis;                   // rows, in row Hermite normal form
  std::vector<std::size_t> pivots;   // pivot column of each basis row
  std::size_t ambient_dim = 0;

  std::size_t dim() const { return basis.size(); }
  /// Integer coordinates of a lattice point of the affine span.
  Coords coordinates(const Point& p) const;
  Point point(const Coords& c) const;
};

struct Facet {
  Coords normal;   // primitive, outward: normal·x ≤ offset on the polytope
  std::int64_t offset = 0;
  std::vector<std::size_t> tight;  // indices of input points on the facet
};

struct HullData {
  std::size_t dim = 0;
  std::vector<Facet> facets;
  std::vector<std::vector<std::size_t>> simplices;  // d+1 point indices each
  Int normalized_volume = 0;
};

bool conv_contains(const Point& p, const std::vector<Point>& pts);
std::vector<Point> vertex_filter(const std::vector<Point>& pts);
AffineFrame saturated_frame(const std::vector<Point>& pts);

/// Beneath-beyond placing triangulation of full-dimensional integer points,
/// inserted in lexicographic order. Indices refer to the input order.
HullData hull(const std::vector<Coords>& pts);

class VPolytope {
 public:
  VPolytope() = default;
  explicit VPolytope(std::vector<Point> points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Point>& points() const { return points_; }
  bool empty() const { return points_.empty(); }

  const std::vector<Point>& vertices() const;
  const AffineFrame& frame() const;
  /// Hull of the vertices in frame coordinates; indices refer to vertices().
  const HullData& hull_data() const;
  const std::vector<Coords>& frame_coordinates() const;

  std::size_t dimension() const { return frame().dim(); }
  Int normalized_volume() const;

 private:
  struct Cache;
  std::vector<Point> points_;
  std::size_t ambient_dim_ = 0;
  std::shared_ptr<Cache> cache_;
};

Int normalized_volume(const VPolytope& p);
/// Normalized volume against Z^D when the points are full-dimensional, else 0.
Int full_dim_volume(const std::vector<Point>& pts);
bool adjacent(const Point& u, const Point& v, const VPolytope& p);
std::vector<Point> lattice_points(const VPolytope& p);
VPolytope dilate(const VPolytope& p, long factor);
VPolytope matching_field_polytope(const MatchingField& field);
/// Row-major 0/1 point with ones at (σ(r), i_r).
Point vertex_of(const MatchingField& field, std::size_t index);

}  // namespace mfmut
