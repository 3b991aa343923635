#include "mfmut/polytope.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "mfmut/error.hpp"
#include "mfmut/linalg.hpp"
#include "mfmut/lp.hpp"

namespace mfmut {

Coords AffineFrame::coordinates(const Point& p) const {
  if (p.size() != ambient_dim) fail(ErrorCode::DimensionMismatch, "frame: point has wrong dimension");
  IntVec x(ambient_dim);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (!is_integral(p[j])) fail(ErrorCode::NonIntegral, "frame: non-integral point");
    x[j] = p[j].get_num() - base[j];
  }
  IntVec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Int v = x[pivots[i]];
    for (std::size_t t = 0; t < i; ++t) v -= c[t] * basis[t][pivots[i]];
    if (!mpz_divisible_p(v.get_mpz_t(), basis[i][pivots[i]].get_mpz_t()))
      fail(ErrorCode::Precondition, "frame: point is not a lattice point of the affine span");
    c[i] = v / basis[i][pivots[i]];
  }
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < dim(); ++i) s += c[i] * basis[i][j];
    if (s != x[j]) fail(ErrorCode::Precondition, "frame: point lies outside the affine span");
  }
  Coords out;
  out.reserve(dim());
  for (const auto& v : c) out.push_back(to_int64(v));
  return out;
}

Point AffineFrame::point(const Coords& c) const {
  Point p(ambient_dim);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    Int s = base[j];
    for (std::size_t i = 0; i < dim(); ++i)
      if (c[i] != 0) s += Int(static_cast<long>(c[i])) * basis[i][j];
    p[j] = Rat(s);
  }
  return p;
}

AffineFrame saturated_frame(const std::vector<Point>& pts) {
  AffineFrame f;
  if (pts.empty()) return f;
  const std::size_t dim = pts[0].size();
  f.ambient_dim = dim;
  for (const auto& p : pts) {
    if (p.size() != dim) fail(ErrorCode::DimensionMismatch, "saturated_frame: mixed dimensions");
    if (!is_integral(p)) fail(ErrorCode::NonIntegral, "saturated_frame: non-integral input");
  }
  f.base = to_int(pts[0]);
  RatMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  IntMatrix complement;
  for (const auto& y : nullspace(diffs, dim)) complement.push_back(primitive(y));
  f.basis = integer_kernel(complement, dim);
  for (const auto& row : f.basis) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    f.pivots.push_back(p);
  }
  return f;
}

namespace {

RatMatrix combination_rows(const std::vector<Point>& pts, std::size_t dim) {
  RatMatrix a(dim + 1, RatVec(pts.size(), Rat(0)));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j) a[j][i] = pts[i][j];
    a[dim][i] = 1;
  }
  return a;
}

std::vector<Point> as_points(const std::vector<Coords>& cs) {
  std::vector<Point> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(to_rat(c));
  return out;
}

}  // namespace

bool conv_contains(const Point& p, const std::vector<Point>& pts) {
  if (pts.empty()) return false;
  const std::size_t dim = p.size();
  for (const auto& q : pts)
    if (q.size() != dim) fail(ErrorCode::DimensionMismatch, "conv_contains: mixed dimensions");
  RatVec b(p);
  b.push_back(1);
  return lp_feasible(combination_rows(pts, dim), b);
}

std::vector<Point> vertex_filter(const std::vector<Point>& pts) {
  // Repeated points are collapsed to their first occurrence.
  std::vector<Point> uniq;
  std::set<Point> seen;
  for (const auto& p : pts)
    if (seen.insert(p).second) uniq.push_back(p);
  if (uniq.size() <= 1) return uniq;

  // Work in frame coordinates when possible: fewer equality rows.
  std::vector<Point> work = uniq;
  bool integral = true;
  for (const auto& p : uniq) integral = integral && is_integral(p);
  if (integral) {
    AffineFrame f = saturated_frame(uniq);
    work.clear();
    for (const auto& p : uniq) work.push_back(to_rat(f.coordinates(p)));
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::vector<Point> others;
    others.reserve(work.size() - 1);
    for (std::size_t j = 0; j < work.size(); ++j)
      if (j != i) others.push_back(work[j]);
    if (!conv_contains(work[i], others)) out.push_back(uniq[i]);
  }
  return out;
}

struct VPolytope::Cache {
  std::once_flag vertices_once, frame_once, coords_once, hull_once;
  std::vector<Point> vertices;
  AffineFrame frame;
  std::vector<Coords> coords;
  HullData hull;
};

VPolytope::VPolytope(std::vector<Point> points)
    : points_(std::move(points)), cache_(std::make_shared<Cache>()) {
  ambient_dim_ = points_.empty() ? 0 : points_[0].size();
  for (const auto& p : points_)
    if (p.size() != ambient_dim_) fail(ErrorCode::DimensionMismatch, "VPolytope: mixed dimensions");
}

const std::vector<Point>& VPolytope::vertices() const {
  if (!cache_) {
    static const std::vector<Point> none;
    return none;
  }
  std::call_once(cache_->vertices_once, [&] { cache_->vertices = vertex_filter(points_); });
  return cache_->vertices;
}

const AffineFrame& VPolytope::frame() const {
  if (!cache_) {
    static const AffineFrame none;
    return none;
  }
  std::call_once(cache_->frame_once, [&] { cache_->frame = saturated_frame(points_); });
  return cache_->frame;
}

const std::vector<Coords>& VPolytope::frame_coordinates() const {
  if (!cache_) {
    static const std::vector<Coords> none;
    return none;
  }
  std::call_once(cache_->coords_once, [&] {
    const AffineFrame& f = frame();
    for (const auto& v : vertices()) cache_->coords.push_back(f.coordinates(v));
  });
  return cache_->coords;
}

const HullData& VPolytope::hull_data() const {
  if (!cache_) {
    static const HullData none;
    return none;
  }
  std::call_once(cache_->hull_once, [&] { cache_->hull = hull(frame_coordinates()); });
  return cache_->hull;
}

Int VPolytope::normalized_volume() const {
  if (points_.empty() || dimension() == 0) return 0;
  return hull_data().normalized_volume;
}

Int normalized_volume(const VPolytope& p) { return p.normalized_volume(); }

Int full_dim_volume(const std::vector<Point>& pts) {
  VPolytope p(pts);
  if (pts.empty() || p.dimension() < p.ambient_dim()) return 0;
  return p.normalized_volume();
}

bool adjacent(const Point& u, const Point& v, const VPolytope& p) {
  const auto& verts = p.vertices();
  auto find = [&](const Point& x) {
    auto it = std::find(verts.begin(), verts.end(), x);
    if (it == verts.end()) fail(ErrorCode::NotAVertex, "adjacent: point is not a vertex");
    return static_cast<std::size_t>(it - verts.begin());
  };
  const std::size_t iu = find(u), iv = find(v);
  if (iu == iv) return false;
  bool integral = true;
  for (const auto& x : verts) integral = integral && is_integral(x);
  std::vector<Point> work = integral ? as_points(p.frame_coordinates()) : verts;
  const std::size_t dim = work[0].size();
  RatVec b(dim + 1);
  for (std::size_t j = 0; j < dim; ++j) b[j] = (work[iu][j] + work[iv][j]) / 2;
  b[dim] = 1;
  RatVec c(work.size(), Rat(0));
  c[iu] = 1;
  c[iv] = 1;
  LpResult r = lp_minimize(combination_rows(work, dim), b, c);
  if (r.status != LpStatus::Optimal) fail(ErrorCode::Internal, "adjacent: LP not optimal");
  return r.objective == 1;
}

std::vector<Point> lattice_points(const VPolytope& p) {
  std::vector<Point> out;
  if (p.empty()) return out;
  for (const auto& v : p.vertices())
    if (!is_integral(v)) fail(ErrorCode::NonIntegral, "lattice_points: non-integral vertex");
  const AffineFrame& f = p.frame();
  const std::size_t d = f.dim();
  if (d == 0) {
    out.push_back(p.vertices().front());
    return out;
  }
  const auto& coords = p.frame_coordinates();
  const HullData& h = p.hull_data();
  Coords lo = coords[0], hi = coords[0];
  for (const auto& c : coords)
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], c[j]);
      hi[j] = std::max(hi[j], c[j]);
    }
  Coords cur = lo;
  for (;;) {
    bool inside = true;
    for (const auto& fac : h.facets) {
      __int128 s = 0;
      for (std::size_t j = 0; j < d; ++j) s += static_cast<__int128>(fac.normal[j]) * cur[j];
      if (s > fac.offset) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(f.point(cur));
    std::size_t j = 0;
    while (j < d && cur[j] == hi[j]) {
      cur[j] = lo[j];
      ++j;
    }
    if (j == d) break;
    ++cur[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

VPolytope dilate(const VPolytope& p, long factor) {
  std::vector<Point> pts = p.points();
  for (auto& x : pts)
    for (auto& c : x) c *= factor;
  return VPolytope(std::move(pts));
}

Point vertex_of(const MatchingField& field, std::size_t index) {
  const int k = field.k(), n = field.n();
  Point v(static_cast<std::size_t>(k * n), Rat(0));
  const KSubset& s = field.subsets()[index];
  const Perm& sigma = field.at(index);
  for (int r = 1; r <= k; ++r)
    v[static_cast<std::size_t>((sigma(r) - 1) * n + (s[static_cast<std::size_t>(r - 1)] - 1))] = 1;
  return v;
}

VPolytope matching_field_polytope(const MatchingField& field) {
  std::vector<Point> pts;
  pts.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) pts.push_back(vertex_of(field, i));
  return VPolytope(std::move(pts));
}

}  // namespace mfmut
