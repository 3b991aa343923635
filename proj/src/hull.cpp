#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "mfmut/error.hpp"
#include "mfmut/linalg.hpp"
#include "mfmut/polytope.hpp"

namespace mfmut {
namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN))
    fail(ErrorCode::Overflow, "hull arithmetic exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

i128 mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "hull arithmetic exceeds 128 bits");
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

// Primitive integer vector spanning the kernel of a (d−1)×d matrix of rank d−1,
// by fraction-free Gauss–Jordan elimination.
Coords kernel_vector(std::vector<std::vector<i128>> a, std::size_t d) {
  const std::size_t m = a.size();
  std::vector<std::size_t> pivcol;
  std::vector<bool> is_pivot(d, false);
  i128 prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == c) continue;
        i128 v = mul(a[r][c], a[i][j]) - mul(a[i][c], a[r][j]);
        a[i][j] = narrow(v / prev);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivcol.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  if (r != d - 1) fail(ErrorCode::Internal, "hull: degenerate ridge");
  std::size_t free = 0;
  while (is_pivot[free]) ++free;
  Coords x(d, 0);
  x[free] = narrow(prev);
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = narrow(-a[i][free]);
  std::int64_t g = 0;
  for (auto v : x) g = gcd64(g, v);
  if (g > 1)
    for (auto& v : x) v /= g;
  return x;
}

i128 det_abs(std::vector<std::vector<i128>> a) {
  const std::size_t n = a.size();
  i128 prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a[i][j] = narrow((mul(a[c][c], a[i][j]) - mul(a[i][c], a[c][j])) / prev);
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  i128 d = n ? a[n - 1][n - 1] * sign : 1;
  return d < 0 ? -d : d;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct BoundaryFacet {
  std::vector<std::size_t> verts;  // sorted
  Coords normal;
  std::int64_t offset = 0;
  bool alive = true;
};

class Builder {
 public:
  Builder(const std::vector<Coords>& pts, std::size_t d) : pts_(pts), d_(d) {}

  HullData run() {
    std::vector<std::size_t> order(pts_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pts_[a] < pts_[b]; });
    std::vector<std::size_t> simplex = initial_simplex(order);
    for (auto s : simplex) {
      for (std::size_t j = 0; j < d_; ++j) center_[j] += pts_[s][j];
    }
    HullData out;
    out.dim = d_;
    out.simplices.push_back(simplex);
    volume_ += cell_volume(simplex);
    for (std::size_t omit = 0; omit <= d_; ++omit) {
      std::vector<std::size_t> f;
      for (std::size_t i = 0; i <= d_; ++i)
        if (i != omit) f.push_back(simplex[i]);
      add_facet(std::move(f));
    }
    std::vector<bool> used(pts_.size(), false);
    for (auto s : simplex) used[s] = true;
    for (auto p : order) {
      if (used[p]) continue;
      insert(p, out.simplices);
    }
    out.normalized_volume = Int(static_cast<long>(0));
    mpz_import_i128(out.normalized_volume, volume_);
    out.facets = group_facets();
    return out;
  }

 private:
  static void mpz_import_i128(Int& z, i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Int hi(static_cast<unsigned long>(u >> 64));
    Int lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    z = (hi << 64) + lo;
    if (neg) z = -z;
  }

  std::vector<std::size_t> initial_simplex(const std::vector<std::size_t>& order) {
    std::vector<std::size_t> chosen;
    RatMatrix basis;  // echelon rows of difference vectors
    std::vector<std::size_t> pivots;
    for (auto idx : order) {
      if (chosen.empty()) {
        chosen.push_back(idx);
        continue;
      }
      RatVec v(d_);
      for (std::size_t j = 0; j < d_; ++j) v[j] = static_cast<long>(pts_[idx][j] - pts_[chosen[0]][j]);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (sgn(v[pivots[i]]) == 0) continue;
        Rat f = v[pivots[i]] / basis[i][pivots[i]];
        for (std::size_t j = 0; j < d_; ++j) v[j] -= f * basis[i][j];
      }
      std::size_t p = 0;
      while (p < d_ && sgn(v[p]) == 0) ++p;
      if (p == d_) continue;
      basis.push_back(std::move(v));
      pivots.push_back(p);
      chosen.push_back(idx);
      if (chosen.size() == d_ + 1) break;
    }
    if (chosen.size() != d_ + 1)
      fail(ErrorCode::LowerDimensional, "hull: points do not span the full dimension");
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  i128 cell_volume(const std::vector<std::size_t>& cell) const {
    std::vector<std::vector<i128>> m;
    for (std::size_t i = 1; i < cell.size(); ++i) {
      std::vector<i128> row(d_);
      for (std::size_t j = 0; j < d_; ++j) row[j] = static_cast<i128>(pts_[cell[i]][j]) - pts_[cell[0]][j];
      m.push_back(std::move(row));
    }
    return det_abs(std::move(m));
  }

  i128 eval(const Coords& normal, std::size_t p) const {
    i128 s = 0;
    for (std::size_t j = 0; j < d_; ++j) s += mul(normal[j], pts_[p][j]);
    return s;
  }

  void add_facet(std::vector<std::size_t> verts) {
    std::sort(verts.begin(), verts.end());
    std::vector<std::vector<i128>> m;
    for (std::size_t i = 1; i < verts.size(); ++i) {
      std::vector<i128> row(d_);
      for (std::size_t j = 0; j < d_; ++j) row[j] = static_cast<i128>(pts_[verts[i]][j]) - pts_[verts[0]][j];
      m.push_back(std::move(row));
    }
    BoundaryFacet f;
    f.normal = d_ == 1 ? Coords{1} : kernel_vector(std::move(m), d_);
    i128 off = eval(f.normal, verts[0]);
    i128 c = 0;
    for (std::size_t j = 0; j < d_; ++j) c += mul(f.normal[j], center_[j]);
    i128 scaled = mul(off, static_cast<i128>(d_ + 1));
    if (c > scaled) {
      for (auto& x : f.normal) x = -x;
      off = -off;
    } else if (c == scaled) {
      fail(ErrorCode::Internal, "hull: interior reference lies on a facet");
    }
    f.offset = narrow(off);
    f.verts = std::move(verts);
    const std::size_t id = facets_.size();
    for (std::size_t omit = 0; omit < f.verts.size(); ++omit) {
      std::vector<std::size_t> ridge;
      for (std::size_t i = 0; i < f.verts.size(); ++i)
        if (i != omit) ridge.push_back(f.verts[i]);
      ridges_[ridge].push_back(id);
    }
    facets_.push_back(std::move(f));
  }

  void insert(std::size_t p, std::vector<std::vector<std::size_t>>& cells) {
    std::vector<std::size_t> visible;
    std::vector<bool> is_visible(facets_.size(), false);
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (!facets_[f].alive) continue;
      if (eval(facets_[f].normal, p) > facets_[f].offset) {
        visible.push_back(f);
        is_visible[f] = true;
      }
    }
    if (visible.empty()) return;
    std::vector<std::vector<std::size_t>> horizon;
    auto ridges_of = [](const std::vector<std::size_t>& verts) {
      std::vector<std::vector<std::size_t>> out;
      for (std::size_t omit = 0; omit < verts.size(); ++omit) {
        std::vector<std::size_t> ridge;
        for (std::size_t i = 0; i < verts.size(); ++i)
          if (i != omit) ridge.push_back(verts[i]);
        out.push_back(std::move(ridge));
      }
      return out;
    };
    for (auto f : visible) {
      std::vector<std::size_t> cell = facets_[f].verts;
      cell.push_back(p);
      std::sort(cell.begin(), cell.end());
      volume_ += cell_volume(cell);
      cells.push_back(std::move(cell));
      for (auto& ridge : ridges_of(facets_[f].verts)) {
        bool other_visible = false;
        for (auto o : ridges_.at(ridge))
          if (o != f && is_visible[o]) other_visible = true;
        if (!other_visible) horizon.push_back(std::move(ridge));
      }
    }
    for (auto f : visible) {
      for (auto& ridge : ridges_of(facets_[f].verts)) {
        auto it = ridges_.find(ridge);
        auto& owners = it->second;
        owners.erase(std::remove(owners.begin(), owners.end(), f), owners.end());
        if (owners.empty()) ridges_.erase(it);
      }
      facets_[f].alive = false;
    }
    for (auto& ridge : horizon) {
      ridge.push_back(p);
      add_facet(std::move(ridge));
    }
  }

  std::vector<Facet> group_facets() const {
    std::map<std::pair<Coords, std::int64_t>, Facet> groups;
    for (const auto& f : facets_) {
      if (!f.alive) continue;
      auto key = std::make_pair(f.normal, f.offset);
      if (groups.count(key)) continue;
      Facet out;
      out.normal = f.normal;
      out.offset = f.offset;
      for (std::size_t i = 0; i < pts_.size(); ++i)
        if (eval(f.normal, i) == f.offset) out.tight.push_back(i);
      groups.emplace(std::move(key), std::move(out));
    }
    std::vector<Facet> out;
    for (auto& [key, f] : groups) out.push_back(std::move(f));
    return out;
  }

  const std::vector<Coords>& pts_;
  std::size_t d_;
  std::vector<i128> center_ = std::vector<i128>(d_, 0);
  std::vector<BoundaryFacet> facets_;
  std::unordered_map<std::vector<std::size_t>, std::vector<std::size_t>, VecHash> ridges_;
  i128 volume_ = 0;
};

}  // namespace

HullData hull(const std::vector<Coords>& pts) {
  HullData out;
  if (pts.empty()) return out;
  const std::size_t d = pts[0].size();
  for (const auto& p : pts)
    if (p.size() != d) fail(ErrorCode::DimensionMismatch, "hull: mixed dimensions");
  if (d == 0) {
    if (pts.size() > 0) out.simplices.push_back({0});
    out.normalized_volume = 0;
    return out;
  }
  return Builder(pts, d).run();
}

}  // namespace mfmut
