#include "mfmut/mutation.hpp"

#include <tuple>
#include <utility>

#include "mfmut/error.hpp"
#include "mfmut/linalg.hpp"

namespace mfmut {
namespace {

using Cell = std::pair<int, int>;  // (i, j) of f_{i,j}; (0, 0) is the zero entry
constexpr Cell kZero{0, 0};

// 3×n entries of a Gr(3, n) projection; entry (r, c) is the image of e_{r,c}.
std::vector<std::vector<Cell>> gr3_table(ProjKind kind, int m, int n) {
  std::vector<std::vector<Cell>> t(4, std::vector<Cell>(static_cast<std::size_t>(n) + 1, kZero));
  auto set = [&](int r, int c, int i, int j) { t[r][static_cast<std::size_t>(c)] = {i, j}; };
  // Rows 2 and 3 shared by Π₀, Π₀², Π₁ of the first chain.
  auto lower_rows = [&] {
    for (int c = 3; c <= n - 1; ++c) set(2, c, 2, c - 2);
    for (int c = 3; c <= n; ++c) set(3, c, 3, c - 2);  // e_{3,n} ↦ f_{3,n−2} = 0
  };
  switch (kind) {
    case ProjKind::Pi0:
      for (int c = 2; c <= n - 2; ++c) set(1, c, 1, c - 1);
      lower_rows();
      break;
    case ProjKind::Pi0Sq:
      set(1, 1, 1, 1);
      for (int c = 3; c <= n - 2; ++c) set(1, c, 1, c - 1);
      lower_rows();
      break;
    case ProjKind::Pi1Tail:
      for (int c = 3; c <= n - 2; ++c) set(1, c, 1, c - 1);
      set(1, n - 1, 1, 1);
      lower_rows();
      break;
    case ProjKind::Pi1:
    case ProjKind::Pi1Cube:
      for (int c = 3; c <= n - 1; ++c) set(1, c, 1, c - 2);
      for (int c = 3; c <= n - 1; ++c) set(3, c, 3, c - 2);
      if (kind == ProjKind::Pi1) {
        for (int c = 3; c <= n - 1; ++c) set(2, c, 2, c - 2);
      } else {
        set(2, 2, 2, 1);
        for (int c = 4; c <= n - 1; ++c) set(2, c, 2, c - 2);
      }
      break;
    case ProjKind::PiBlock:
    case ProjKind::PiBlockInter: {
      const int ell = m + 1;
      for (int c = 2; c <= ell - 2; ++c) set(1, c, 1, c - 1);
      for (int c = ell; c <= n - 1; ++c) set(1, c, 1, c - 2);
      set(2, 1, 2, 1);
      for (int c = 3; c <= ell - 1; ++c) set(2, c, 2, c - 1);
      for (int c = ell + 1; c <= n - 1; ++c) set(2, c, 2, c - 2);
      if (kind == ProjKind::PiBlockInter) {
        set(2, ell, 2, ell - 1);
        t[2][static_cast<std::size_t>(ell + 1)] = kZero;
      }
      for (int c = 3; c <= n - 1; ++c) set(3, c, 3, c - 2);
      break;
    }
  }
  return t;
}

void check_kind(ProjKind kind, int m, int n3) {
  if (n3 < 5) fail(ErrorCode::InvalidParameters, "projection: needs n - k + 3 >= 5");
  if (kind == ProjKind::PiBlock && (m < 2 || m > n3 - 2))
    fail(ErrorCode::InvalidParameters, "projection: Pi_m needs 2 <= m <= n-k+1");
  if (kind == ProjKind::PiBlockInter && (m < 2 || m > n3 - 3))
    fail(ErrorCode::InvalidParameters, "projection: Pi_m^{m+2} needs 2 <= m <= n-k");
}

// Vector in R^{k×(n−k)} from a list of (coefficient, cell) pairs of the Gr(3, n3) table.
IntVec f_vector(const std::vector<std::pair<int, Cell>>& terms, int k, int n) {
  IntVec v(static_cast<std::size_t>(k * (n - k)), Int(0));
  for (const auto& [coef, cell] : terms)
    if (cell != kZero) v[f_index(cell.first, cell.second, k, n)] += coef;
  return v;
}

}  // namespace

std::string label(const ProjectionId& id) {
  switch (id.kind) {
    case ProjKind::Pi0: return "Pi_0";
    case ProjKind::Pi0Sq: return "Pi_0^2";
    case ProjKind::Pi1Tail: return "Pi_1'";
    case ProjKind::Pi1: return "Pi_1";
    case ProjKind::Pi1Cube: return "Pi_1^3";
    case ProjKind::PiBlock: return "Pi_" + std::to_string(id.m);
    case ProjKind::PiBlockInter:
      return "Pi_" + std::to_string(id.m) + "^" + std::to_string(id.m + 2);
  }
  return "?";
}

std::size_t f_index(int i, int j, int k, int n) {
  if (i < 1 || i > k || j < 1 || j > n - k)
    fail(ErrorCode::Internal, "f_index out of range: f_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  return static_cast<std::size_t>((i - 1) * (n - k) + (j - 1));
}

Point apply_map(const LinearMap& map, const Point& p) {
  if (p.size() != map.source_dim) fail(ErrorCode::DimensionMismatch, "apply: dimension mismatch");
  Point out(map.target_dim, Rat(0));
  for (std::size_t i = 0; i < map.target_dim; ++i)
    for (std::size_t j = 0; j < map.source_dim; ++j)
      if (map.matrix[i][j] != 0 && sgn(p[j]) != 0) out[i] += map.matrix[i][j] * p[j];
  return out;
}

Int determinant(const LinearMap& map) {
  if (map.source_dim != map.target_dim) fail(ErrorCode::DimensionMismatch, "determinant: map not square");
  return determinant(map.matrix);
}

bool is_elementary_shear(const LinearMap& map) {
  if (map.source_dim != map.target_dim) return false;
  std::optional<std::size_t> column;
  for (std::size_t i = 0; i < map.target_dim; ++i)
    for (std::size_t j = 0; j < map.source_dim; ++j) {
      const Int& x = map.matrix[i][j];
      if (i == j) {
        if (x != 1) return false;
      } else if (x != 0) {
        if (column && *column != j) return false;
        column = j;
      }
    }
  return determinant(map) == 1;
}

LinearMap projection(ProjKind kind, int k, int n, int m) {
  if (k < 3 || k > n) fail(ErrorCode::InvalidParameters, "projection: needs 3 <= k <= n");
  const int n3 = n - k + 3;
  check_kind(kind, m, n3);
  auto table = gr3_table(kind, m, n3);
  LinearMap map;
  map.source_dim = static_cast<std::size_t>(k * n);
  map.target_dim = static_cast<std::size_t>(k * (n - k));
  map.kind = label({kind, m});
  map.matrix.assign(map.target_dim, IntVec(map.source_dim, Int(0)));
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= n3; ++c) {
      Cell cell = table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (cell == kZero) continue;
      if (cell.second > n3 - 3) {
        if (cell == Cell{3, n3 - 2}) continue;  // dummy f_{3,n−2} = 0
        fail(ErrorCode::Internal, "projection table references a missing f-vector");
      }
      map.matrix[f_index(cell.first, cell.second, k, n)][static_cast<std::size_t>((r - 1) * n + c - 1)] = 1;
    }
  // Rows 4..k: (R_i)_j = f_{i, j−i+1}.
  for (int i = 4; i <= k; ++i)
    for (int j = 1; j <= n; ++j) {
      const int t = j - i + 1;
      if (t >= 1 && t <= n - k)
        map.matrix[f_index(i, t, k, n)][static_cast<std::size_t>((i - 1) * n + j - 1)] = 1;
    }
  return map;
}

LinearMap projection(const ProjectionId& id, int k, int n) { return projection(id.kind, k, n, id.m); }

LinearMap shear(ShearKind kind, int ell, int k, int n) {
  if (k < 3 || k > n) fail(ErrorCode::InvalidParameters, "shear: needs 3 <= k <= n");
  const int n3 = n - k + 3;
  if (n3 < 5) fail(ErrorCode::InvalidParameters, "shear: needs n - k + 3 >= 5");
  Cell b;
  std::vector<std::pair<int, Cell>> image;
  std::string name;
  switch (kind) {
    case ShearKind::Phi1Last:
      b = {1, 1};
      image = {{1, {1, 1}}, {-1, {2, n3 - 3}}};
      name = "phi_(1," + std::to_string(n3 - 1) + ")";
      break;
    case ShearKind::Phi23:
      b = {2, 1};
      image = {{1, {2, 1}}, {1, {1, 1}}};
      name = "phi_(2,3)";
      break;
    case ShearKind::PhiUp:
      if (ell < 3 || ell > n3 - 2) fail(ErrorCode::InvalidParameters, "shear: phi_(l,l+1) needs 3 <= l <= n-k+1");
      b = {2, ell - 1};
      image = {{1, {1, ell - 1}}, {-1, {1, ell - 2}}, {1, {2, ell - 1}}};
      name = "phi_(" + std::to_string(ell) + "," + std::to_string(ell + 1) + ")";
      break;
    case ShearKind::PhiDown: {
      if (ell < 3 || ell > n3 - 2) fail(ErrorCode::InvalidParameters, "shear: phi_(l,l-1) needs 3 <= l <= n-k+1");
      // e_{1,ℓ} is read as f_{1,ℓ−2} before and as that minus the image of
      // e_{2,ℓ−1} plus f_{2,ℓ−1} after; for ℓ = 3 the image of e_{2,2} is 0.
      b = {1, ell - 2};
      Cell e2 = gr3_table(ProjKind::PiBlockInter, ell - 1, n3)[2][static_cast<std::size_t>(ell - 1)];
      image = {{1, b}, {-1, e2}, {1, {2, ell - 1}}};
      name = "phi_(" + std::to_string(ell) + "," + std::to_string(ell - 1) + ")";
      break;
    }
  }
  LinearMap map;
  map.source_dim = map.target_dim = static_cast<std::size_t>(k * (n - k));
  map.kind = name;
  map.matrix = identity_int(map.source_dim);
  IntVec v = f_vector(image, k, n);
  const std::size_t col = f_index(b.first, b.second, k, n);
  for (std::size_t i = 0; i < map.target_dim; ++i) map.matrix[i][col] = v[i];
  return map;
}

LinearMap inverse_shear(const LinearMap& s) {
  LinearMap inv = s;
  inv.kind = s.kind + "^-1";
  // S = I + N with N² = 0 (N supported on one column, zero on its diagonal).
  for (std::size_t i = 0; i < s.target_dim; ++i)
    for (std::size_t j = 0; j < s.source_dim; ++j)
      if (i != j) inv.matrix[i][j] = -s.matrix[i][j];
  return inv;
}

ProjectionId tropical_projection(int ell, int k, int n) {
  (void)k;
  (void)n;
  if (ell == 1) return {ProjKind::Pi0Sq, 0};
  if (ell == 2) return {ProjKind::Pi1Cube, 0};
  return {ProjKind::PiBlockInter, ell - 1};
}

TropicalData tropical_data(int ell, int lambda, int k, int n) {
  if (k < 3 || k > n) fail(ErrorCode::InvalidParameters, "tropical_data: needs 3 <= k <= n");
  const int n3 = n - k + 3;
  if (n3 < 5) fail(ErrorCode::InvalidParameters, "tropical_data: needs n - k + 3 >= 5");
  const bool wrap = lambda > n;
  const int lp = lambda - n;
  bool ok;
  if (ell == 1) ok = !wrap && lambda >= 3 && lambda <= n3 - 2;
  else if (ell == 2) ok = !wrap && lambda >= 4 && lambda <= n3 - 1;
  else ok = ell <= n3 - 2 && (wrap ? (lp >= 1 && lp <= ell - 2) : (lambda >= ell + 2 && lambda <= n3 - 1));
  if (ell < 1 || !ok) fail(ErrorCode::InvalidParameters, "tropical_data: (ell, lambda) outside the chain range");

  // W and F as 3×n3 matrices (row, column, value), then projected.
  std::vector<std::tuple<int, int, int>> wm, fm;
  if (ell == 1) {
    wm = {{1, 1, -1}, {1, lambda, 1}, {2, 1, 1}, {2, lambda, -1}};
    fm.push_back({1, 1, -1});
    for (int c = lambda; c <= n3; ++c) fm.push_back({1, c, -1});
    for (int c = lambda + 1; c <= n3; ++c) fm.push_back({2, c, 1});
  } else if (!wrap) {
    wm = {{1, ell, -1}, {1, lambda, 1}, {2, ell, 1}, {2, lambda, -1}};
    for (int c = ell + 1; c <= lambda - 1; ++c) fm.push_back({1, c, 1});
    for (int c = ell; c <= lambda; ++c) fm.push_back({2, c, -1});
  } else if (lp == 1) {
    wm = {{1, 1, 1}, {2, 1, -1}, {1, ell, -1}, {2, ell, 1}};
    fm.push_back({2, 1, -1});
    for (int c = ell; c <= n3; ++c) fm.push_back({2, c, -1});
    for (int c = ell + 1; c <= n3; ++c) fm.push_back({1, c, 1});
  } else {
    wm = {{1, lp, 1}, {2, lp, -1}, {1, ell, -1}, {2, ell, 1}};
    for (int c = lp; c <= ell; ++c) fm.push_back({1, c, -1});
    for (int c = lp + 1; c <= ell - 1; ++c) fm.push_back({2, c, 1});
  }
  ProjectionId pid = tropical_projection(ell, k, n);
  auto table = gr3_table(pid.kind, pid.m, n3);
  auto project = [&](const std::vector<std::tuple<int, int, int>>& entries) {
    std::vector<std::pair<int, Cell>> terms;
    for (auto [r, c, v] : entries) {
      Cell cell = table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (cell == Cell{3, n3 - 2}) continue;
      terms.push_back({v, cell});
    }
    return f_vector(terms, k, n);
  };
  TropicalData td{project(wm), project(fm)};
  if (td.w != primitive(td.w)) fail(ErrorCode::Internal, "tropical_data: w is not primitive");
  Int ip = 0;
  for (std::size_t i = 0; i < td.w.size(); ++i) ip += td.w[i] * td.f_tilde[i];
  if (ip != 0) fail(ErrorCode::Internal, "tropical_data: <w, f> != 0");
  return td;
}

Point apply_tropical(const TropicalData& td, const Point& u) {
  if (u.size() != td.w.size()) fail(ErrorCode::DimensionMismatch, "apply_tropical: dimension mismatch");
  Rat ip = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (td.f_tilde[i] != 0) ip += td.f_tilde[i] * u[i];
  if (sgn(ip) >= 0) return u;
  Point out = u;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (td.w[i] != 0) out[i] -= ip * td.w[i];
  return out;
}

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Relabel: return "relabel";
    case StepKind::Shear: return "shear";
    case StepKind::Tropical: return "tropical";
  }
  return "?";
}

}  // namespace mfmut
