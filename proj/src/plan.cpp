#include <map>
#include <set>

#include "mfmut/error.hpp"
#include "mfmut/linalg.hpp"
#include "mfmut/mutation.hpp"

namespace mfmut {
namespace {

std::string field_label(int ell, int lambda = 0) {
  std::string s = "B_" + std::to_string(ell);
  if (lambda) s += "^" + std::to_string(lambda);
  return s;
}

class PlanBuilder {
 public:
  PlanBuilder(int k, int n) : k_(k), n_(n), n3_(n - k + 3) {}

  std::vector<MutationStep> forward(int from, int to) {
    proj_ = start_projection(from, k_, n_);
    for (int ell = from + 1; ell <= to; ++ell) theorem(ell);
    return std::move(steps_);
  }

 private:
  int lam(int lam3) const { return lam3 < n3_ ? lam3 : n_ + (lam3 - n3_); }

  MutationStep base(StepKind kind, std::string label, ProjectionId target, MatchingField field,
                    std::string field_name) {
    MutationStep s;
    s.kind = kind;
    s.label = std::move(label);
    s.source_projection = proj_;
    s.target_projection = target;
    s.expected_target = std::move(field);
    s.expected_label = std::move(field_name);
    proj_ = target;
    return s;
  }

  void relabel(ProjectionId target, MatchingField f, std::string name) {
    std::string lbl = "relabel " + label(proj_) + " -> " + label(target);
    steps_.push_back(base(StepKind::Relabel, lbl, target, std::move(f), std::move(name)));
  }

  void shear_step(ShearKind kind, int ell, ProjectionId target, MatchingField f, std::string name) {
    LinearMap m = shear(kind, ell, k_, n_);
    MutationStep s = base(StepKind::Shear, m.kind, target, std::move(f), std::move(name));
    s.map = std::move(m);
    steps_.push_back(std::move(s));
  }

  void tropical(int ell, int lam3) {
    const int lk = lam(lam3);
    MutationStep s = base(StepKind::Tropical,
                          "phi_(" + std::to_string(ell) + "," + std::to_string(lk) + ")", proj_,
                          intermediate(k_, n_, ell - 1, lk), field_label(ell - 1, lk));
    s.tropical = tropical_data(ell, lk, k_, n_);
    s.ell = ell;
    s.lambda = lk;
    steps_.push_back(std::move(s));
  }

  void theorem(int ell) {
    if (ell == 1) {
      relabel({ProjKind::Pi0Sq, 0}, intermediate(k_, n_, 0, 2), field_label(0, 2));
      for (int l = 3; l <= n3_ - 2; ++l) tropical(1, l);
      shear_step(ShearKind::Phi1Last, 1, {ProjKind::Pi1Tail, 0}, block_diagonal(k_, n_, 1), field_label(1));
    } else if (ell == 2) {
      if (proj_.kind == ProjKind::Pi1Tail)
        relabel({ProjKind::Pi1, 0}, block_diagonal(k_, n_, 1), field_label(1));
      shear_step(ShearKind::Phi23, 2, {ProjKind::Pi1Cube, 0}, intermediate(k_, n_, 1, 3), field_label(1, 3));
      for (int l = 4; l <= n3_ - 1; ++l) tropical(2, l);
      relabel({ProjKind::PiBlock, 2}, block_diagonal(k_, n_, 2), field_label(2));
    } else {
      shear_step(ShearKind::PhiUp, ell, {ProjKind::PiBlockInter, ell - 1},
                 intermediate(k_, n_, ell - 1, ell + 1), field_label(ell - 1, ell + 1));
      for (int l = ell + 2; l <= n3_ - 1; ++l) tropical(ell, l);
      for (int lp = 1; lp <= ell - 2; ++lp) tropical(ell, n3_ + lp);
      shear_step(ShearKind::PhiDown, ell, {ProjKind::PiBlock, ell}, block_diagonal(k_, n_, ell),
                 field_label(ell));
    }
  }

  int k_, n_, n3_;
  ProjectionId proj_;
  std::vector<MutationStep> steps_;
};

std::vector<Point> project_field(const MatchingField& f, const LinearMap& p) {
  std::vector<Point> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(apply_map(p, vertex_of(f, i)));
  return out;
}

std::string show(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].get_str();
  }
  return s + ")";
}

std::string show(const Tableau& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.column.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.column[i]);
  }
  return s + ")";
}

int classify(const Rat& ip) {
  if (ip == -1) return -1;
  if (ip == 0) return 0;
  if (ip == 1) return 1;
  return 2;  // out of range
}

}  // namespace

ProjectionId start_projection(int ell, int k, int n) {
  (void)k;
  (void)n;
  if (ell == 0) return {ProjKind::Pi0, 0};
  if (ell == 1) return {ProjKind::Pi1, 0};
  return {ProjKind::PiBlock, ell};
}

std::vector<MutationStep> plan(int k, int n, int ell_from, int ell_to) {
  if (k < 3 || k > n || n - k + 3 < 5)
    fail(ErrorCode::InvalidParameters, "plan: needs k >= 3 and n - k >= 2");
  const int hi = n - k + 1;
  if (ell_from < 0 || ell_to < 0 || ell_from > hi || ell_to > hi)
    fail(ErrorCode::InvalidParameters, "plan: ell_from and ell_to must lie in [0, n-k+1]");
  if (ell_from <= ell_to) return PlanBuilder(k, n).forward(ell_from, ell_to);

  std::vector<MutationStep> fwd = PlanBuilder(k, n).forward(ell_to, ell_from);
  std::vector<MutationStep> out;
  for (std::size_t idx = fwd.size(); idx-- > 0;) {
    const MutationStep& f = fwd[idx];
    MutationStep s = f;
    s.reversed = true;
    s.source_projection = f.target_projection;
    s.target_projection = f.source_projection;
    if (idx > 0) {
      s.expected_target = fwd[idx - 1].expected_target;
      s.expected_label = fwd[idx - 1].expected_label;
    } else {
      s.expected_target = block_diagonal(k, n, ell_to);
      s.expected_label = field_label(ell_to);
    }
    switch (f.kind) {
      case StepKind::Relabel:
        s.label = "relabel " + label(s.source_projection) + " -> " + label(s.target_projection);
        break;
      case StepKind::Shear:
        s.map = inverse_shear(f.map);
        s.label = s.map.kind;
        break;
      case StepKind::Tropical:
        for (auto& x : s.tropical.w) x = -x;
        s.label = f.label + "^-1";
        break;
    }
    out.push_back(std::move(s));
  }
  return out;
}

int expected_class(const MutationStep& step, int i, int j) {
  const int ell = step.ell;
  const int n = step.expected_target.n();
  const int lam = step.lambda < n ? step.lambda : step.lambda - n;
  if (i == ell && j == lam) return -1;
  const bool in_a = (ell < i && i < lam && lam < j) || (j < ell && ell < i && i < lam) ||
                    (i < lam && lam < j && j < ell) || (lam < j && j < ell && ell < i);
  return in_a ? 1 : 0;
}

std::vector<StepReport> execute_and_verify(const std::vector<MutationStep>& steps,
                                           const MatchingField& start, const VerifyOptions& options) {
  std::vector<StepReport> reports;
  if (steps.empty()) return reports;
  const int k = start.k(), n = start.n();
  MatchingField cur = start;
  std::vector<Point> q = project_field(cur, projection(steps[0].source_projection, k, n));
  auto poly = std::make_shared<VPolytope>(q);
  std::string start_problem;
  if (poly->dimension() != poly->ambient_dim())
    start_problem = "start: projected polytope is not full-dimensional";
  else if (poly->normalized_volume() != matching_field_polytope(start).normalized_volume())
    start_problem = "start: projection changes the normalized volume";

  for (const MutationStep& step : steps) {
    StepReport r;
    r.label = step.label;
    r.kind = step.kind;
    if (!start_problem.empty()) {
      r.failures.push_back(start_problem);
      start_problem.clear();
    }
    if (step.expected_target.k() != k || step.expected_target.n() != n)
      fail(ErrorCode::Precondition, "execute_and_verify: plan and start field disagree on (k, n)");
    const LinearMap target_proj = projection(step.target_projection, k, n);
    const std::vector<Point> target = project_field(step.expected_target, target_proj);
    const std::set<Point> target_set(target.begin(), target.end());
    r.volume_before = poly->dimension() == poly->ambient_dim() ? poly->normalized_volume() : Int(0);
    r.vertex_count_before = poly->vertices().size();

    std::vector<Point> image;
    switch (step.kind) {
      case StepKind::Relabel: {
        if (std::set<Point>(q.begin(), q.end()) == target_set) {
          image = q;
        } else if (step.expected_target == cur) {
          // Same field, new coordinates: solve for the linear change of frame.
          const std::size_t d = q[0].size();
          IntMatrix t(d);
          bool ok = rank(q, d) == d;
          for (std::size_t row = 0; ok && row < d; ++row) {
            RatVec b(q.size());
            for (std::size_t i = 0; i < q.size(); ++i) b[i] = target[i][row];
            auto sol = solve(q, b, d);
            if (!sol || !is_integral(*sol)) ok = false;
            else t[row] = to_int(*sol);
          }
          if (ok) {
            r.map_determinant = determinant(t);
            if (abs(r.map_determinant) != 1) r.failures.push_back("relabel: change of frame is not unimodular");
            image = target;
          } else {
            r.failures.push_back("relabel: no integral change of frame matches the vertices");
            image = q;
          }
        } else {
          r.failures.push_back("relabel: projected vertex sets differ");
          image = q;
        }
        break;
      }
      case StepKind::Shear: {
        r.map_determinant = determinant(step.map);
        if (!is_elementary_shear(step.map)) r.failures.push_back("shear: map is not an elementary shear");
        for (const auto& p : q) image.push_back(apply_map(step.map, p));
        break;
      }
      case StepKind::Tropical: {
        const TropicalData& td = step.tropical;
        RatVec f = to_rat(td.f_tilde);
        std::vector<int> cls(q.size()), want(q.size(), 0);
        if (!step.reversed) {
          for (std::size_t i = 0; i < q.size(); ++i) {
            Tableau t = tableau_of(cur, i);
            want[i] = expected_class(step, t.column[0], t.column[1]);
          }
        } else {
          // Classes are read off the forward step: its source is our target.
          TropicalData fwd{td.w, td.f_tilde};
          for (auto& x : fwd.w) x = -x;
          std::map<Point, int> by_image;
          for (std::size_t i = 0; i < target.size(); ++i) {
            Tableau t = tableau_of(step.expected_target, i);
            by_image[apply_tropical(fwd, target[i])] = expected_class(step, t.column[0], t.column[1]);
          }
          for (std::size_t i = 0; i < q.size(); ++i) {
            auto it = by_image.find(q[i]);
            want[i] = it == by_image.end() ? 2 : it->second;
          }
        }
        std::vector<Point> plus, minus_image;
        std::vector<std::size_t> neg, pos;
        for (std::size_t i = 0; i < q.size(); ++i) {
          Rat ip = dot(f, q[i]);
          cls[i] = classify(ip);
          if (cls[i] == 2) {
            r.inner_products_in_range = false;
            r.failures.push_back("tropical: <f, u> = " + ip.get_str() + " outside {-1,0,1} at " +
                                 show(tableau_of(cur, i)));
          } else if (cls[i] == -1) {
            ++r.inner_product_classes.minus;
            neg.push_back(i);
          } else if (cls[i] == 1) {
            ++r.inner_product_classes.plus;
            pos.push_back(i);
          } else {
            ++r.inner_product_classes.zero;
          }
          if (cls[i] != want[i]) {
            r.classes_match = false;
            r.failures.push_back("tropical: class " + std::to_string(cls[i]) + " differs from expected " +
                                 std::to_string(want[i]) + " at " + show(tableau_of(cur, i)));
          }
          image.push_back(apply_tropical(td, q[i]));
          if (sgn(ip) >= 0) plus.push_back(q[i]);
          if (sgn(ip) <= 0) minus_image.push_back(image.back());
        }
        for (auto a : neg)
          for (auto b : pos) {
            ++r.crossing_pairs_checked;
            if (adjacent(q[a], q[b], *poly)) {
              ++r.crossing_edges;
              r.failures.push_back("tropical: edge " + show(tableau_of(cur, a)) + " -- " +
                                   show(tableau_of(cur, b)) + " crosses the hyperplane");
            }
          }
        r.volume_plus = full_dim_volume(plus);
        r.volume_minus = full_dim_volume(minus_image);
        break;
      }
    }

    const std::set<Point> image_set(image.begin(), image.end());
    r.vertex_set_match = image_set == target_set;
    if (!r.vertex_set_match) {
      r.failures.push_back("image vertex set differs from " + step.expected_label);
      for (const auto& p : image)
        if (!target_set.count(p)) {
          r.failures.push_back("image vertex " + show(p) + " is not a vertex of " + step.expected_label);
          break;
        }
    }
    auto next = std::make_shared<VPolytope>(image);
    if (image_set == std::set<Point>(q.begin(), q.end())) next = poly;
    r.volume_after = next->dimension() == next->ambient_dim() ? next->normalized_volume() : Int(0);
    r.vertex_count_after = next->vertices().size();
    if (r.vertex_count_after != r.vertex_count_before)
      r.failures.push_back("vertex count changed from " + std::to_string(r.vertex_count_before) + " to " +
                           std::to_string(r.vertex_count_after));
    if (step.kind == StepKind::Tropical)
      r.convexity_certified = r.volume_after == r.volume_plus + r.volume_minus &&
                              r.volume_after == r.volume_before;
    else
      r.convexity_certified = r.volume_after == r.volume_before && abs(r.map_determinant) == 1;
    if (!r.convexity_certified)
      r.failures.push_back("convexity certificate failed: volumes " + r.volume_before.get_str() + " -> " +
                           r.volume_after.get_str() +
                           (step.kind == StepKind::Tropical
                                ? " (split " + r.volume_plus.get_str() + " + " + r.volume_minus.get_str() + ")"
                                : std::string()));
    if (options.ehrhart && next->dimension() <= options.ehrhart_max_dim) {
      r.lattice_points_1 = lattice_points(*next).size();
      r.lattice_points_2 = lattice_points(dilate(*next, 2)).size();
    }
    if (options.throw_on_failure && !r.passed())
      fail(ErrorCode::VerificationFailed, step.label + ": " + r.failures.front());
    reports.push_back(std::move(r));

    // Continue from the expected field in its own vertex order.
    cur = step.expected_target;
    q = target;
    poly = reports.back().vertex_set_match ? next : std::make_shared<VPolytope>(target);
  }
  return reports;
}

}  // namespace mfmut
