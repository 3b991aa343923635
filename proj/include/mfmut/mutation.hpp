#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mfmut/combinat.hpp"
#include "mfmut/polytope.hpp"
#include "mfmut/rational.hpp"

namespace mfmut {

/// Projections R^{k×n} → R^{k×(n−k)} used along the chains. Pi1Tail is the Π₁
/// reached at the end of the B₀→B₁ chain, Pi1 the one the B₁→B₂ chain starts
/// from. PiBlock(m) is Π_m for m ≥ 2 and PiBlockInter(m) is Π_m^{m+2}.
enum class ProjKind { Pi0, Pi0Sq, Pi1Tail, Pi1, Pi1Cube, PiBlock, PiBlockInter };

struct ProjectionId {
  ProjKind kind = ProjKind::Pi0;
  int m = 0;
  friend bool operator==(const ProjectionId&, const ProjectionId&) = default;
};

std::string label(const ProjectionId& id);

struct LinearMap {
  IntMatrix matrix;  // target_dim rows, source_dim columns
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::string kind;
};

Point apply_map(const LinearMap& map, const Point& p);
Int determinant(const LinearMap& map);
/// Unit diagonal, off-diagonal entries confined to a single column, det 1.
bool is_elementary_shear(const LinearMap& map);

/// Index of f_{i,j} in R^{k×(n−k)}, 1-based (i, j).
std::size_t f_index(int i, int j, int k, int n);

LinearMap projection(ProjKind kind, int k, int n, int m = 0);
LinearMap projection(const ProjectionId& id, int k, int n);

enum class ShearKind {
  Phi1Last,  // φ_(1,n−1)
  Phi23,     // φ_(2,3)
  PhiUp,     // φ_(ℓ,ℓ+1), ℓ ≥ 3
  PhiDown,   // φ_(ℓ,ℓ−1), ℓ ≥ 3
};

LinearMap shear(ShearKind kind, int ell, int k, int n);
LinearMap inverse_shear(const LinearMap& s);

struct TropicalData {
  IntVec w;
  IntVec f_tilde;
};

/// λ uses the intermediate-field numbering: λ < n, or λ = n + λ′.
TropicalData tropical_data(int ell, int lambda, int k, int n);
Point apply_tropical(const TropicalData& td, const Point& u);
/// Projection in whose coordinates tropical_data(ℓ, ·) is expressed.
ProjectionId tropical_projection(int ell, int k, int n);

enum class StepKind { Relabel, Shear, Tropical };
const char* to_string(StepKind kind);

struct MutationStep {
  StepKind kind = StepKind::Relabel;
  std::string label;
  ProjectionId source_projection;
  ProjectionId target_projection;
  LinearMap map;           // Shear
  TropicalData tropical;   // Tropical
  int ell = 0;             // Tropical: the (ℓ, λ) pair of the forward step
  int lambda = 0;
  bool reversed = false;
  MatchingField expected_target;
  std::string expected_label;
};

/// Steps taking P_{B_from} to P_{B_to} (k ≥ 3 via the Gr(3, n−k+3) pattern).
std::vector<MutationStep> plan(int k, int n, int ell_from, int ell_to);

/// First projection a plan starting at B_ℓ works in.
ProjectionId start_projection(int ell, int k, int n);

struct ClassTally {
  std::size_t minus = 0, zero = 0, plus = 0;
};

struct StepReport {
  std::string label;
  StepKind kind = StepKind::Relabel;
  bool vertex_set_match = false;
  Int volume_before = 0;
  Int volume_after = 0;
  Int volume_plus = 0;   // tropical: hull of fixed side
  Int volume_minus = 0;  // tropical: hull of sheared side
  bool convexity_certified = false;
  std::size_t vertex_count_before = 0;
  std::size_t vertex_count_after = 0;
  // Tropical only.
  ClassTally inner_product_classes;
  bool inner_products_in_range = true;
  bool classes_match = true;
  std::size_t crossing_pairs_checked = 0;
  std::size_t crossing_edges = 0;
  // Shear and relabel only.
  Int map_determinant = 1;
  std::optional<std::size_t> lattice_points_1;
  std::optional<std::size_t> lattice_points_2;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  bool throw_on_failure = true;
  /// Record lattice-point counts at dilations 1 and 2 (exploratory only).
  bool ehrhart = false;
  std::size_t ehrhart_max_dim = 10;
};

std::vector<StepReport> execute_and_verify(const std::vector<MutationStep>& steps,
                                           const MatchingField& start,
                                           const VerifyOptions& options = {});

/// Lemma-level class of a source vertex tuple (i, j, …) for a tropical step.
int expected_class(const MutationStep& step, int i, int j);

}  // namespace mfmut
