#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nilorb/bk.hpp"
#include "nilorb/pbw.hpp"
#include "nilorb/poly.hpp"
#include "nilorb/report.hpp"

namespace nilorb {

/// Shared workspace for the relation verifiers: the pyramid model, the
/// invariant cache and the reduced generator families, all memoised.
class WContext {
public:
  explicit WContext(const EpsPartition& lambda);

  const LieModel& gl() const { return *gl_; }
  const LieModel& g0() const { return gl_->tau_fixed(); }
  const EpsPartition& lambda() const { return gl_->lambda(); }
  int shift(int i, int j) const;  // s_{i,j}
  BKCache& bk() { return bk_; }

  // triangular generators of the reduced gl algebra
  const SparsePoly& d(int i, int r);
  const SparsePoly& e(int i, int r);
  const SparsePoly& f(int i, int r);
  const SparsePoly& dtilde(int i, int r);
  SparsePoly ehat(int i, int r);
  // chained generators for distant row pairs, built by bracket recursion
  SlicePoly e_long(int i, int j, int r);
  SlicePoly f_long(int i, int j, int r);

  // their images under the projection to the tau-fixed side
  const SlicePoly& theta(int i, int r);
  const SlicePoly& eta(int i, int two_r);
  const SlicePoly& eta_tilde(int i, int two_r);
  SlicePoly theta_long(int i, int j, int r);

  SparsePoly one_gl() const { return SparsePoly::constant(Rat(1), gl_->id()); }
  SparsePoly one_g0() const { return SparsePoly::constant(Rat(1), g0().id()); }

  /// Free generator family of the reduced gl algebra, one per centraliser
  /// label, Kazhdan degree capped.
  std::vector<PBWBasisElement> pbw_family_gl(long max_kazhdan);
  /// Same on the tau-fixed side: projected symmetrised generators.
  std::vector<PBWBasisElement> pbw_family_g0(long max_kazhdan);

private:
  std::shared_ptr<LieModel> gl_;
  BKCache bk_;
  std::map<std::pair<int, int>, SparsePoly> d_, e_, f_, dt_;
  std::map<std::pair<int, int>, SlicePoly> theta_, eta_, eta_tilde_;
};

long default_budget(const EpsPartition& lambda);

/// Every in-range invariant is fixed by the negative unipotent directions.
CheckReport verify_bk_invariance(WContext& ctx);

/// The sign law for tau applied to the invariants, all i <= k and splitting
/// levels; flip_sign injects a deliberate fault for testing.
CheckReport verify_tau_equivariance(WContext& ctx, bool flip_sign = false);

/// Triangular relation sweep in the reduced gl algebra, every instance with
/// total Kazhdan degree within budget, plus the vanishing of the first
/// diagonal family past the top part.
std::vector<CheckReport> verify_yangian_relations(WContext& ctx, long budget);

/// Relation sweep for the projected generators in the tau-fixed algebra,
/// plus the kernel families (the extra one is tested under both exponent
/// readings and the report records which vanishes).
std::vector<CheckReport> verify_dirac_relations(WContext& ctx, long budget);

/// Quadratic structure of the cotangent fibre at the origin: the exact
/// bracket-ideal identity, the product relations from the degree-swap
/// family, and the comparison with the combinatorial component presentation.
std::vector<CheckReport> verify_tangent_cone(WContext& ctx);

} // namespace nilorb
