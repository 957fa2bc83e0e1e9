#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "nilorb/matrix.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/report.hpp"

namespace nilorb {

/// Matrix unit e_{i,j;k,l}: maps the box (k,l) to the box (i,j).
struct MatLabel {
  int i = 0, j = 0, k = 0, l = 0;
  bool operator<(const MatLabel& o) const {
    return std::tie(i, j, k, l) < std::tie(o.i, o.j, o.k, o.l);
  }
  bool operator==(const MatLabel& o) const {
    return i == o.i && j == o.j && k == o.k && l == o.l;
  }
  std::string name() const;
};

/// Centraliser basis label; the superscript is stored doubled so that mixed
/// parity rows (half-integral shifts) stay integral.
struct CentraliserLabel {
  int i = 0, k = 0, twice_r = 0;
  std::string name() const;
};

/// Sparse vector in the model basis, sorted by variable id.
using LinComb = std::vector<std::pair<int, Rat>>;

/// A finite dimensional graded Lie algebra presented over a labelled basis:
/// the gl_N pyramid of a partition, or its tau-fixed classical subalgebra.
/// Immutable after build apart from the explicit test perturbation hook.
class LieModel {
public:
  enum class Kind { gl, tau_fixed };

  static LieModel build(const EpsPartition& lambda);           // full pyramid
  static LieModel build_tau_fixed(const LieModel& gl_model);   // g_0, needs trivial involution

  int id() const { return id_; }
  Kind kind() const { return kind_; }
  const EpsPartition& lambda() const { return lambda_; }
  int N() const { return N_; }
  int dim() const { return dim_; }

  const std::vector<MatLabel>& labels() const { return labels_; }
  int degree(int var) const { return degrees_[var]; }
  const Rat& chi(int var) const { return chi_[var]; }
  const RatMat& matrix(int var) const { return mats_[var]; }
  std::string var_name(int var) const;

  /// Cached bracket of the ordered pair (min(a,b), max(a,b)); callers supply
  /// the antisymmetry sign when a > b.
  const LinComb& bracket(int a, int b) const;

  /// Expands a matrix known to lie in the span of the basis; throws if not.
  LinComb expand(const RatMat& m) const;

  // gl-model extras -------------------------------------------------------
  int var_of(const MatLabel& lab) const;
  const RatMat& e_matrix() const { return e_; }
  const RatMat& h_matrix() const { return h_; }
  const RatMat& f_matrix() const { return f_; }
  const RatMat& J_matrix() const { return J_; }

  /// tau on a single basis element of the gl model: image variable and sign.
  std::pair<int, Rat> tau_of_var(int var) const;
  RatMat tau(const RatMat& x) const;

  /// Dirac coordinate of a gl variable: the g_0 component expressed in the
  /// tau-fixed model's variables (empty when the component vanishes).
  const LinComb& dirac_coordinate(int gl_var) const;
  /// The tau-fixed companion model (gl models with trivial involution only).
  const LieModel& tau_fixed() const;
  bool has_tau_fixed() const { return sub_ != nullptr; }

  /// Centraliser basis label range and expansions.
  std::vector<CentraliserLabel> centraliser_labels() const;
  /// c_{i,k}^{(r)} as a combination of gl variables; empty when out of range.
  LinComb centraliser_expansion(int i, int k, int r) const;
  int shift_entry(int i, int k) const;  // |lambda_i - lambda_k| / 2

  /// Kernel of ad(e) on the tau-fixed subspace; works for any involution.
  int g0_kernel_dimension() const;
  int g0_dimension() const;

  /// Flips the sign of one stored structure constant.  Only for fault
  /// injection in tests; everything downstream reads the table.
  void perturb_bracket_for_testing(int a, int b);

private:
  LieModel() = default;
  void build_common();

  int id_ = 0;
  Kind kind_ = Kind::gl;
  EpsPartition lambda_ = EpsPartition::validate({1}, 1);
  int N_ = 0, dim_ = 0;
  std::vector<MatLabel> labels_;
  std::map<MatLabel, int> var_index_;
  std::vector<int> degrees_;
  std::vector<Rat> chi_;
  std::vector<RatMat> mats_;
  std::map<std::pair<int, int>, LinComb> table_;  // a < b, nonzero brackets
  static const LinComb empty_;

  // gl only
  RatMat e_, h_, f_, J_;
  std::vector<int> row_sign_;
  std::vector<std::pair<int, Rat>> tau_map_;  // var -> (image var, sign)
  std::shared_ptr<LieModel> sub_;
  std::vector<LinComb> dirac_coord_;

  // box coordinates
  std::vector<int> box_offset_;  // row -> first basis index of C^N
  int box_index(int i, int j) const { return box_offset_[i - 1] + (j - 1); }
  RatMat unit_matrix(const MatLabel& lab) const;
};

/// Sanity sweep over one model: form, involution, sl2 triple, grading,
/// centraliser table, dimensions.  Report-based; nothing throws.
std::vector<CheckReport> verify_model(const LieModel& model);

} // namespace nilorb
