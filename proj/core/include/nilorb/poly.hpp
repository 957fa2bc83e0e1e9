#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilorb/model.hpp"
#include "nilorb/rat.hpp"

namespace nilorb {

/// Commutative monomial: variable ids with repetition, kept sorted.
using Monomial = std::vector<int>;

/// Exact sparse polynomial in the basis variables of one LieModel.  Terms map
/// canonical monomials to nonzero rational coefficients, so equality is
/// structural.
class SparsePoly {
public:
  SparsePoly() = default;
  explicit SparsePoly(int model_id) : model_id_(model_id) {}
  static SparsePoly constant(const Rat& c, int model_id = -1);
  static SparsePoly variable(int var, const LieModel& model);
  static SparsePoly from_comb(const LinComb& lc, const LieModel& model);

  int model_id() const { return model_id_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  void add_term(const Monomial& sorted_mono, const Rat& coeff);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scaled(const Rat& c) const;
  SparsePoly operator-() const { return scaled(Rat(-1)); }
  bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

  /// Total Kazhdan degree of a monomial: sum over factors of dynkin + 2.
  static long kazhdan_degree(const Monomial& m, const LieModel& model);
  /// True when every term has the same Kazhdan degree (constants count for any).
  bool kazhdan_homogeneous(const LieModel& model) const;
  /// Splits into Kazhdan-homogeneous components keyed by degree.
  std::map<long, SparsePoly> kazhdan_components(const LieModel& model) const;

  /// Canonical text form "c * v * v + ...".
  std::string to_string(const LieModel& model) const;

private:
  int model_id_ = -1;
  std::map<Monomial, Rat> terms_;
  friend SparsePoly poisson_bracket(const SparsePoly&, const SparsePoly&, const LieModel&);
};

/// Polynomial supported away from the substituted variables (the image of
/// substitute_chi).  Same representation; the alias documents intent.
using SlicePoly = SparsePoly;

/// Leibniz extension of the model bracket to polynomials.
SparsePoly poisson_bracket(const SparsePoly& p, const SparsePoly& q, const LieModel& model);

/// Replaces every variable of Dynkin degree <= -2 by its chi value.
SlicePoly substitute_chi(const SparsePoly& p, const LieModel& model);

/// Infinitesimal invariance under the negative part: substitute_chi({v, p})
/// vanishes for every basis element v of degree < 0.
bool is_slice_invariant(const SparsePoly& p, const LieModel& model);
/// Same, but reports the first offending variable (-1 when invariant).
int first_non_invariant_direction(const SparsePoly& p, const LieModel& model);

/// Bracket on the reduced algebra, computed through invariant witnesses.
SlicePoly slice_bracket(const SlicePoly& a, const SlicePoly& b, const LieModel& model,
                        const SparsePoly& witness_a, const SparsePoly& witness_b);
/// Convenience form for witnesses that are their own reductions.
SlicePoly slice_bracket(const SparsePoly& a, const SparsePoly& b, const LieModel& model);

/// Projection to the tau-fixed subalgebra: kills the antisymmetric
/// eigenvariables and rewrites the rest over the companion model, then
/// substitutes chi there.  Input must be (the reduction of) a tau-invariant
/// polynomial.
SlicePoly dirac_project(const SparsePoly& p, const LieModel& gl_model);

/// Applies tau variable-by-variable (gl models).
SparsePoly apply_tau(const SparsePoly& p, const LieModel& model);
bool is_tau_invariant(const SparsePoly& p, const LieModel& model);

} // namespace nilorb
