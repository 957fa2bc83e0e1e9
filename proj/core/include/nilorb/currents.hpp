#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "nilorb/model.hpp"
#include "nilorb/report.hpp"

namespace nilorb {

/// n x n shift matrix: nonnegative, zero diagonal, additive along monotone
/// index paths.
class ShiftMatrix {
public:
  explicit ShiftMatrix(std::vector<std::vector<int>> entries);
  static ShiftMatrix symmetric_for(const EpsPartition& lambda);  // |l_i - l_j| / 2

  int n() const { return n_; }
  int at(int i, int j) const { return s_[i - 1][j - 1]; }  // 1-based
  bool symmetric() const;
  bool even() const { return true; }  // integer entries by representation

private:
  int n_ = 0;
  std::vector<std::vector<int>> s_;
};

/// Label e_{i,j} t^r with r >= s_{i,j}.
struct CurrentLabel {
  int i = 0, j = 0, r = 0;
  bool operator<(const CurrentLabel& o) const {
    return std::tie(i, j, r) < std::tie(o.i, o.j, o.r);
  }
  bool operator==(const CurrentLabel& o) const { return i == o.i && j == o.j && r == o.r; }
  std::string name() const;
};

/// Sparse rational element of the shifted current algebra, truncated at
/// degree R_max.  Brackets that would escape the truncation throw rather
/// than drop terms.
class CurrentElement {
public:
  CurrentElement(const ShiftMatrix* sigma, int r_max) : sigma_(sigma), r_max_(r_max) {}
  static CurrentElement basis(const ShiftMatrix& sigma, int r_max, int i, int j, int r);

  const std::map<CurrentLabel, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int r_max() const { return r_max_; }
  const ShiftMatrix* sigma() const { return sigma_; }

  void add(const CurrentLabel& lab, const Rat& c);
  CurrentElement operator+(const CurrentElement& o) const;
  CurrentElement operator-(const CurrentElement& o) const;
  CurrentElement scaled(const Rat& c) const;
  bool operator==(const CurrentElement& o) const { return terms_ == o.terms_; }
  std::string to_string() const;

private:
  const ShiftMatrix* sigma_;
  int r_max_;
  std::map<CurrentLabel, Rat> terms_;
};

CurrentElement current_bracket(const CurrentElement& a, const CurrentElement& b);

/// tau: e_{i,j}t^r -> (-1)^{r-1+s_{i,j}} e_{j,i}t^r (even symmetric sigma).
CurrentElement tau_current(const CurrentElement& x);

/// Presentation sweep: untwisted Chevalley-Serre relations, twisted
/// relations, and generation of all labels by the triangular generators.
std::vector<CheckReport> verify_current_presentations(const ShiftMatrix& sigma, int r_max);
/// Test hook: same sweep with the tau sign deliberately flipped.
std::vector<CheckReport> verify_current_presentations_faulty_tau(const ShiftMatrix& sigma,
                                                                 int r_max);

/// e_{i,j}t^r -> c_{i,j}^{(r)}, zero past the truncation; the shift matrix of
/// the element must match the model's.
LinComb current_to_centraliser(const CurrentElement& x, const LieModel& model);

/// Homomorphism + equivariance + kernel sweep against a concrete pyramid.
std::vector<CheckReport> verify_current_centraliser_map(const EpsPartition& lambda, int r_max);

} // namespace nilorb
