#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nilorb/rat.hpp"

namespace nilorb {

/// Dense matrix over exact rationals; sized for models with N <= 16.
class RatMat {
public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat operator*(const RatMat& o) const;
  RatMat scaled(const Rat& c) const;
  RatMat transpose() const;

  Rat trace() const;
  int rank() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

inline RatMat commutator(const RatMat& x, const RatMat& y) { return x * y - y * x; }

/// Solves A x = b exactly; empty when inconsistent.  When the kernel is
/// nontrivial an arbitrary solution is returned.
std::optional<std::vector<Rat>> solve_linear(RatMat a, std::vector<Rat> b);

/// Row-reduces the rows in place (used for span/kernel comparisons); returns
/// the rank.  Rows are vectors of equal length.
int row_reduce(std::vector<std::vector<Rat>>& rows);

/// True when v lies in the row span of the reduced rows.
bool in_row_span(std::vector<std::vector<Rat>> reduced, const std::vector<Rat>& v);

} // namespace nilorb
