#include "nilorb/matrix.hpp"

namespace nilorb {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::operator+(const RatMat& o) const {
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

RatMat RatMat::scaled(const Rat& c) const {
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rat RatMat::trace() const {
  Rat t = 0;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

int RatMat::rank() const {
  std::vector<std::vector<Rat>> rows;
  rows.reserve(rows_);
  for (int i = 0; i < rows_; ++i) {
    std::vector<Rat> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    rows.push_back(std::move(r));
  }
  return row_reduce(rows);
}

int row_reduce(std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    Rat inv = 1 / rows[pivot_row][col];
    for (std::size_t j = col; j < cols; ++j) rows[pivot_row][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (std::size_t j = col; j < cols; ++j) rows[r][j] -= f * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return static_cast<int>(pivot_row);
}

bool in_row_span(std::vector<std::vector<Rat>> reduced, const std::vector<Rat>& v) {
  int before = static_cast<int>(reduced.size());
  reduced.push_back(v);
  return row_reduce(reduced) == before;
}

std::optional<std::vector<Rat>> solve_linear(RatMat a, std::vector<Rat> b) {
  int rows = a.rows(), cols = a.cols();
  std::vector<int> pivot_col_of_row;
  int pr = 0;
  for (int col = 0; col < cols && pr < rows; ++col) {
    int sel = -1;
    for (int r = pr; r < rows; ++r)
      if (a.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr) {
      for (int j = 0; j < cols; ++j) std::swap(a.at(pr, j), a.at(sel, j));
      std::swap(b[pr], b[sel]);
    }
    Rat inv = 1 / a.at(pr, col);
    for (int j = col; j < cols; ++j) a.at(pr, j) *= inv;
    b[pr] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pr || a.at(r, col) == 0) continue;
      Rat f = a.at(r, col);
      for (int j = col; j < cols; ++j) a.at(r, j) -= f * a.at(pr, j);
      b[r] -= f * b[pr];
    }
    pivot_col_of_row.push_back(col);
    ++pr;
  }
  for (int r = pr; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (int r = 0; r < pr; ++r) x[pivot_col_of_row[r]] = b[r];
  return x;
}

} // namespace nilorb
