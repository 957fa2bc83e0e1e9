#pragma once

#include <map>
#include <tuple>

#include "nilorb/poly.hpp"

namespace nilorb {

struct BKIndex {
  int i = 0, k = 0, x = 0, r = 0;
  std::string name() const;
};

/// Signed sums over box paths of the pyramid subject to the six index
/// conditions; memoised per (i,k,x,r).  The expansions carry no variables of
/// negative Dynkin degree, so they are their own slice reductions.
class BKCache {
public:
  explicit BKCache(const LieModel& gl_model) : model_(gl_model) {}

  const SparsePoly& invariant(const BKIndex& idx);
  const LieModel& model() const { return model_; }

private:
  SparsePoly expand(const BKIndex& idx) const;
  const LieModel& model_;
  std::map<std::tuple<int, int, int, int>, SparsePoly> cache_;
};

SparsePoly bk_invariant(const BKIndex& idx, const LieModel& gl_model);

} // namespace nilorb
