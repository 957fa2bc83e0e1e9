#include "nilorb/bk.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace nilorb {

std::string BKIndex::name() const {
  std::ostringstream os;
  os << "t[" << i << "," << k << ";" << x << "]^(" << r << ")";
  return os.str();
}

SparsePoly BKCache::expand(const BKIndex& idx) const {
  const auto& lambda = model_.lambda();
  int n = lambda.rank();
  if (idx.i < 1 || idx.i > n || idx.k < 1 || idx.k > n || idx.x < 0 || idx.x >= n || idx.r < 1)
    fail(errc::index_out_of_range, idx.name());

  SparsePoly out(model_.id());
  for (int s = 1; s <= idx.r; ++s) {
    int budget = 2 * (idx.r - s);
    Rat outer_sign = ((idx.r - s) % 2 == 0) ? 1 : -1;

    // depth-first walk over factors m = 1..s
    std::vector<int> vars;
    std::function<void(int, int, int, bool, int, int)> rec =
        [&](int m, int row, int prev_l, bool prev_le_x, int remaining, int sign_count) {
          for (int col_row = 1; col_row <= n; ++col_row) {
            if (m == s && col_row != idx.k) continue;
            int base = lambda.part(row) - lambda.part(col_row);
            int j_min = 1;
            int j_max = lambda.part(row);
            for (int j = j_min; j <= j_max; ++j) {
              if (m > 1) {
                if (prev_le_x) {
                  if (!(prev_l >= j)) continue;
                } else {
                  if (!(prev_l < j)) continue;
                }
              }
              for (int l = 1; l <= lambda.part(col_row); ++l) {
                int deg = 2 * (l - j) + base;
                if (deg < 0 || deg > remaining) continue;
                if (m == s && deg != remaining) continue;
                int v = model_.var_of({row, j, col_row, l});
                vars.push_back(v);
                if (m == s) {
                  Monomial mono = vars;
                  std::sort(mono.begin(), mono.end());
                  Rat inner_sign = (sign_count % 2 == 0) ? 1 : -1;
                  out.add_term(mono, outer_sign * inner_sign);
                } else {
                  rec(m + 1, col_row, l, col_row <= idx.x, remaining - deg,
                      sign_count + (col_row <= idx.x ? 1 : 0));
                }
                vars.pop_back();
              }
            }
          }
        };
    rec(1, idx.i, 0, false, budget, 0);
  }
  return out;
}

const SparsePoly& BKCache::invariant(const BKIndex& idx) {
  auto key = std::make_tuple(idx.i, idx.k, idx.x, idx.r);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, expand(idx)).first;
  return it->second;
}

SparsePoly bk_invariant(const BKIndex& idx, const LieModel& gl_model) {
  BKCache cache(gl_model);
  return cache.invariant(idx);
}

} // namespace nilorb
