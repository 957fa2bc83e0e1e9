#include "nilorb/partition.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace nilorb {

namespace {

// A row can be fixed by the involution exactly when eps * (-1)^part = -1.
bool fixable(int part, int epsilon) {
  int sign = (part % 2 == 0) ? epsilon : -epsilon;
  return sign == -1;
}

} // namespace

std::vector<int> EpsPartition::greedy_involution(const std::vector<int>& parts, int epsilon) {
  int n = static_cast<int>(parts.size());
  std::vector<int> inv(n, 0);
  for (int i = 1; i <= n; ++i) {
    if (inv[i - 1] != 0) continue;
    if (fixable(parts[i - 1], epsilon)) {
      inv[i - 1] = i;
    } else {
      if (i + 1 <= n && inv[i] == 0 && parts[i] == parts[i - 1]) {
        inv[i - 1] = i + 1;
        inv[i] = i;
      } else {
        fail(errc::no_involution, "part " + std::to_string(parts[i - 1]) +
                                      " at row " + std::to_string(i) + " cannot be paired");
      }
    }
  }
  return inv;
}

EpsPartition EpsPartition::validate(std::vector<int> parts, int epsilon) {
  if (epsilon != 1 && epsilon != -1) fail(errc::bad_sign, "epsilon must be +1 or -1");
  for (int p : parts)
    if (p <= 0) fail(errc::no_involution, "parts must be positive");
  std::sort(parts.begin(), parts.end());
  long N = std::accumulate(parts.begin(), parts.end(), 0L);
  if (epsilon == -1 && N % 2 != 0)
    fail(errc::bad_sign, "epsilon = -1 requires even N, got N = " + std::to_string(N));
  auto inv = greedy_involution(parts, epsilon);
  return EpsPartition(std::move(parts), epsilon, std::move(inv));
}

int EpsPartition::weight() const {
  return static_cast<int>(std::accumulate(parts_.begin(), parts_.end(), 0L));
}

int EpsPartition::part(int i) const {
  if (i <= 0) return 0;
  if (i > rank()) return INT_MAX;  // the lambda_{n+1} = infinity convention
  return parts_[i - 1];
}

bool EpsPartition::trivial_involution() const {
  for (int i = 1; i <= rank(); ++i)
    if (involution_[i - 1] != i) return false;
  return true;
}

bool EpsPartition::uniform_parity() const {
  for (int i = 1; i < rank(); ++i)
    if ((parts_[i] - parts_[i - 1]) % 2 != 0) return false;
  return true;
}

bool EpsPartition::has_zero_parts() const {
  return !parts_.empty() && parts_.front() == 0;
}

bool EpsPartition::very_even() const {
  if (epsilon_ != 1 || parts_.empty()) return false;
  for (int p : parts_)
    if (p % 2 != 0) return false;
  return true;
}

EpsPartition EpsPartition::strip_zeros() const {
  std::vector<int> kept;
  for (int p : parts_)
    if (p > 0) kept.push_back(p);
  auto inv = greedy_involution(kept, epsilon_);
  return EpsPartition(std::move(kept), epsilon_, std::move(inv));
}

std::string EpsPartition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")" << (epsilon_ == 1 ? "+" : "-");
  return os.str();
}

std::vector<TwoStep> two_steps(const EpsPartition& lambda) {
  std::vector<TwoStep> out;
  int n = lambda.rank();
  int eps = lambda.epsilon();
  for (int i = 1; i + 1 <= n; ++i) {
    // both rows must carry eps*(-1)^part = -1
    if (!fixable(lambda.part(i), eps) || !fixable(lambda.part(i + 1), eps)) continue;
    if (!(lambda.part(i - 1) < lambda.part(i) && lambda.part(i) <= lambda.part(i + 1)))
      continue;
    if (!(lambda.part_is_infinite(i + 2) || lambda.part(i + 1) < lambda.part(i + 2))) continue;
    TwoStep ts;
    ts.i = i;
    int left = lambda.part(i) - lambda.part(i - 1);
    bool right_finite = !lambda.part_is_infinite(i + 2);
    int right = right_finite ? lambda.part(i + 2) - lambda.part(i + 1) : -1;
    if (left > 0 && left % 2 == 0) {
      ts.bad = true;
      ts.bad_boundary = i - 1;
    } else if (right_finite && right > 0 && right % 2 == 0) {
      ts.bad = true;
      ts.bad_boundary = i + 2;
    }
    out.push_back(ts);
  }
  return out;
}

Classification classify(const EpsPartition& lambda) {
  Classification c;
  auto steps = two_steps(lambda);
  for (const auto& ts : steps)
    if (ts.bad) c.singular = true;
  bool small_gaps = true;
  for (int i = 1; i <= lambda.rank(); ++i)
    if (lambda.part(i) - lambda.part(i - 1) >= 2) small_gaps = false;
  c.rigid = steps.empty() && small_gaps;
  bool strict = true;
  for (int i = 1; i < lambda.rank(); ++i)
    if (lambda.part(i) >= lambda.part(i + 1)) strict = false;
  c.distinguished = strict && lambda.trivial_involution();
  return c;
}

std::vector<std::pair<int, KSCase>> admissible_indexes(const EpsPartition& lambda) {
  std::vector<std::pair<int, KSCase>> out;
  auto delta = two_steps(lambda);
  auto in_delta = [&](int i) {
    for (const auto& ts : delta)
      if (ts.i == i) return true;
    return false;
  };
  for (int i = 1; i <= lambda.rank(); ++i) {
    if (lambda.part(i) - lambda.part(i - 1) > 1) {
      out.emplace_back(i, KSCase::one);
    } else if (i >= 2 && in_delta(i - 1) && lambda.part(i - 1) == lambda.part(i)) {
      out.emplace_back(i, KSCase::two);
    }
  }
  return out;
}

EpsPartition ks_step(const EpsPartition& lambda, int i) {
  KSCase kcase;
  bool found = false;
  for (auto [j, c] : admissible_indexes(lambda)) {
    if (j == i) {
      kcase = c;
      found = true;
      break;
    }
  }
  if (!found)
    fail(errc::not_admissible,
         "index " + std::to_string(i) + " is not admissible for " + lambda.to_string());
  std::vector<int> parts = lambda.parts();
  int n = lambda.rank();
  if (kcase == KSCase::one) {
    for (int j = i; j <= n; ++j) parts[j - 1] -= 2;
  } else {
    parts[i - 2] -= 1;
    parts[i - 1] -= 1;
    for (int j = i + 1; j <= n; ++j) parts[j - 1] -= 2;
  }
  // Sanity: the reduction must stay inside P_eps with zeros allowed.
  for (int j = 1; j < n; ++j)
    if (parts[j] < parts[j - 1] || parts[j - 1] < 0)
      fail(errc::not_admissible, "KS step produced an invalid partition");
  auto inv = EpsPartition::greedy_involution(
      [&] {
        std::vector<int> positive;
        for (int p : parts)
          if (p > 0) positive.push_back(p);
        return positive;
      }(),
      lambda.epsilon());
  (void)inv;  // existence check only; zeros keep their own trivial slots
  std::vector<int> stored_inv(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) stored_inv[k] = static_cast<int>(k + 1);
  return EpsPartition(std::move(parts), lambda.epsilon(), std::move(stored_inv));
}

std::vector<AdmissibleMultiset> maximal_admissible_multisets_ordered(
    const EpsPartition& lambda,
    const std::function<std::vector<int>(std::vector<int>)>& reorder) {
  // Exhaustive DFS over admissible sequences, deduplicated by multiset.  The
  // visited set is keyed on (partition, multiset) so shared states are not
  // replayed.
  std::map<std::vector<int>, AdmissibleMultiset> found;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<int> prefix;

  std::function<void(const EpsPartition&)> dfs = [&](const EpsPartition& cur) {
    auto adm = admissible_indexes(cur);
    if (adm.empty()) {
      std::vector<int> key = prefix;
      std::sort(key.begin(), key.end());
      if (!found.count(key)) {
        AdmissibleMultiset m{key, prefix, cur.strip_zeros()};
        found.emplace(std::move(key), std::move(m));
      }
      return;
    }
    std::vector<int> order;
    for (auto [i, c] : adm) order.push_back(i);
    order = reorder(order);
    for (int i : order) {
      auto next = ks_step(cur, i);
      prefix.push_back(i);
      std::vector<int> key = prefix;
      std::sort(key.begin(), key.end());
      if (seen.emplace(next.parts(), key).second) dfs(next);
      prefix.pop_back();
    }
  };
  dfs(lambda);

  std::vector<AdmissibleMultiset> out;
  for (auto& [key, m] : found) out.push_back(std::move(m));
  return out;
}

std::vector<AdmissibleMultiset> maximal_admissible_multisets(const EpsPartition& lambda) {
  return maximal_admissible_multisets_ordered(
      lambda, [](std::vector<int> v) { return v; });
}

std::vector<int> transpose_partition(const std::vector<int>& parts) {
  std::vector<int> out;
  int max = 0;
  for (int p : parts) max = std::max(max, p);
  for (int j = 1; j <= max; ++j) {
    int count = 0;
    for (int p : parts)
      if (p >= j) ++count;
    out.push_back(count);
  }
  return out;
}

long orbit_dimension(const EpsPartition& lambda) {
  if (lambda.has_zero_parts()) fail(errc::not_admissible, "orbit_dimension: strip zeros first");
  long N = lambda.weight();
  long dim_g0 = (lambda.epsilon() == 1) ? N * (N - 1) / 2 : N * (N + 1) / 2;
  long sq = 0;
  for (int c : transpose_partition(lambda.parts())) sq += static_cast<long>(c) * c;
  long odd = 0;
  for (int p : lambda.parts())
    if (p % 2 != 0) ++odd;
  long eps_hash = (lambda.epsilon() == 1) ? odd : -odd;
  long dim_centraliser = (sq - eps_hash) / 2;
  return dim_g0 - dim_centraliser;
}

std::vector<SheetEntry> sheet_dimensions(const EpsPartition& lambda) {
  long dim_orbit = orbit_dimension(lambda);
  std::vector<SheetEntry> out;
  for (const auto& m : maximal_admissible_multisets(lambda)) {
    SheetEntry e;
    e.multiset = m.values;
    e.slice_dim = static_cast<int>(m.values.size());
    e.sheet_dim = dim_orbit + e.slice_dim;
    out.push_back(std::move(e));
  }
  return out;
}

DistinguishedEmbedding distinguished_embedding(const EpsPartition& lambda) {
  if (lambda.has_zero_parts())
    fail(errc::not_admissible, "distinguished_embedding: strip zeros first");
  std::vector<int> parts = lambda.parts();
  int eps = lambda.epsilon();
  std::vector<int> blocks, indexes;

  auto current = [&] { return EpsPartition::validate(parts, eps); };

  // First pass: break the i' = i-1 pairs.
  for (;;) {
    auto cur = current();
    int n = cur.rank();
    int pivot = 0;
    for (int i = 2; i <= n; ++i) {
      if (cur.involution()[i - 1] == i - 1) {
        pivot = i;
        break;
      }
    }
    if (pivot == 0) break;
    parts[pivot - 2] += 1;
    parts[pivot - 1] += 1;
    for (int j = pivot + 1; j <= n; ++j) parts[j - 1] += 2;
    blocks.push_back(n - pivot + 1);
    indexes.push_back(pivot);
  }
  // Second pass: separate equal adjacent parts.
  for (;;) {
    int n = static_cast<int>(parts.size());
    int pivot = 0;
    for (int i = 2; i <= n; ++i) {
      if (parts[i - 1] == parts[i - 2]) {
        pivot = i;
        break;
      }
    }
    if (pivot == 0) break;
    for (int j = pivot; j <= n; ++j) parts[j - 1] += 2;
    blocks.push_back(n - pivot + 1);
    indexes.push_back(pivot);
  }

  DistinguishedEmbedding out{current(), std::move(blocks), std::move(indexes)};
  if (!classify(out.lambda_tilde).distinguished)
    fail(errc::not_admissible, "embedding did not reach a distinguished partition");
  return out;
}

DimCompare compare_dimension_vectors(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x < y) return DimCompare::less;
    if (x > y) return DimCompare::greater;
  }
  return DimCompare::equal;
}

namespace {

void enumerate_rec(int remaining, int min_part, std::vector<int>& acc,
                   std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    acc.push_back(p);
    enumerate_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<EpsPartition> enumerate_eps_partitions(int N, int epsilon) {
  std::vector<std::vector<int>> raw;
  std::vector<int> acc;
  enumerate_rec(N, 1, acc, raw);
  std::vector<EpsPartition> out;
  for (auto& parts : raw) {
    try {
      out.push_back(EpsPartition::validate(parts, epsilon));
    } catch (const error&) {
      // not in P_eps(N)
    }
  }
  return out;
}

} // namespace nilorb
