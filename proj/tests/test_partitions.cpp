#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nilorb/model.hpp"
#include "nilorb/partition.hpp"

using namespace nilorb;

namespace {

// Oracle: enumerate every involution with i' in {i-1,i,i+1} and check the
// sign conditions directly.
bool involution_exists(std::vector<int> parts, int eps) {
  std::sort(parts.begin(), parts.end());
  int n = static_cast<int>(parts.size());
  long N = 0;
  for (int p : parts) N += p;
  if (eps == -1 && N % 2 != 0) return false;
  // assignments: inv over {fixed, pair-with-next}; scan positions
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i > n) return true;
    int sign = (parts[i - 1] % 2 == 0) ? eps : -eps;
    if (sign == -1 && rec(i + 1)) return true;  // fixed allowed
    if (sign == 1 && i + 1 <= n && parts[i] == parts[i - 1]) {
      int sign2 = (parts[i] % 2 == 0) ? eps : -eps;
      if (sign2 == 1 && rec(i + 2)) return true;  // pair (i, i+1)
    }
    return false;
  };
  return rec(1);
}

std::vector<std::vector<int>> multiset_family(const EpsPartition& lambda) {
  std::vector<std::vector<int>> out;
  for (const auto& m : maximal_admissible_multisets(lambda)) out.push_back(m.values);
  return out;
}

} // namespace

TEST_CASE("validation against the exhaustive involution oracle") {
  CHECK_NOTHROW(EpsPartition::validate({2, 4}, -1));
  CHECK_THROWS_AS(EpsPartition::validate({2}, 1), error);  // lone even part, eps=+1
  auto p = EpsPartition::validate({1, 2, 2}, 1);
  CHECK(p.involution() == std::vector<int>{1, 3, 2});

  for (int N = 1; N <= 12; ++N)
    for (int eps : {1, -1}) {
      std::vector<std::vector<int>> raw;
      std::function<void(int, int, std::vector<int>&)> gen = [&](int rem, int mn,
                                                                 std::vector<int>& acc) {
        if (rem == 0) {
          raw.push_back(acc);
          return;
        }
        for (int q = mn; q <= rem; ++q) {
          acc.push_back(q);
          gen(rem - q, q, acc);
          acc.pop_back();
        }
      };
      std::vector<int> acc;
      gen(N, 1, acc);
      for (const auto& parts : raw) {
        bool expect = involution_exists(parts, eps);
        bool got = true;
        try {
          EpsPartition::validate(parts, eps);
        } catch (const error&) {
          got = false;
        }
        CAPTURE(N);
        CAPTURE(eps);
        CHECK(got == expect);
      }
    }
}

TEST_CASE("two-steps and badness") {
  // (2,4) with eps=-1 sits in two sheets, so its 2-step must be bad: the
  // left gap is 2 - 0 = 2.
  auto steps24 = two_steps(EpsPartition::validate({2, 4}, -1));
  REQUIRE(steps24.size() == 1);
  CHECK(steps24[0].i == 1);
  CHECK(steps24[0].bad);
  CHECK(steps24[0].bad_boundary == 0);

  auto steps22 = two_steps(EpsPartition::validate({2, 2}, -1));
  REQUIRE(steps22.size() == 1);
  CHECK(steps22[0].bad);
  CHECK(steps22[0].bad_boundary == 0);

  auto steps35 = two_steps(EpsPartition::validate({3, 5}, 1));
  REQUIRE(steps35.size() == 1);
  CHECK_FALSE(steps35[0].bad);  // the right-hand condition never fires at i = n-1
}

TEST_CASE("classification predicates") {
  auto c1 = classify(EpsPartition::validate({1, 2, 2}, 1));
  CHECK(c1.rigid);
  CHECK_FALSE(c1.singular);
  CHECK_FALSE(c1.distinguished);

  auto c2 = classify(EpsPartition::validate({2, 2}, -1));
  CHECK(c2.singular);
  CHECK_FALSE(c2.rigid);

  auto c3 = classify(EpsPartition::validate({2, 4, 6}, -1));
  CHECK(c3.distinguished);
  CHECK(c3.singular);
}

TEST_CASE("admissible indexes") {
  auto a = admissible_indexes(EpsPartition::validate({2, 4}, -1));
  REQUIRE(a.size() == 2);
  CHECK(a[0] == std::pair<int, KSCase>{1, KSCase::one});
  CHECK(a[1] == std::pair<int, KSCase>{2, KSCase::one});

  auto b = admissible_indexes(EpsPartition::validate({2, 2}, -1));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == std::pair<int, KSCase>{1, KSCase::one});
  CHECK(b[1] == std::pair<int, KSCase>{2, KSCase::two});

  auto c = admissible_indexes(EpsPartition::validate({1, 1}, 1));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == std::pair<int, KSCase>{2, KSCase::two});
}

TEST_CASE("KS reduction steps") {
  CHECK(ks_step(EpsPartition::validate({2, 4}, -1), 1).parts() == std::vector<int>{0, 2});
  CHECK(ks_step(EpsPartition::validate({2, 2}, -1), 2).parts() == std::vector<int>{1, 1});
  CHECK(ks_step(EpsPartition::validate({2, 4, 6}, -1), 2).parts() == std::vector<int>{2, 2, 4});
  CHECK_THROWS_AS(ks_step(EpsPartition::validate({1, 1}, 1), 1), error);
}

TEST_CASE("maximal admissible multisets") {
  CHECK(multiset_family(EpsPartition::validate({2, 4}, -1)) ==
        std::vector<std::vector<int>>{{1, 2}, {2, 2}});
  CHECK(multiset_family(EpsPartition::validate({2, 4, 6}, -1)) ==
        std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 3}, {2, 2}});
  CHECK(multiset_family(EpsPartition::validate({3, 5}, 1)) ==
        std::vector<std::vector<int>>{{1, 2, 2}});
}

TEST_CASE("multiset search is branch-order independent") {
  std::mt19937 rng(7);
  for (int N = 2; N <= 12; ++N)
    for (int eps : {1, -1})
      for (const auto& lambda : enumerate_eps_partitions(N, eps)) {
        auto canonical = maximal_admissible_multisets(lambda);
        auto reversed = maximal_admissible_multisets_ordered(lambda, [](std::vector<int> v) {
          std::reverse(v.begin(), v.end());
          return v;
        });
        auto shuffled = maximal_admissible_multisets_ordered(lambda, [&](std::vector<int> v) {
          std::shuffle(v.begin(), v.end(), rng);
          return v;
        });
        auto values = [](const std::vector<AdmissibleMultiset>& ms) {
          std::vector<std::vector<int>> v;
          for (const auto& m : ms) v.push_back(m.values);
          return v;
        };
        CHECK(values(canonical) == values(reversed));
        CHECK(values(canonical) == values(shuffled));
      }
}

TEST_CASE("KS step invariants: weight drop and membership") {
  for (int N = 2; N <= 12; ++N)
    for (int eps : {1, -1})
      for (const auto& lambda : enumerate_eps_partitions(N, eps)) {
        int n = lambda.rank();
        for (auto [i, kcase] : admissible_indexes(lambda)) {
          auto next = ks_step(lambda, i);
          CHECK(next.weight() == lambda.weight() - 2 * (n - i + 1));
          CHECK_NOTHROW(next.strip_zeros());  // revalidates membership
        }
      }
}

TEST_CASE("witness sequences replay to their terminal partition") {
  for (const auto& lambda :
       {EpsPartition::validate({2, 4, 6}, -1), EpsPartition::validate({3, 5}, 1),
        EpsPartition::validate({1, 1, 2, 2}, 1)}) {
    for (const auto& m : maximal_admissible_multisets(lambda)) {
      EpsPartition cur = lambda;
      for (int i : m.witness) cur = ks_step(cur, i);
      CHECK(cur.strip_zeros() == m.terminal);
      CHECK(admissible_indexes(cur).empty());
      auto sorted = m.witness;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == m.values);
    }
  }
}

TEST_CASE("unique sheet exactly for non-singular partitions") {
  for (int N = 1; N <= 12; ++N)
    for (int eps : {1, -1})
      for (const auto& lambda : enumerate_eps_partitions(N, eps)) {
        bool unique = maximal_admissible_multisets(lambda).size() == 1;
        CHECK(unique == !classify(lambda).singular);
      }
}

TEST_CASE("orbit dimensions") {
  CHECK(orbit_dimension(EpsPartition::validate({2, 4}, -1)) == 16);
  CHECK(orbit_dimension(EpsPartition::validate({3, 5}, 1)) == 22);
  CHECK(orbit_dimension(EpsPartition::validate({1, 1, 1, 1, 1}, 1)) == 0);
  CHECK(orbit_dimension(EpsPartition::validate({2, 4, 6}, -1)) == 64);
}

TEST_CASE("orbit dimension agrees with the matrix-model kernel rank") {
  for (int N = 1; N <= 7; ++N)
    for (int eps : {1, -1})
      for (const auto& lambda : enumerate_eps_partitions(N, eps)) {
        auto model = LieModel::build(lambda);
        long from_kernel = model.g0_dimension() - model.g0_kernel_dimension();
        CHECK(orbit_dimension(lambda) == from_kernel);
      }
}

TEST_CASE("sheet dimensions") {
  auto s24 = sheet_dimensions(EpsPartition::validate({2, 4}, -1));
  REQUIRE(s24.size() == 2);
  CHECK(s24[0].slice_dim == 2);
  CHECK(s24[1].slice_dim == 2);
  CHECK(s24[0].sheet_dim == 18);
  CHECK(s24[1].sheet_dim == 18);

  auto s35 = sheet_dimensions(EpsPartition::validate({3, 5}, 1));
  REQUIRE(s35.size() == 1);
  CHECK(s35[0].slice_dim == 3);
  CHECK(s35[0].sheet_dim == 25);

  auto s11 = sheet_dimensions(EpsPartition::validate({1, 1}, 1));
  REQUIRE(s11.size() == 1);
  CHECK(s11[0].slice_dim == 1);
  CHECK(s11[0].sheet_dim == 1);
}

TEST_CASE("distinguished embedding") {
  auto e1 = distinguished_embedding(EpsPartition::validate({2, 2, 4}, -1));
  CHECK(e1.lambda_tilde.parts() == std::vector<int>{2, 4, 6});
  CHECK(e1.levi_blocks == std::vector<int>{2});

  auto e2 = distinguished_embedding(EpsPartition::validate({2, 4}, -1));
  CHECK(e2.lambda_tilde.parts() == std::vector<int>{2, 4});
  CHECK(e2.levi_blocks.empty());

  auto e3 = distinguished_embedding(EpsPartition::validate({3, 3}, 1));
  CHECK(e3.lambda_tilde.parts() == std::vector<int>{3, 5});
  CHECK(e3.levi_blocks == std::vector<int>{1});
}

TEST_CASE("embedding replays back through the KS algorithm") {
  for (int N = 1; N <= 12; ++N)
    for (int eps : {1, -1})
      for (const auto& lambda : enumerate_eps_partitions(N, eps)) {
        auto emb = distinguished_embedding(lambda);
        EpsPartition cur = emb.lambda_tilde;
        for (auto it = emb.step_indexes.rbegin(); it != emb.step_indexes.rend(); ++it)
          cur = ks_step(cur, *it);
        CHECK(cur.strip_zeros() == lambda);
        CHECK(classify(emb.lambda_tilde).distinguished);
      }
}

TEST_CASE("dimension vector comparison") {
  CHECK(compare_dimension_vectors({3, 3, 2}, {3, 2}) == DimCompare::greater);
  CHECK(compare_dimension_vectors({3, 3, 2}, {3, 3, 2}) == DimCompare::equal);
  CHECK(compare_dimension_vectors({2}, {2, 1}) == DimCompare::less);
}
