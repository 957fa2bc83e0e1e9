#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nilorb/error.hpp"

namespace nilorb {

enum class KSCase { one = 1, two = 2 };

/// A partition of N with sign epsilon, parts stored nondecreasing, together
/// with a pairing involution on row indexes.  The boundary conventions are
/// part(0) = 0 and part(n+1) = +infinity.  Zero parts are legal only as
/// bookkeeping inside the KS iteration; the public entry point validate()
/// rejects them.
class EpsPartition {
public:
  /// Sorts parts, fixes the canonical (greedy left-to-right) involution and
  /// checks membership in P_eps(N).  Throws NoInvolution / BadSign.
  static EpsPartition validate(std::vector<int> parts, int epsilon);

  int epsilon() const { return epsilon_; }
  int rank() const { return static_cast<int>(parts_.size()); }  // n, zeros included
  int weight() const;                                           // N

  /// 1-based part access honouring the boundary conventions.
  int part(int i) const;
  bool part_is_infinite(int i) const { return i > rank(); }

  const std::vector<int>& parts() const { return parts_; }
  /// involution()[i-1] is i' for row i (1-based values).
  const std::vector<int>& involution() const { return involution_; }

  bool trivial_involution() const;
  bool uniform_parity() const;
  bool has_zero_parts() const;
  /// True when epsilon = +1 and every part is even: the partition then meets
  /// two orbits which this library does not tell apart.
  bool very_even() const;

  /// Drops zero parts and revalidates.
  EpsPartition strip_zeros() const;

  std::string to_string() const;

  bool operator==(const EpsPartition& o) const {
    return epsilon_ == o.epsilon_ && parts_ == o.parts_;
  }

private:
  friend EpsPartition ks_step(const EpsPartition&, int);
  EpsPartition(std::vector<int> parts, int epsilon, std::vector<int> involution)
      : parts_(std::move(parts)), epsilon_(epsilon), involution_(std::move(involution)) {}
  static std::vector<int> greedy_involution(const std::vector<int>& parts, int epsilon);

  std::vector<int> parts_;
  int epsilon_ = 1;
  std::vector<int> involution_;
};

struct TwoStep {
  int i = 0;  // the pair (i, i+1)
  bool bad = false;
  int bad_boundary = -1;  // i-1 or i+2 when bad, -1 otherwise
};

struct Classification {
  bool singular = false;
  bool rigid = false;
  bool distinguished = false;
};

struct AdmissibleMultiset {
  std::vector<int> values;   // sorted multiset over {1..n}
  std::vector<int> witness;  // lexicographically first admissible sequence realising it
  EpsPartition terminal;     // partition reached, zeros stripped
};

struct SheetEntry {
  std::vector<int> multiset;
  int slice_dim = 0;
  long sheet_dim = 0;
};

struct DistinguishedEmbedding {
  EpsPartition lambda_tilde;
  std::vector<int> levi_blocks;     // gl block sizes n-i+1, in application order
  std::vector<int> step_indexes;    // the index i recorded at each step
};

enum class DimCompare { less, equal, greater };

std::vector<TwoStep> two_steps(const EpsPartition& lambda);
Classification classify(const EpsPartition& lambda);

/// Indexes where the KS reduction may act, each tagged with its case.
std::vector<std::pair<int, KSCase>> admissible_indexes(const EpsPartition& lambda);

/// One KS reduction.  Keeps zero parts so later indexes stay aligned.
EpsPartition ks_step(const EpsPartition& lambda, int i);

std::vector<AdmissibleMultiset> maximal_admissible_multisets(const EpsPartition& lambda);

/// Test hook: same search with a caller-chosen branch order.
std::vector<AdmissibleMultiset> maximal_admissible_multisets_ordered(
    const EpsPartition& lambda,
    const std::function<std::vector<int>(std::vector<int>)>& reorder);

std::vector<SheetEntry> sheet_dimensions(const EpsPartition& lambda);

/// Adjoint orbit dimension via the transpose-partition centraliser formula.
long orbit_dimension(const EpsPartition& lambda);

DistinguishedEmbedding distinguished_embedding(const EpsPartition& lambda);

/// Lexicographic comparison of component-dimension vectors, absent entries
/// reading as zero.
DimCompare compare_dimension_vectors(const std::vector<int>& a, const std::vector<int>& b);

std::vector<int> transpose_partition(const std::vector<int>& parts);

/// All of P_eps(N) for one N (canonical involutions fixed).
std::vector<EpsPartition> enumerate_eps_partitions(int N, int epsilon);

} // namespace nilorb
