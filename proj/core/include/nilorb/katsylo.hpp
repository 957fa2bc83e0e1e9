#pragma once

#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nilorb/partition.hpp"
#include "nilorb/report.hpp"

namespace nilorb {

/// Generator of the quadratic presentation: x_{i,r} or y_j.
struct KGen {
  char kind = 'x';  // 'x' or 'y'
  int i = 0;
  int r = 0;  // only for kind 'x'

  std::string name() const;
  bool operator<(const KGen& o) const {
    return std::tie(kind, i, r) < std::tie(o.kind, o.i, o.r);
  }
  bool operator==(const KGen& o) const {
    return kind == o.kind && i == o.i && r == o.r;
  }
};

/// Squarefree quadratic presentation of the component variety attached to a
/// distinguished partition: generators S and unordered relation pairs Q.
struct KatsyloPresentation {
  int n = 0;
  std::vector<int> s_values;  // s_1 = floor(lambda_1/2), s_i = (lambda_i - lambda_{i-1})/2
  std::vector<KGen> generators;
  std::vector<std::pair<KGen, KGen>> relations;
};

struct Component {
  std::vector<KGen> vanishing;  // a minimal vertex cover of the relation graph
  int dimension = 0;            // #generators - #vanishing
};

KatsyloPresentation katsylo_presentation(const EpsPartition& lambda);

/// All irreducible components: minimal vertex covers of the relation graph,
/// sorted by nonincreasing dimension then by vanishing set.
std::vector<Component> katsylo_components(const KatsyloPresentation& p);

/// The explicit cover map for the minimal partition; S must satisfy the
/// covering condition (i in S or i+1 in S for every i <= n-2).
std::vector<KGen> iota(const std::set<int>& S, int n);

/// Compares component dimensions of X_lambda with the sizes of the maximal
/// admissible multisets, plus the reduction to the minimal partition alpha.
CheckReport verify_component_bijection(const EpsPartition& lambda);

} // namespace nilorb
