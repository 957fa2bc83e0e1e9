#include "nilorb/pbw.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

#include "nilorb/matrix.hpp"

namespace nilorb {

std::string genpoly_to_string(const GenPoly& p, const std::vector<PBWBasisElement>& gens) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [expo, c] : p) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (std::size_t g = 0; g < expo.size(); ++g)
      for (int t = 0; t < expo[g]; ++t) os << " * " << gens[g].symbol;
  }
  return os.str();
}

long genpoly_min_degree(const GenPoly& p) {
  long best = LONG_MAX;
  for (const auto& [expo, c] : p) {
    long d = std::accumulate(expo.begin(), expo.end(), 0L);
    best = std::min(best, d);
  }
  return best;
}

SlicePoly expand_gen_monomial(const std::vector<int>& expo,
                              const std::vector<PBWBasisElement>& gens) {
  SlicePoly prod = SparsePoly::constant(Rat(1), gens.empty() ? -1 : gens[0].expansion.model_id());
  for (std::size_t g = 0; g < expo.size(); ++g)
    for (int t = 0; t < expo[g]; ++t) prod = prod * gens[g].expansion;
  return prod;
}

namespace {

// exponent vectors with sum of gen degrees equal to target
void enumerate_monomials(const std::vector<PBWBasisElement>& gens, long target, std::size_t from,
                         std::vector<int>& expo, std::vector<std::vector<int>>& out) {
  if (target == 0) {
    out.push_back(expo);
    return;
  }
  if (from == gens.size()) return;
  long d = gens[from].kazhdan_degree;
  int max_count = d > 0 ? static_cast<int>(target / d) : 0;
  for (int c = 0; c <= max_count; ++c) {
    expo[from] = c;
    enumerate_monomials(gens, target - c * d, from + 1, expo, out);
  }
  expo[from] = 0;
}

} // namespace

GenPoly pbw_rewrite(const SlicePoly& s, const std::vector<PBWBasisElement>& gens,
                    const LieModel& model) {
  GenPoly result;
  for (auto& [kdeg, component] : s.kazhdan_components(model)) {
    if (kdeg == 0) {
      // constant term
      auto it = component.terms().find(Monomial{});
      if (it != component.terms().end()) result[std::vector<int>(gens.size(), 0)] = it->second;
      continue;
    }
    std::vector<std::vector<int>> monos;
    std::vector<int> expo(gens.size(), 0);
    enumerate_monomials(gens, kdeg, 0, expo, monos);
    if (monos.empty()) fail(errc::not_in_algebra, "no generator monomials in this degree");

    std::vector<SlicePoly> expansions;
    expansions.reserve(monos.size());
    std::map<Monomial, int> row_of;
    for (const auto& m : monos) {
      expansions.push_back(expand_gen_monomial(m, gens));
      for (const auto& [mono, c] : expansions.back().terms())
        row_of.emplace(mono, static_cast<int>(row_of.size()));
    }
    for (const auto& [mono, c] : component.terms()) row_of.emplace(mono, static_cast<int>(row_of.size()));

    RatMat sys(static_cast<int>(row_of.size()), static_cast<int>(monos.size()));
    for (std::size_t col = 0; col < monos.size(); ++col)
      for (const auto& [mono, c] : expansions[col].terms())
        sys.at(row_of.at(mono), static_cast<int>(col)) = c;
    std::vector<Rat> rhs(row_of.size(), Rat(0));
    for (const auto& [mono, c] : component.terms()) rhs[row_of.at(mono)] = c;

    auto sol = solve_linear(sys, rhs);
    if (!sol)
      fail(errc::not_in_algebra,
           "nonzero residual in Kazhdan degree " + std::to_string(kdeg));
    for (std::size_t col = 0; col < monos.size(); ++col)
      if ((*sol)[col] != 0) result[monos[col]] += (*sol)[col];
  }
  // drop exact zeros that may have accumulated
  for (auto it = result.begin(); it != result.end();)
    it = (it->second == 0) ? result.erase(it) : std::next(it);
  return result;
}

} // namespace nilorb
