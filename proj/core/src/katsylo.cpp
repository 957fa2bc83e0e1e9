#include "nilorb/katsylo.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nilorb {

std::string KGen::name() const {
  std::ostringstream os;
  if (kind == 'x')
    os << "x_" << i << "_" << r;
  else
    os << "y_" << i;
  return os.str();
}

KatsyloPresentation katsylo_presentation(const EpsPartition& lambda) {
  auto cls = classify(lambda);
  if (!cls.distinguished || lambda.part(1) <= 1)
    fail(errc::not_distinguished,
         lambda.to_string() + " must be distinguished with first part > 1");

  KatsyloPresentation p;
  p.n = lambda.rank();
  p.s_values.resize(p.n);
  p.s_values[0] = lambda.part(1) / 2;
  for (int i = 2; i <= p.n; ++i) p.s_values[i - 1] = (lambda.part(i) - lambda.part(i - 1)) / 2;

  for (int i = 1; i <= p.n; ++i)
    for (int r = 1; r <= p.s_values[i - 1]; ++r) p.generators.push_back({'x', i, r});
  for (int j = 1; j <= p.n - 1; ++j) p.generators.push_back({'y', j, 0});

  auto rel = [&](KGen a, KGen b) {
    if (b < a) std::swap(a, b);
    p.relations.emplace_back(a, b);
  };
  for (int i = 1; i <= p.n - 1; ++i) {
    int gap = lambda.part(i) - lambda.part(i - 1);
    if (gap > 0 && gap % 2 == 0) rel({'x', i, 1}, {'y', i, 0});
  }
  for (int i = 1; i <= p.n - 2; ++i) {
    rel({'x', i + 2, 1}, {'y', i, 0});
    rel({'y', i, 0}, {'y', i + 1, 0});
  }
  std::sort(p.relations.begin(), p.relations.end());
  return p;
}

namespace {

struct CoverSearch {
  int nverts;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> incident;  // vertex -> edge ids
  std::set<std::vector<int>> covers;

  bool is_cover(const std::vector<char>& chosen) const {
    for (const auto& [u, v] : edges)
      if (!chosen[u] && !chosen[v]) return false;
    return true;
  }

  bool is_minimal(const std::vector<char>& chosen) const {
    // every chosen vertex must privately cover some edge
    for (int v = 0; v < nverts; ++v) {
      if (!chosen[v]) continue;
      bool needed = false;
      for (int e : incident[v]) {
        int other = edges[e].first == v ? edges[e].second : edges[e].first;
        if (!chosen[other]) {
          needed = true;
          break;
        }
      }
      if (!needed) return false;
    }
    return true;
  }

  // Branch on an uncovered edge: either u joins the cover, or u is excluded,
  // forcing all of its neighbours in.
  void search(std::vector<char>& chosen, std::vector<char>& excluded) {
    int pending = -1;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!chosen[edges[e].first] && !chosen[edges[e].second]) {
        pending = static_cast<int>(e);
        break;
      }
    }
    if (pending < 0) {
      if (is_minimal(chosen)) {
        std::vector<int> cover;
        for (int v = 0; v < nverts; ++v)
          if (chosen[v]) cover.push_back(v);
        covers.insert(cover);
      }
      return;
    }
    auto [u, v] = edges[pending];
    if (!excluded[u]) {
      chosen[u] = 1;
      search(chosen, excluded);
      chosen[u] = 0;
    }
    // u stays out: all neighbours of u must be in
    excluded[u] = 1;
    std::vector<int> forced;
    bool feasible = true;
    for (int e : incident[u]) {
      int w = edges[e].first == u ? edges[e].second : edges[e].first;
      if (excluded[w]) {
        feasible = false;
        break;
      }
      if (!chosen[w]) {
        chosen[w] = 1;
        forced.push_back(w);
      }
    }
    if (feasible) search(chosen, excluded);
    for (int w : forced) chosen[w] = 0;
    excluded[u] = 0;
  }
};

} // namespace

std::vector<Component> katsylo_components(const KatsyloPresentation& p) {
  std::map<KGen, int> id;
  for (const auto& g : p.generators) id.emplace(g, static_cast<int>(id.size()));

  CoverSearch cs;
  cs.nverts = static_cast<int>(p.generators.size());
  cs.incident.resize(cs.nverts);
  for (const auto& [a, b] : p.relations) {
    int u = id.at(a), v = id.at(b);
    cs.incident[u].push_back(static_cast<int>(cs.edges.size()));
    cs.incident[v].push_back(static_cast<int>(cs.edges.size()));
    cs.edges.emplace_back(u, v);
  }
  std::vector<char> chosen(cs.nverts, 0), excluded(cs.nverts, 0);
  cs.search(chosen, excluded);

  std::vector<KGen> by_id(p.generators.begin(), p.generators.end());
  std::vector<Component> out;
  for (const auto& cover : cs.covers) {
    Component c;
    for (int v : cover) c.vanishing.push_back(by_id[v]);
    std::sort(c.vanishing.begin(), c.vanishing.end());
    c.dimension = cs.nverts - static_cast<int>(cover.size());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    return a.vanishing < b.vanishing;
  });
  return out;
}

std::vector<KGen> iota(const std::set<int>& S, int n) {
  for (int i = 1; i <= n - 2; ++i)
    if (!S.count(i) && !S.count(i + 1))
      fail(errc::not_in_pn, "subset misses both " + std::to_string(i) + " and " +
                                std::to_string(i + 1));
  for (int s : S)
    if (s < 1 || s > n - 1) fail(errc::not_in_pn, "element out of {1..n-1}");

  std::vector<KGen> out;
  for (int i : S) out.push_back({'y', i, 0});
  for (int i = 1; i <= n; ++i) {
    bool in_sc = i <= n - 1 && !S.count(i);
    bool shifted = i - 2 >= 1 && i - 2 <= n - 1 && !S.count(i - 2);
    if (in_sc || shifted) out.push_back({'x', i, 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport verify_component_bijection(const EpsPartition& lambda) {
  auto pres = katsylo_presentation(lambda);
  auto comps = katsylo_components(pres);
  auto multisets = maximal_admissible_multisets(lambda);

  std::vector<int> comp_dims, ks_sizes;
  for (const auto& c : comps) comp_dims.push_back(c.dimension);
  for (const auto& m : multisets) ks_sizes.push_back(static_cast<int>(m.values.size()));
  std::sort(comp_dims.rbegin(), comp_dims.rend());
  std::sort(ks_sizes.rbegin(), ks_sizes.rend());

  auto render = [](const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
  };

  std::ostringstream detail;
  detail << "component dims " << render(comp_dims) << ", multiset sizes " << render(ks_sizes);

  // reduction to the minimal partition alpha with the same rank
  int n = lambda.rank();
  std::vector<int> alpha_parts;
  for (int i = 1; i <= n; ++i)
    alpha_parts.push_back(lambda.epsilon() == -1 ? 2 * i : 2 * i + 1);
  auto alpha = EpsPartition::validate(alpha_parts, lambda.epsilon());
  auto alpha_comps = katsylo_components(katsylo_presentation(alpha));
  detail << "; alpha components " << alpha_comps.size();

  if (comp_dims != ks_sizes)
    return CheckReport::failed("component-bijection " + lambda.to_string(),
                               "katsylo.bijection", detail.str());
  if (alpha_comps.size() != comps.size())
    return CheckReport::failed("component-bijection " + lambda.to_string(),
                               "katsylo.alpha-reduction", detail.str());
  return CheckReport::ok("component-bijection " + lambda.to_string(), "katsylo.bijection",
                         detail.str());
}

} // namespace nilorb
