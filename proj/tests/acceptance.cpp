// Acceptance suite: one criterion per function, each printing a single
// pass/fail line with its runtime.  Exit status is nonzero when any
// criterion fails, including its stated time bound.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nilorb/katsylo.hpp"
#include "nilorb/model.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/pbw.hpp"
#include "nilorb/poly.hpp"
#include "nilorb/walgebra.hpp"

using namespace nilorb;
using clock_type = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

std::string render(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

std::vector<int> component_dims(const EpsPartition& lambda) {
  std::vector<int> dims;
  for (const auto& c : katsylo_components(katsylo_presentation(lambda)))
    dims.push_back(c.dimension);
  return sorted_desc(dims);
}

std::vector<int> multiset_sizes(const EpsPartition& lambda) {
  std::vector<int> sizes;
  for (const auto& m : maximal_admissible_multisets(lambda))
    sizes.push_back(static_cast<int>(m.values.size()));
  return sorted_desc(sizes);
}

// 1. component dimensions match maximal multiset sizes, N <= 30, both signs
Outcome criterion_sheet_katsylo() {
  Outcome out;
  long swept = 0;
  for (int N = 2; N <= 30; ++N)
    for (int eps : {1, -1})
      for (const auto& lambda : enumerate_eps_partitions(N, eps)) {
        auto cls = classify(lambda);
        if (!cls.distinguished || lambda.part(1) <= 1) continue;
        ++swept;
        auto dims = component_dims(lambda);
        auto sizes = multiset_sizes(lambda);
        out.require(dims == sizes, lambda.to_string() + ": dims " + render(dims) +
                                       " vs sizes " + render(sizes));
      }
  out.require(component_dims(EpsPartition::validate({2, 4}, -1)) == std::vector<int>{2, 2},
              "(2,4) spot value");
  out.require(component_dims(EpsPartition::validate({2, 4, 6}, -1)) == std::vector<int>{3, 3, 2},
              "(2,4,6) spot value");
  out.require(component_dims(EpsPartition::validate({3, 5}, 1)) == std::vector<int>{3},
              "(3,5) spot value");
  if (out.pass) out.detail = std::to_string(swept) + " distinguished partitions";
  return out;
}

// 2. unique sheet exactly for non-singular partitions, N <= 16
Outcome criterion_singularity() {
  Outcome out;
  long swept = 0;
  for (int N = 1; N <= 16; ++N)
    for (int eps : {1, -1})
      for (const auto& lambda : enumerate_eps_partitions(N, eps)) {
        ++swept;
        bool unique = maximal_admissible_multisets(lambda).size() == 1;
        out.require(unique == !classify(lambda).singular,
                    lambda.to_string() + ": sheet count vs singularity");
      }
  if (out.pass) out.detail = std::to_string(swept) + " partitions";
  return out;
}

// 3. matrix model soundness, N <= 8; kernel dimensions up to N <= 10
Outcome criterion_model() {
  Outcome out;
  long swept = 0;
  for (int N = 1; N <= 8; ++N)
    for (int eps : {1, -1})
      for (const auto& lambda : enumerate_eps_partitions(N, eps)) {
        ++swept;
        auto model = LieModel::build(lambda);
        for (const auto& r : verify_model(model))
          out.require(r.passed(), lambda.to_string() + " " + r.name + ": " + r.detail);
      }
  for (int N = 9; N <= 10; ++N)
    for (int eps : {1, -1})
      for (const auto& lambda : enumerate_eps_partitions(N, eps)) {
        ++swept;
        auto model = LieModel::build(lambda);
        long from_kernel = model.g0_dimension() - model.g0_kernel_dimension();
        out.require(orbit_dimension(lambda) == from_kernel,
                    lambda.to_string() + ": transpose formula vs kernel rank");
      }
  if (out.pass) out.detail = std::to_string(swept) + " partitions";
  return out;
}

// 4. invariance and the tau sign law
Outcome criterion_bk() {
  Outcome out;
  std::vector<EpsPartition> family{
      EpsPartition::validate({2}, -1), EpsPartition::validate({1, 3}, 1),
      EpsPartition::validate({2, 2}, -1), EpsPartition::validate({2, 4}, -1),
      EpsPartition::validate({3, 3}, 1)};
  for (const auto& lambda : family) {
    WContext ctx(lambda);
    auto r = verify_bk_invariance(ctx);
    out.require(r.status == CheckReport::Status::pass, r.name + ": " + r.detail);
  }
  for (auto lambda : {EpsPartition::validate({2, 4}, -1), EpsPartition::validate({1, 3}, 1)}) {
    WContext ctx(lambda);
    auto r = verify_tau_equivariance(ctx);
    out.require(r.status == CheckReport::Status::pass, r.name + ": " + r.detail);
  }
  if (out.pass) out.detail = "5 invariance sweeps, 2 sign-law sweeps";
  return out;
}

// 5. triangular relation soundness for (2,4) within Kazhdan degree 12
Outcome criterion_yangian() {
  Outcome out;
  WContext ctx(EpsPartition::validate({2, 4}, -1));
  long instances = 0;
  for (const auto& r : verify_yangian_relations(ctx, 12)) {
    out.require(r.passed(), r.name + ": " + r.detail);
    if (r.status == CheckReport::Status::pass) {
      long n = 0;
      std::sscanf(r.detail.c_str(), "%ld", &n);
      instances += n;
    }
  }
  for (int r = 3; r <= 6; ++r)
    out.require(ctx.d(1, r).is_zero(), "d_1^(" + std::to_string(r) + ") should vanish");
  if (out.pass) out.detail = std::to_string(instances) + " relation instances";
  return out;
}

// 6. reduced relation soundness and kernels for ((2,4),-1) and ((1,3),+1)
Outcome criterion_dirac() {
  Outcome out;
  std::string readings;
  long instances = 0;
  struct Job {
    std::vector<int> parts;
    int eps;
    long budget;
  };
  for (const auto& job : {Job{{2, 4}, -1, 12}, Job{{1, 3}, 1, 10}}) {
    WContext ctx(EpsPartition::validate(job.parts, job.eps));
    for (const auto& r : verify_dirac_relations(ctx, job.budget)) {
      out.require(r.passed(), r.name + ": " + r.detail);
      if (r.anchor == "dirac.extra-kernel") readings = r.detail;
      if (r.status == CheckReport::Status::pass && r.anchor != "dirac.extra-kernel") {
        long n = 0;
        std::sscanf(r.detail.c_str(), "%ld", &n);
        instances += n;
      }
    }
    // eta_1 vanishes above the top part
    int top = ctx.lambda().part(1);
    for (int twor = top + 1; twor <= top + 4; ++twor)
      if (twor % 2 == 0)
        out.require(ctx.eta(1, twor).is_zero(),
                    "eta_1^(" + std::to_string(twor) + ") should vanish");
  }
  if (out.pass)
    out.detail = std::to_string(instances) + " relation instances; extra kernel: " + readings;
  return out;
}

// 7. tangent cone for (2,4)
Outcome criterion_cone() {
  Outcome out;
  WContext ctx(EpsPartition::validate({2, 4}, -1));
  for (const auto& r : verify_tangent_cone(ctx))
    out.require(r.passed(), r.name + ": " + r.detail);
  // the quadratic presentation is x1 x2 y modulo (x1 y), components {2,2}
  auto pres = katsylo_presentation(EpsPartition::validate({2, 4}, -1));
  out.require(pres.generators.size() == 3 && pres.relations.size() == 1,
              "presentation is not C[x1,x2,y]/(x1 y)");
  out.require(component_dims(EpsPartition::validate({2, 4}, -1)) == std::vector<int>{2, 2},
              "component dimensions are not {2,2}");
  if (out.pass) out.detail = "identity exact; presentation C[x1,x2,y]/(x1 y); dims {2,2}";
  return out;
}

// 8. property suites: bracket axioms, witness independence, rewriter round trip
Outcome criterion_properties() {
  Outcome out;
  auto gl = LieModel::build(EpsPartition::validate({2, 4}, -1));
  const auto& g0 = gl.tau_fixed();
  std::mt19937_64 rng(20260809);

  auto random_poly = [&](const LieModel& m, int terms, int max_factors) {
    SparsePoly p(m.id());
    for (int t = 0; t < terms; ++t) {
      Monomial mono;
      int fac = 1 + static_cast<int>(rng() % max_factors);
      for (int f = 0; f < fac; ++f) mono.push_back(static_cast<int>(rng() % m.dim()));
      std::sort(mono.begin(), mono.end());
      long c = static_cast<long>(rng() % 9) - 4;
      p.add_term(mono, Rat(c == 0 ? 1 : c));
    }
    return p;
  };

  long triples = 0;
  for (const LieModel* m : std::initializer_list<const LieModel*>{&gl, &g0}) {
    for (int k = 0; k < 110; ++k) {
      auto p = random_poly(*m, 3, 2), q = random_poly(*m, 3, 2), s = random_poly(*m, 3, 2);
      bool anti = (poisson_bracket(p, q, *m) + poisson_bracket(q, p, *m)).is_zero();
      bool jacobi = (poisson_bracket(p, poisson_bracket(q, s, *m), *m) +
                     poisson_bracket(q, poisson_bracket(s, p, *m), *m) +
                     poisson_bracket(s, poisson_bracket(p, q, *m), *m))
                        .is_zero();
      bool leibniz = poisson_bracket(p, q * s, *m) ==
                     poisson_bracket(p, q, *m) * s + q * poisson_bracket(p, s, *m);
      out.require(anti && jacobi && leibniz, "bracket axiom failure on a random triple");
      ++triples;
    }
  }

  // witness independence of the reduced bracket
  BKCache bk(gl);
  SparsePoly wa = bk.invariant({1, 2, 1, 2});
  SparsePoly wb = bk.invariant({2, 1, 1, 2});
  auto a = substitute_chi(wa, gl);
  auto b = substitute_chi(wb, gl);
  auto reference = slice_bracket(a, b, gl, wa, wb);
  std::vector<int> low;
  for (int v = 0; v < gl.dim(); ++v)
    if (gl.degree(v) <= -2) low.push_back(v);
  int witnesses = 0;
  while (witnesses < 20) {
    int v = low[rng() % low.size()];
    auto gen = SparsePoly::variable(v, gl) - SparsePoly::constant(gl.chi(v), gl.id());
    auto perturbed = wa + gen * random_poly(gl, 2, 2);
    if (!(substitute_chi(perturbed, gl) == a)) {
      out.require(false, "perturbed witness changed the reduction");
      break;
    }
    if (!is_slice_invariant(perturbed, gl)) continue;
    out.require(slice_bracket(a, b, gl, perturbed, wb) == reference,
                "witness dependence detected");
    ++witnesses;
  }

  // rewriter round trip on random generator monomials
  WContext ctx(EpsPartition::validate({2, 4}, -1));
  auto gens = ctx.pbw_family_g0(12);
  int trips = 0;
  while (trips < 50) {
    std::vector<int> expo(gens.size(), 0);
    long kdeg = 0;
    for (int pick = 0; pick < 3; ++pick) {
      int g = static_cast<int>(rng() % gens.size());
      if (kdeg + gens[g].kazhdan_degree > 14) continue;
      expo[g] += 1;
      kdeg += gens[g].kazhdan_degree;
    }
    GenPoly want{{expo, Rat(1)}};
    auto got = pbw_rewrite(expand_gen_monomial(expo, gens), gens, ctx.g0());
    out.require(got == want, "rewriter round trip failed");
    ++trips;
  }
  if (out.pass)
    out.detail = std::to_string(triples) + " triples, 20 witnesses, 50 round trips";
  return out;
}

struct Criterion {
  const char* name;
  double seconds_limit;
  Outcome (*fn)();
};

} // namespace

int main() {
  const Criterion criteria[] = {
      {"sheet/component bijection (N <= 30)", 60, criterion_sheet_katsylo},
      {"singular iff multiple sheets (N <= 16)", 60, criterion_singularity},
      {"matrix model soundness (N <= 8, kernels to 10)", 120, criterion_model},
      {"invariance and tau sign law", 300, criterion_bk},
      {"triangular relations, (2,4), degree 12", 600, criterion_yangian},
      {"reduced relations and kernels, (2,4) and (1,3)", 900, criterion_dirac},
      {"tangent cone, (2,4)", 300, criterion_cone},
      {"bracket axioms, witnesses, rewriter round trips", 300, criterion_properties},
  };
  bool all = true;
  int idx = 0;
  for (const auto& c : criteria) {
    ++idx;
    auto t0 = clock_type::now();
    Outcome out = c.fn();
    double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
    bool in_time = secs < c.seconds_limit;
    bool ok = out.pass && in_time;
    all = all && ok;
    std::printf("[%s] %d. %s (%.1f s)%s%s\n", ok ? "PASS" : "FAIL", idx, c.name, secs,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    if (!in_time) std::printf("       exceeded the %.0f s bound\n", c.seconds_limit);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
