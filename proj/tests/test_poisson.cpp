#include <doctest.h>

#include <random>

#include "nilorb/bk.hpp"
#include "nilorb/model.hpp"
#include "nilorb/pbw.hpp"
#include "nilorb/poly.hpp"

using namespace nilorb;

namespace {

SparsePoly var(const LieModel& m, int i, int j, int k, int l) {
  return SparsePoly::variable(m.var_of({i, j, k, l}), m);
}

SparsePoly random_poly(const LieModel& m, std::mt19937_64& rng, int terms, int max_factors) {
  SparsePoly p(m.id());
  for (int t = 0; t < terms; ++t) {
    Monomial mono;
    int fac = 1 + static_cast<int>(rng() % max_factors);
    for (int f = 0; f < fac; ++f) mono.push_back(static_cast<int>(rng() % m.dim()));
    std::sort(mono.begin(), mono.end());
    long c = static_cast<long>(rng() % 7) - 3;
    if (c == 0) c = 1;
    p.add_term(mono, Rat(c));
  }
  return p;
}

} // namespace

TEST_CASE("bracket of linear elements is the model bracket") {
  auto m = LieModel::build(EpsPartition::validate({2}, -1));
  auto x = var(m, 1, 1, 1, 2);
  auto y = var(m, 1, 2, 1, 1);
  auto br = poisson_bracket(x, y, m);
  auto want = var(m, 1, 1, 1, 1) - var(m, 1, 2, 1, 2);
  CHECK(br == want);
}

TEST_CASE("Leibniz spot instance") {
  auto m = LieModel::build(EpsPartition::validate({2}, -1));
  auto x = var(m, 1, 2, 1, 1);
  auto y = var(m, 1, 1, 1, 2);
  auto z = var(m, 1, 1, 1, 1);
  CHECK(poisson_bracket(x, y * z, m) ==
        poisson_bracket(x, y, m) * z + y * poisson_bracket(x, z, m));
}

TEST_CASE("the identity element of gl_2 is central") {
  auto m = LieModel::build(EpsPartition::validate({2}, -1));
  auto t1 = var(m, 1, 1, 1, 1) + var(m, 1, 2, 1, 2);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    auto q = random_poly(m, rng, 4, 3);
    CHECK(poisson_bracket(t1, q, m).is_zero());
  }
}

TEST_CASE("chi substitution") {
  auto m = LieModel::build(EpsPartition::validate({2}, -1));
  auto low = var(m, 1, 2, 1, 1);  // degree -2, chi value 1
  auto diag = var(m, 1, 1, 1, 1);
  CHECK(substitute_chi(low * diag, m) == substitute_chi(diag, m));
  auto p = diag * diag + var(m, 1, 1, 1, 2);
  CHECK(substitute_chi(p, m) == p);  // no low variables
  CHECK(substitute_chi(low - SparsePoly::constant(Rat(1), m.id()), m).is_zero());
}

TEST_CASE("slice invariance") {
  auto m = LieModel::build(EpsPartition::validate({2}, -1));
  auto t2 = var(m, 1, 1, 1, 1) * var(m, 1, 2, 1, 2) - var(m, 1, 1, 1, 2);
  CHECK(is_slice_invariant(t2, m));
  CHECK_FALSE(is_slice_invariant(var(m, 1, 1, 1, 2), m));
  CHECK(is_slice_invariant(SparsePoly::constant(Rat(5), m.id()), m));
}

TEST_CASE("slice bracket basics") {
  auto m = LieModel::build(EpsPartition::validate({2}, -1));
  auto t1 = var(m, 1, 1, 1, 1) + var(m, 1, 2, 1, 2);
  auto t2 = var(m, 1, 1, 1, 1) * var(m, 1, 2, 1, 2) - var(m, 1, 1, 1, 2);
  CHECK(slice_bracket(t1, t2, m).is_zero());
  CHECK(slice_bracket(t2, t2, m).is_zero());
  auto a = substitute_chi(t2, m);
  CHECK(slice_bracket(a, a, m, t2, t2).is_zero());
  CHECK_THROWS_AS(slice_bracket(a, a, m, var(m, 1, 1, 1, 2), t2), error);
}

TEST_CASE("witness independence of the reduced bracket") {
  auto m = LieModel::build(EpsPartition::validate({2, 4}, -1));
  BKCache bk(m);
  SparsePoly wa = bk.invariant({1, 2, 1, 2});
  SparsePoly wb = bk.invariant({2, 1, 1, 2});
  auto a = substitute_chi(wa, m);
  auto b = substitute_chi(wb, m);
  auto reference = slice_bracket(a, b, m, wa, wb);

  std::mt19937_64 rng(23);
  std::vector<int> low_vars;
  for (int v = 0; v < m.dim(); ++v)
    if (m.degree(v) <= -2) low_vars.push_back(v);
  int tested = 0;
  while (tested < 20) {
    int v = low_vars[rng() % low_vars.size()];
    auto ideal_gen = SparsePoly::variable(v, m) - SparsePoly::constant(m.chi(v), m.id());
    auto perturbed = wa + ideal_gen * random_poly(m, rng, 2, 2);
    CHECK(substitute_chi(perturbed, m) == a);
    if (!is_slice_invariant(perturbed, m)) continue;  // perturbation may leave the normaliser
    CHECK(slice_bracket(a, b, m, perturbed, wb) == reference);
    ++tested;
  }
}

TEST_CASE("Poisson axioms on random triples") {
  auto gl = LieModel::build(EpsPartition::validate({2, 4}, -1));
  const auto& g0 = gl.tau_fixed();
  std::mt19937_64 rng(37);
  for (const LieModel* m : std::initializer_list<const LieModel*>{&gl, &g0}) {
    for (int k = 0; k < 60; ++k) {
      auto p = random_poly(*m, rng, 3, 2);
      auto q = random_poly(*m, rng, 3, 2);
      auto r = random_poly(*m, rng, 3, 2);
      CHECK((poisson_bracket(p, q, *m) + poisson_bracket(q, p, *m)).is_zero());
      auto jac = poisson_bracket(p, poisson_bracket(q, r, *m), *m) +
                 poisson_bracket(q, poisson_bracket(r, p, *m), *m) +
                 poisson_bracket(r, poisson_bracket(p, q, *m), *m);
      CHECK(jac.is_zero());
      CHECK(poisson_bracket(p, q * r, *m) ==
            poisson_bracket(p, q, *m) * r + q * poisson_bracket(p, r, *m));
    }
  }
}

TEST_CASE("Kazhdan grading: brackets drop degree by two") {
  auto m = LieModel::build(EpsPartition::validate({2, 4}, -1));
  BKCache bk(m);
  auto a = bk.invariant({1, 2, 1, 2});  // Kazhdan degree 4
  auto b = bk.invariant({2, 1, 1, 3});  // Kazhdan degree 6
  CHECK(a.kazhdan_homogeneous(m));
  CHECK(SparsePoly::kazhdan_degree(a.terms().begin()->first, m) == 4);
  auto br = slice_bracket(a, b, m);
  CHECK(br.kazhdan_homogeneous(m));
  if (!br.is_zero())
    CHECK(SparsePoly::kazhdan_degree(br.terms().begin()->first, m) == 4 + 6 - 2);
}

TEST_CASE("model mismatch is refused") {
  auto m1 = LieModel::build(EpsPartition::validate({2}, -1));
  auto m2 = LieModel::build(EpsPartition::validate({1, 1}, 1));
  auto p = SparsePoly::variable(0, m1);
  auto q = SparsePoly::variable(0, m2);
  CHECK_THROWS_AS(poisson_bracket(p, q, m1), error);
}

TEST_CASE("Dirac projection") {
  auto gl = LieModel::build(EpsPartition::validate({2, 4}, -1));
  const auto& g0 = gl.tau_fixed();

  // symmetrisation of a single variable projects onto its fixed coordinate
  int v = gl.var_of({1, 1, 2, 3});
  auto [w, sign] = gl.tau_of_var(v);
  REQUIRE(w != v);
  auto sym = SparsePoly::variable(v, gl) + SparsePoly::variable(w, gl).scaled(sign);
  auto proj = dirac_project(sym, gl);
  REQUIRE(proj.terms().size() == 1);
  CHECK(proj.terms().begin()->first.size() == 1);

  // tau-invariant polynomials with no antisymmetric content are re-based
  BKCache bk(gl);
  auto d2 = bk.invariant({1, 1, 0, 2});
  CHECK(is_tau_invariant(d2, gl));
  auto eta = dirac_project(d2, gl);
  CHECK(is_slice_invariant(eta, g0));

  // non-invariant input is refused
  CHECK_THROWS_AS(dirac_project(SparsePoly::variable(v, gl), gl), error);
}

TEST_CASE("Dirac projection is a Poisson homomorphism on tau invariants") {
  // Random tau-invariant polynomials over the nonnegative part: brackets stay
  // there, the chi substitution is trivial, and the projection must
  // intertwine the two Poisson structures.
  auto gl = LieModel::build(EpsPartition::validate({2, 4}, -1));
  const auto& g0 = gl.tau_fixed();
  std::vector<int> nonneg;
  for (int v = 0; v < gl.dim(); ++v)
    if (gl.degree(v) >= 0) nonneg.push_back(v);
  std::mt19937_64 rng(53);
  auto random_nonneg = [&] {
    SparsePoly p(gl.id());
    for (int t = 0; t < 3; ++t) {
      Monomial mono;
      int fac = 1 + static_cast<int>(rng() % 2);
      for (int f = 0; f < fac; ++f) mono.push_back(nonneg[rng() % nonneg.size()]);
      std::sort(mono.begin(), mono.end());
      long c = static_cast<long>(rng() % 7) - 3;
      p.add_term(mono, Rat(c == 0 ? 1 : c));
    }
    return p;
  };
  for (int k = 0; k < 25; ++k) {
    auto raw_a = random_nonneg();
    auto raw_b = random_nonneg();
    auto a = raw_a + apply_tau(raw_a, gl);
    auto b = raw_b + apply_tau(raw_b, gl);
    auto lhs = dirac_project(substitute_chi(poisson_bracket(a, b, gl), gl), gl);
    auto rhs = slice_bracket(dirac_project(a, gl), dirac_project(b, gl), g0);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("generator rewriting in the reduced algebra of one Jordan block") {
  auto m = LieModel::build(EpsPartition::validate({2}, -1));
  BKCache bk(m);
  std::vector<PBWBasisElement> gens;
  gens.push_back({"t1", 2, substitute_chi(bk.invariant({1, 1, 0, 1}), m)});
  gens.push_back({"t2", 4, substitute_chi(bk.invariant({1, 1, 0, 2}), m)});

  GenPoly g1 = pbw_rewrite(gens[1].expansion, gens, m);
  CHECK(g1 == GenPoly{{{0, 1}, Rat(1)}});

  GenPoly g2 = pbw_rewrite(gens[0].expansion * gens[1].expansion, gens, m);
  CHECK(g2 == GenPoly{{{1, 1}, Rat(1)}});

  auto s = gens[0].expansion * gens[0].expansion + gens[1].expansion.scaled(Rat(4));
  GenPoly g3 = pbw_rewrite(s, gens, m);
  CHECK(g3 == GenPoly{{{2, 0}, Rat(1)}, {{0, 1}, Rat(4)}});

  // an element outside the generated algebra leaves a residual
  auto stray = SparsePoly::variable(m.var_of({1, 1, 1, 2}), m);
  CHECK_THROWS_AS(pbw_rewrite(stray, gens, m), error);
}

TEST_CASE("substituted ideal generators act as Casimirs") {
  // bracketing with v and with v - chi(v) agree after substitution, for
  // every low variable v
  auto m = LieModel::build(EpsPartition::validate({2, 4}, -1));
  std::mt19937_64 rng(61);
  for (int v = 0; v < m.dim(); ++v) {
    if (m.degree(v) > -2) continue;
    auto var_v = SparsePoly::variable(v, m);
    auto shifted = var_v - SparsePoly::constant(m.chi(v), m.id());
    for (int k = 0; k < 3; ++k) {
      auto p = random_poly(m, rng, 3, 2);
      CHECK(substitute_chi(poisson_bracket(p, var_v, m), m) ==
            substitute_chi(poisson_bracket(p, shifted, m), m));
    }
  }
}

TEST_CASE("chi substitution commutes with the Dirac projection") {
  auto gl = LieModel::build(EpsPartition::validate({1, 3}, 1));
  std::mt19937_64 rng(71);
  for (int k = 0; k < 20; ++k) {
    auto raw = random_poly(gl, rng, 3, 2);
    auto inv = raw + apply_tau(raw, gl);
    CHECK(dirac_project(substitute_chi(inv, gl), gl) == dirac_project(inv, gl));
  }
}
