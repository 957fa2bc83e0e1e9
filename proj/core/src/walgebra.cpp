#include "nilorb/walgebra.hpp"

#include <algorithm>
#include <sstream>

#include "nilorb/katsylo.hpp"

namespace nilorb {

WContext::WContext(const EpsPartition& lambda)
    : gl_(std::make_shared<LieModel>(LieModel::build(lambda))), bk_(*gl_) {}

int WContext::shift(int i, int j) const { return gl_->shift_entry(i, j); }

const SparsePoly& WContext::d(int i, int r) {
  auto key = std::make_pair(i, r);
  auto it = d_.find(key);
  if (it == d_.end()) it = d_.emplace(key, bk_.invariant({i, i, i - 1, r})).first;
  return it->second;
}

const SparsePoly& WContext::e(int i, int r) {
  auto key = std::make_pair(i, r);
  auto it = e_.find(key);
  if (it == e_.end()) it = e_.emplace(key, bk_.invariant({i, i + 1, i, r})).first;
  return it->second;
}

const SparsePoly& WContext::f(int i, int r) {
  auto key = std::make_pair(i, r);
  auto it = f_.find(key);
  if (it == f_.end()) it = f_.emplace(key, bk_.invariant({i + 1, i, i, r})).first;
  return it->second;
}

const SparsePoly& WContext::dtilde(int i, int r) {
  auto key = std::make_pair(i, r);
  auto it = dt_.find(key);
  if (it != dt_.end()) return it->second;
  SparsePoly acc(gl_->id());
  if (r == 0) {
    acc = one_gl();
  } else {
    for (int t = 1; t <= r; ++t) acc = acc - d(i, t) * dtilde(i, r - t);
  }
  return dt_.emplace(key, std::move(acc)).first->second;
}

SparsePoly WContext::ehat(int i, int r) {
  int expo = r + shift(i, i + 1);
  Rat sign = (expo % 2 == 0) ? 1 : -1;
  return e(i, r) + f(i, r).scaled(sign);
}

SlicePoly WContext::e_long(int i, int j, int r) {
  if (j == i + 1) return substitute_chi(e(i, r), *gl_);
  int s = shift(j - 1, j);
  return slice_bracket(e_long(i, j - 1, r - s), substitute_chi(e(j - 1, s + 1), *gl_), *gl_);
}

SlicePoly WContext::f_long(int i, int j, int r) {
  if (j == i + 1) return substitute_chi(f(i, r), *gl_);
  int s = shift(j, j - 1);
  return slice_bracket(substitute_chi(f(j - 1, s + 1), *gl_), f_long(i, j - 1, r - s), *gl_);
}

SlicePoly WContext::theta_long(int i, int j, int r) {
  if (j == i + 1) return theta(i, r);
  int s = shift(j - 1, j);
  return slice_bracket(theta_long(i, j - 1, r - s), theta(j - 1, s + 1), g0());
}

const SlicePoly& WContext::theta(int i, int r) {
  auto key = std::make_pair(i, r);
  auto it = theta_.find(key);
  if (it == theta_.end()) it = theta_.emplace(key, dirac_project(ehat(i, r), *gl_)).first;
  return it->second;
}

const SlicePoly& WContext::eta(int i, int two_r) {
  auto key = std::make_pair(i, two_r);
  auto it = eta_.find(key);
  if (it != eta_.end()) return it->second;
  SlicePoly val =
      (two_r == 0) ? one_g0() : dirac_project(d(i, two_r), *gl_);
  return eta_.emplace(key, std::move(val)).first->second;
}

const SlicePoly& WContext::eta_tilde(int i, int two_r) {
  auto key = std::make_pair(i, two_r);
  auto it = eta_tilde_.find(key);
  if (it != eta_tilde_.end()) return it->second;
  SlicePoly acc(g0().id());
  if (two_r == 0) {
    acc = one_g0();
  } else {
    for (int t = 2; t <= two_r; t += 2) acc = acc - eta(i, t) * eta_tilde(i, two_r - t);
  }
  return eta_tilde_.emplace(key, std::move(acc)).first->second;
}

std::vector<PBWBasisElement> WContext::pbw_family_gl(long max_kazhdan) {
  std::vector<PBWBasisElement> gens;
  int n = lambda().rank();
  auto push = [&](std::string symbol, int R, SlicePoly expansion) {
    if (2L * R > max_kazhdan) return;
    gens.push_back({std::move(symbol), 2L * R, std::move(expansion)});
  };
  for (int i = 1; i <= n; ++i)
    for (int R = 1; R <= lambda().part(i); ++R)
      push("d[" + std::to_string(i) + "]^(" + std::to_string(R) + ")", R,
           substitute_chi(d(i, R), *gl_));
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      if (i == k) continue;
      int s = shift(i, k);
      int top = s + std::min(lambda().part(i), lambda().part(k));
      for (int R = s + 1; R <= top; ++R) {
        if (2L * R > max_kazhdan) continue;
        std::string sym = (i < k ? "e[" : "f[") + std::to_string(std::min(i, k)) + "," +
                          std::to_string(std::max(i, k)) + "]^(" + std::to_string(R) + ")";
        push(std::move(sym), R, i < k ? e_long(i, k, R) : f_long(k, i, R));
      }
    }
  return gens;
}

std::vector<PBWBasisElement> WContext::pbw_family_g0(long max_kazhdan) {
  std::vector<PBWBasisElement> gens;
  int n = lambda().rank();
  for (int i = 1; i <= n; ++i)
    for (int R = 2; R <= lambda().part(i); R += 2) {
      if (2L * R > max_kazhdan) continue;
      PBWBasisElement g;
      g.symbol = "eta[" + std::to_string(i) + "]^(" + std::to_string(R) + ")";
      g.kazhdan_degree = 2L * R;
      g.expansion = eta(i, R);
      gens.push_back(std::move(g));
    }
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k) {
      int s = shift(i, k);
      for (int R = s + 1; R <= s + std::min(lambda().part(i), lambda().part(k)); ++R) {
        if (2L * R > max_kazhdan) continue;
        PBWBasisElement g;
        g.symbol = "th[" + std::to_string(i) + "," + std::to_string(k) + "]^(" +
                   std::to_string(R) + ")";
        g.kazhdan_degree = 2L * R;
        g.expansion = theta_long(i, k, R);
        gens.push_back(std::move(g));
      }
    }
  return gens;
}

long default_budget(const EpsPartition& lambda) { return 2L * (lambda.part(lambda.rank()) + 2); }

// ---------------------------------------------------------------------------

CheckReport verify_bk_invariance(WContext& ctx) {
  // The explicit sum formula gives invariants exactly along the generating
  // families: diagonal pairs at splitting level i-1 and adjacent pairs at
  // level min(i,k).  Distant row pairs are generated by bracket recursion
  // instead, and their invariance is inherited.
  const LieModel& gl = ctx.gl();
  const auto& lambda = ctx.lambda();
  if (!lambda.uniform_parity())
    return CheckReport::skip("bk-invariance " + lambda.to_string(), "walgebra.invariance",
                             "invariance needs an even grading (uniform parity)");
  int n = lambda.rank();
  long count = 0;
  std::vector<std::tuple<int, int, int>> family;  // (i, k, x)
  for (int i = 1; i <= n; ++i) family.emplace_back(i, i, i - 1);
  for (int i = 1; i <= n - 1; ++i) {
    if ((lambda.part(i + 1) - lambda.part(i)) % 2 != 0) continue;
    family.emplace_back(i, i + 1, i);
    family.emplace_back(i + 1, i, i);
  }
  for (auto [i, k, x] : family) {
    int s = std::abs(lambda.part(i) - lambda.part(k)) / 2;
    for (int R = s + 1; R <= s + std::min(lambda.part(i), lambda.part(k)); ++R) {
      const SparsePoly& t = ctx.bk().invariant({i, k, x, R});
      int bad = first_non_invariant_direction(t, gl);
      if (bad >= 0)
        return CheckReport::failed("bk-invariance " + lambda.to_string(), "walgebra.invariance",
                                   BKIndex{i, k, x, R}.name() + " moves along " +
                                       gl.var_name(bad));
      // linear part must be the matching centraliser element, sign (-1)^{R-1}
      SparsePoly linear(gl.id());
      for (const auto& [mono, c] : t.terms())
        if (mono.size() == 1) linear.add_term(mono, c);
      Rat sign = ((R - 1) % 2 == 0) ? 1 : -1;
      SparsePoly want =
          SparsePoly::from_comb(gl.centraliser_expansion(i, k, 2 * (R - 1)), gl).scaled(sign);
      if (!(linear == want))
        return CheckReport::failed("bk-invariance " + lambda.to_string(), "walgebra.linear-part",
                                   "linear part of " + BKIndex{i, k, x, R}.name() +
                                       " is not the centraliser element");
      ++count;
    }
  }
  return CheckReport::ok("bk-invariance " + lambda.to_string(), "walgebra.invariance",
                         std::to_string(count) + " invariants checked");
}

CheckReport verify_tau_equivariance(WContext& ctx, bool flip_sign) {
  const LieModel& gl = ctx.gl();
  const auto& lambda = ctx.lambda();
  if (!lambda.trivial_involution())
    return CheckReport::skip("tau-equivariance " + lambda.to_string(), "walgebra.tau",
                             "needs a trivial involution");
  int n = lambda.rank();
  long count = 0;
  for (int i = 1; i <= n; ++i)
    for (int k = i; k <= n; ++k) {
      int s = ctx.shift(i, k);
      for (int R = s + 1; R <= s + std::min(lambda.part(i), lambda.part(k)); ++R)
        for (int x = 0; x < n; ++x) {
          const SparsePoly& t = ctx.bk().invariant({i, k, x, R});
          SparsePoly lhs = apply_tau(t, gl);
          // the sign law for t^(R) carries exponent R - (lambda_k - lambda_i)/2
          int expo = R - (lambda.part(k) - lambda.part(i)) / 2 + (flip_sign ? 1 : 0);
          Rat sign = (expo % 2 == 0) ? 1 : -1;
          SparsePoly rhs = ctx.bk().invariant({k, i, x, R}).scaled(sign);
          if (!(lhs == rhs))
            return CheckReport::failed("tau-equivariance " + lambda.to_string(), "walgebra.tau",
                                       "sign law fails at " + BKIndex{i, k, x, R}.name());
          ++count;
        }
    }
  return CheckReport::ok("tau-equivariance " + lambda.to_string(), "walgebra.tau",
                         std::to_string(count) + " instances");
}

namespace {

struct Sweep {
  long count = 0;
  std::string bad;

  void check(bool ok, const std::string& what) {
    ++count;
    if (!ok && bad.empty()) bad = what;
  }
  CheckReport report(const std::string& name, const std::string& anchor) const {
    if (bad.empty())
      return CheckReport::ok(name, anchor, std::to_string(count) + " instances");
    return CheckReport::failed(name, anchor, bad);
  }
};

std::string inst(const std::string& fam, int i, int j, int r, int s, int t = -1) {
  std::ostringstream os;
  os << fam << " i=" << i << " j=" << j << " r=" << r << " s=" << s;
  if (t >= 0) os << " t=" << t;
  return os.str();
}

} // namespace

std::vector<CheckReport> verify_yangian_relations(WContext& ctx, long budget) {
  Stopwatch watch;
  std::vector<CheckReport> out;
  const LieModel& gl = ctx.gl();
  const auto& lambda = ctx.lambda();
  if (!lambda.uniform_parity()) {
    out.push_back(watch.stamp(CheckReport::skip("yangian relations " + lambda.to_string(),
                                                "yangian.r2-r13",
                                                "integral shifts need uniform parity")));
    return out;
  }
  int n = lambda.rank();
  long B = budget / 2;  // bound on the sum of superscripts
  auto sb = [&](const SparsePoly& a, const SparsePoly& b) { return slice_bracket(a, b, gl); };
  std::string tag = " " + lambda.to_string();

  {  // diagonal family commutes
    Sweep sw;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (int r = 1; r <= B - 1; ++r)
          for (int s = 1; r + s <= B; ++s)
            sw.check(sb(ctx.d(i, r), ctx.d(j, s)).is_zero(), inst("d-d", i, j, r, s));
    out.push_back(watch.stamp(sw.report("yangian d-d" + tag, "yangian.r2")));
  }
  {  // e against f
    Sweep sw;
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        int smin_i = ctx.shift(i, i + 1), smin_j = ctx.shift(j + 1, j);
        for (int r = smin_i + 1; r <= B; ++r)
          for (int s = smin_j + 1; r + s <= B; ++s) {
            SparsePoly rhs(gl.id());
            if (i == j) {
              for (int t = 0; t <= r + s - 1; ++t) {
                SparsePoly da = (r + s - 1 - t == 0) ? ctx.one_gl() : ctx.d(i + 1, r + s - 1 - t);
                SparsePoly db = (t == 0) ? ctx.one_gl() : ctx.dtilde(i, t);
                rhs = rhs + da * db;
              }
              rhs = rhs.scaled(Rat(-1));
            }
            sw.check(sb(ctx.e(i, r), ctx.f(j, s)) == rhs, inst("e-f", i, j, r, s));
          }
      }
    out.push_back(watch.stamp(sw.report("yangian e-f" + tag, "yangian.r3")));
  }
  {  // d acting on e and f
    Sweep sw;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        int smin = ctx.shift(j, j + 1);
        for (int r = 1; r <= B; ++r)
          for (int s = smin + 1; r + s <= B; ++s) {
            int delta = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
            SparsePoly rhs_e(gl.id()), rhs_f(gl.id());
            for (int t = 0; t <= r - 1; ++t) {
              SparsePoly dt = (t == 0) ? ctx.one_gl() : ctx.d(i, t);
              rhs_e = rhs_e + dt * ctx.e(j, r + s - 1 - t);
              rhs_f = rhs_f + ctx.f(j, r + s - 1 - t) * dt;
            }
            sw.check(sb(ctx.d(i, r), ctx.e(j, s)) == rhs_e.scaled(Rat(delta)),
                     inst("d-e", i, j, r, s));
            sw.check(sb(ctx.d(i, r), ctx.f(j, s)) == rhs_f.scaled(Rat(-delta)),
                     inst("d-f", i, j, r, s));
            // twisted diagonal versions
            SparsePoly rhs_te(gl.id()), rhs_tf(gl.id());
            for (int t = 0; t <= r - 1; ++t) {
              SparsePoly dt = (t == 0) ? ctx.one_gl() : ctx.dtilde(i, t);
              rhs_te = rhs_te + dt * ctx.e(j, r + s - 1 - t);
              rhs_tf = rhs_tf + ctx.f(j, r + s - 1 - t) * dt;
            }
            sw.check(sb(ctx.dtilde(i, r), ctx.e(j, s)) == rhs_te.scaled(Rat(-delta)),
                     inst("dtilde-e", i, j, r, s));
            sw.check(sb(ctx.dtilde(i, r), ctx.f(j, s)) == rhs_tf.scaled(Rat(delta)),
                     inst("dtilde-f", i, j, r, s));
          }
      }
    out.push_back(watch.stamp(sw.report("yangian d-e/d-f" + tag, "yangian.r4-r5")));
  }
  {  // same-index e pairs, f pairs
    Sweep sw;
    for (int i = 1; i <= n - 1; ++i) {
      int smin = ctx.shift(i, i + 1);
      for (int r = smin + 1; r <= B; ++r)
        for (int s = r + 1; r + s <= B; ++s) {
          SparsePoly rhs_e(gl.id()), rhs_f(gl.id());
          for (int t = r; t <= s - 1; ++t) {
            rhs_e = rhs_e + ctx.e(i, t) * ctx.e(i, r + s - 1 - t);
            rhs_f = rhs_f + ctx.f(i, r + s - 1 - t) * ctx.f(i, t);
          }
          sw.check(sb(ctx.e(i, r), ctx.e(i, s)) == rhs_e, inst("e-e", i, i, r, s));
          sw.check(sb(ctx.f(i, s), ctx.f(i, r)) == rhs_f, inst("f-f", i, i, s, r));
        }
    }
    out.push_back(watch.stamp(sw.report("yangian e-e/f-f" + tag, "yangian.r6-r7")));
  }
  {  // adjacent degree swap
    Sweep sw;
    for (int i = 1; i <= n - 2; ++i) {
      int si = ctx.shift(i, i + 1), sj = ctx.shift(i + 1, i + 2);
      for (int r = si + 1; r <= B; ++r)
        for (int s = sj + 1; r + s + 1 <= B; ++s) {
          SparsePoly lhs_e =
              sb(ctx.e(i, r + 1), ctx.e(i + 1, s)) - sb(ctx.e(i, r), ctx.e(i + 1, s + 1));
          sw.check(lhs_e == ctx.e(i, r) * ctx.e(i + 1, s), inst("e-swap", i, i + 1, r, s));
          SparsePoly lhs_f =
              sb(ctx.f(i, r), ctx.f(i + 1, s + 1)) - sb(ctx.f(i, r + 1), ctx.f(i + 1, s));
          sw.check(lhs_f == ctx.f(i + 1, s) * ctx.f(i, r), inst("f-swap", i, i + 1, r, s));
        }
    }
    out.push_back(watch.stamp(sw.report("yangian swaps" + tag, "yangian.r8-r9")));
  }
  {  // distant pairs and Serre triples
    Sweep sw;
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) <= 1) continue;
        int si = ctx.shift(i, i + 1), sj = ctx.shift(j, j + 1);
        for (int r = si + 1; r <= B; ++r)
          for (int s = sj + 1; r + s <= B; ++s) {
            sw.check(sb(ctx.e(i, r), ctx.e(j, s)).is_zero(), inst("e-far", i, j, r, s));
            sw.check(sb(ctx.f(i, r), ctx.f(j, s)).is_zero(), inst("f-far", i, j, r, s));
          }
      }
    for (int i = 1; i <= n - 1; ++i)
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > n - 1) continue;
        int si = ctx.shift(i, i + 1), sj = ctx.shift(j, j + 1);
        for (int r = si + 1; r <= B; ++r)
          for (int s = si + 1; r + s <= B; ++s) {
            if (r == s) continue;
            for (int t = sj + 1; r + s + t <= B; ++t) {
              SparsePoly serre_e =
                  sb(ctx.e(i, r), sb(ctx.e(i, s), ctx.e(j, t))) +
                  sb(ctx.e(i, s), sb(ctx.e(i, r), ctx.e(j, t)));
              SparsePoly serre_f =
                  sb(ctx.f(i, r), sb(ctx.f(i, s), ctx.f(j, t))) +
                  sb(ctx.f(i, s), sb(ctx.f(i, r), ctx.f(j, t)));
              sw.check(serre_e.is_zero(), inst("e-serre", i, j, r, s, t));
              sw.check(serre_f.is_zero(), inst("f-serre", i, j, r, s, t));
            }
          }
      }
    out.push_back(watch.stamp(sw.report("yangian far/serre" + tag, "yangian.r10-r13")));
  }
  {  // the first diagonal family vanishes past the top part
    Sweep sw;
    for (int r = lambda.part(1) + 1; r <= B; ++r)
      sw.check(ctx.d(1, r).is_zero(), "d_1^(" + std::to_string(r) + ") != 0");
    out.push_back(watch.stamp(sw.report("yangian kernel" + tag, "yangian.kernel")));
  }
  return out;
}

std::vector<CheckReport> verify_dirac_relations(WContext& ctx, long budget) {
  Stopwatch watch;
  std::vector<CheckReport> out;
  const auto& lambda = ctx.lambda();
  if (!lambda.trivial_involution()) {
    out.push_back(watch.stamp(CheckReport::skip("dirac relations", "dirac.dy1-dy8",
                                                "needs a trivial involution")));
    return out;
  }
  const LieModel& g0 = ctx.g0();
  int n = lambda.rank();
  long B = budget / 2;
  auto sb = [&](const SlicePoly& a, const SlicePoly& b) { return slice_bracket(a, b, g0); };
  std::string tag = " " + lambda.to_string();

  {  // eta family commutes; eta acts on theta
    Sweep sw;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (int r = 1; 2 * r <= B - 2; ++r)
          for (int s = 1; 2 * r + 2 * s <= B; ++s)
            sw.check(sb(ctx.eta(i, 2 * r), ctx.eta(j, 2 * s)).is_zero(),
                     inst("eta-eta", i, j, 2 * r, 2 * s));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        int smin = ctx.shift(j, j + 1);
        for (int r = 1; 2 * r <= B; ++r)
          for (int s = smin + 1; 2 * r + s <= B; ++s) {
            int delta = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
            SlicePoly rhs(g0.id());
            for (int t = 0; t <= r - 1; ++t)
              rhs = rhs + ctx.eta(i, 2 * t) * ctx.theta(j, 2 * r + s - 1 - 2 * t);
            sw.check(sb(ctx.eta(i, 2 * r), ctx.theta(j, s)) == rhs.scaled(Rat(delta)),
                     inst("eta-theta", i, j, 2 * r, s));
          }
      }
    out.push_back(watch.stamp(sw.report("dirac eta relations" + tag, "dirac.dy1-dy2")));
  }
  {  // same-index theta pairs, both parities
    Sweep sw;
    for (int i = 1; i <= n - 1; ++i) {
      int smin = ctx.shift(i, i + 1);
      for (int r = smin + 1; r <= B; ++r)
        for (int s = r; r + s <= B; ++s) {
          SlicePoly lhs = sb(ctx.theta(i, r), ctx.theta(i, s));
          if ((r + s) % 2 == 0) {
            // r+s-1 odd: the linear current-level relation picks up the same
            // quadratic tail as the odd case but no eta term
            SlicePoly rhs(g0.id());
            for (int t = r; t <= s - 1; ++t)
              rhs = rhs + (ctx.theta(i, t) * ctx.theta(i, r + s - 1 - t)).scaled(rat(1, 2));
            sw.check(lhs == rhs, inst("theta-theta even", i, i, r, s));
          } else {
            int m = (r + s - 1) / 2;
            SlicePoly rhs(g0.id());
            for (int t = r; t <= s - 1; ++t)
              rhs = rhs + (ctx.theta(i, t) * ctx.theta(i, 2 * m - t)).scaled(rat(1, 2));
            SlicePoly etas(g0.id());
            for (int t = 0; t <= m; ++t)
              etas = etas + ctx.eta(i + 1, 2 * (m - t)) * ctx.eta_tilde(i, 2 * t);
            // coefficient 2(-1)^{s+s_{i,i+1}+1}: the minus from the e-f
            // relation survives into the reduced pair relation
            int expo = s + smin + 1;
            rhs = rhs + etas.scaled((expo % 2 == 0) ? Rat(2) : Rat(-2));
            sw.check(lhs == rhs, inst("theta-theta odd", i, i, r, s));
          }
        }
    }
    out.push_back(watch.stamp(sw.report("dirac theta pairs" + tag, "dirac.dy3-dy4")));
  }
  {  // adjacent degree swap
    Sweep sw;
    for (int i = 1; i <= n - 2; ++i) {
      int si = ctx.shift(i, i + 1), sj = ctx.shift(i + 1, i + 2);
      for (int r = si + 1; r <= B; ++r)
        for (int s = sj + 1; r + s + 1 <= B; ++s) {
          SlicePoly lhs =
              sb(ctx.theta(i, r + 1), ctx.theta(i + 1, s)) -
              sb(ctx.theta(i, r), ctx.theta(i + 1, s + 1));
          sw.check(lhs == (ctx.theta(i, r) * ctx.theta(i + 1, s)).scaled(rat(1, 2)),
                   inst("theta-swap", i, i + 1, r, s));
        }
    }
    out.push_back(watch.stamp(sw.report("dirac theta swap" + tag, "dirac.dy5")));
  }
  {  // distant pairs and Serre triples
    Sweep sw;
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) <= 1) continue;
        int si = ctx.shift(i, i + 1), sj = ctx.shift(j, j + 1);
        for (int r = si + 1; r <= B; ++r)
          for (int s = sj + 1; r + s <= B; ++s)
            sw.check(sb(ctx.theta(i, r), ctx.theta(j, s)).is_zero(),
                     inst("theta-far", i, j, r, s));
      }
    for (int i = 1; i <= n - 1; ++i)
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > n - 1) continue;
        int si = ctx.shift(i, i + 1), sj = ctx.shift(j, j + 1);
        for (int r = si + 1; r <= B; ++r)
          for (int s = si + 1; r + s <= B; ++s)
            for (int t = sj + 1; r + s + t <= B; ++t) {
              SlicePoly lhs =
                  sb(ctx.theta(i, r), sb(ctx.theta(i, s), ctx.theta(j, t))) +
                  sb(ctx.theta(i, s), sb(ctx.theta(i, r), ctx.theta(j, t)));
              if ((r + s) % 2 == 1) {
                sw.check(lhs.is_zero(), inst("theta-serre odd", i, j, r, s, t));
              } else {
                int m = (r + s) / 2;
                SlicePoly rhs(g0.id());
                if (i == j + 1) {
                  for (int m1 = 0; m1 <= m - 1; ++m1)
                    for (int m2 = 0; m2 <= m1; ++m2)
                      rhs = rhs + ctx.eta(i + 1, 2 * (m - m1 - 1)) * ctx.eta_tilde(i, 2 * m2) *
                                      ctx.theta(j, 2 * (m1 - m2) + t);
                }
                if (i + 1 == j) {
                  for (int m1 = 0; m1 <= m - 1; ++m1)
                    for (int m2 = 0; m2 <= m - m1 - 1; ++m2)
                      rhs = rhs + ctx.eta_tilde(i, 2 * m1) * ctx.eta(i + 1, 2 * m2) *
                                      ctx.theta(j, 2 * (m - m1 - m2 - 1) + t);
                }
                int expo = s + ctx.shift(i, i + 1);
                rhs = rhs.scaled((expo % 2 == 0) ? Rat(2) : Rat(-2));
                sw.check(lhs == rhs, inst("theta-serre even", i, j, r, s, t));
              }
            }
      }
    out.push_back(watch.stamp(sw.report("dirac far/serre" + tag, "dirac.dy6-dy8")));
  }
  {  // kernel: eta_1 past the top part
    Sweep sw;
    for (int r = 1; 2 * r <= B; ++r) {
      if (2 * r <= lambda.part(1)) continue;
      sw.check(ctx.eta(1, 2 * r).is_zero(), "eta_1^(" + std::to_string(2 * r) + ") != 0");
    }
    out.push_back(watch.stamp(sw.report("dirac kernel eta" + tag, "dirac.kernel")));
  }
  if (lambda.epsilon() == -1) {  // the extra kernel family, both exponent readings
    // Only the i = 1 element is forced to die: it is the bracket of the
    // vanishing top diagonal generator with a checked one.  For i >= 2 the
    // same formula need not vanish (and does not); the readings are recorded
    // either way.
    std::ostringstream readings;
    bool ok = true;
    for (int i = 1; i <= n - 1; ++i) {
      bool ok_first = true, ok_own = true;
      for (int pass = 0; pass < 2; ++pass) {
        int sread = pass == 0 ? ctx.shift(1, 2) : ctx.shift(i, i + 1);
        SlicePoly sum(ctx.g0().id());
        for (int t = 0; 2 * t <= lambda.part(i); ++t)
          sum = sum + ctx.eta(i, 2 * t) * ctx.theta(i, lambda.part(i) - 2 * t + sread + 1);
        (pass == 0 ? ok_first : ok_own) = sum.is_zero();
      }
      readings << (i > 1 ? "; " : "") << "i=" << i << ": s_{1,2} reading "
               << (ok_first ? "vanishes" : "nonzero") << ", s_{i,i+1} reading "
               << (ok_own ? "vanishes" : "nonzero");
      if (i == 1 && !ok_first && !ok_own) ok = false;
    }
    out.push_back(watch.stamp(
        ok ? CheckReport::ok("dirac extra kernel" + tag, "dirac.extra-kernel", readings.str())
           : CheckReport::failed("dirac extra kernel" + tag, "dirac.extra-kernel",
                                 readings.str())));
  }
  return out;
}

std::vector<CheckReport> verify_tangent_cone(WContext& ctx) {
  Stopwatch watch;
  std::vector<CheckReport> out;
  const auto& lambda = ctx.lambda();
  auto cls = classify(lambda);
  if (!cls.distinguished || lambda.part(1) <= 1) {
    out.push_back(watch.stamp(
        CheckReport::skip("tangent-cone", "cone",
                          "needs a distinguished partition with first part > 1")));
    return out;
  }
  const LieModel& g0 = ctx.g0();
  int n = lambda.rank();
  std::string tag = " " + lambda.to_string();
  auto sb = [&](const SlicePoly& a, const SlicePoly& b) { return slice_bracket(a, b, g0); };

  if (lambda.epsilon() == -1) {  // the exact bracket-ideal identity
    int s12 = ctx.shift(1, 2);
    int half = lambda.part(1) / 2;
    SlicePoly lhs(g0.id());
    for (int t = 0; t <= half; ++t)
      lhs = lhs + ctx.eta(1, 2 * t) * ctx.theta(1, lambda.part(1) - 2 * t + s12 + 1);
    for (int t = 0; t <= half - 1; ++t)
      lhs = lhs - ctx.eta(1, 2 * t) * sb(ctx.eta(1, 2), ctx.theta(1, lambda.part(1) - 2 * t + s12));
    SlicePoly rhs = ctx.eta(1, lambda.part(1)) * ctx.theta(1, s12 + 1);
    out.push_back(watch.stamp(
        lhs == rhs ? CheckReport::ok("cone identity" + tag, "cone.identity", "exact")
                   : CheckReport::failed("cone identity" + tag, "cone.identity",
                                         "identity fails: " + (lhs - rhs).to_string(g0))));
  } else {
    out.push_back(watch.stamp(
        CheckReport::skip("cone identity" + tag, "cone.identity",
                          "the identity concerns the even-part family")));
  }

  {  // quadratic products land in the bracket ideal, graded by generator degree
    Sweep sw;
    long max_kdeg = 0;
    std::vector<std::pair<int, int>> insts;
    for (int i = 1; i <= n - 2; ++i) {
      int r0 = ctx.shift(i, i + 1) + 1, s0 = ctx.shift(i + 1, i + 2) + 1;
      insts.emplace_back(i, 0);
      max_kdeg = std::max(max_kdeg, 2L * (r0 + s0 + 1));
    }
    std::vector<PBWBasisElement> gens;
    if (!insts.empty()) gens = ctx.pbw_family_g0(max_kdeg);
    for (auto [i, unused] : insts) {
      int r0 = ctx.shift(i, i + 1) + 1, s0 = ctx.shift(i + 1, i + 2) + 1;
      SlicePoly combo = (sb(ctx.theta(i, r0 + 1), ctx.theta(i + 1, s0)) -
                         sb(ctx.theta(i, r0), ctx.theta(i + 1, s0 + 1)))
                            .scaled(Rat(2));
      SlicePoly product = ctx.theta(i, r0) * ctx.theta(i + 1, s0);
      sw.check(combo == product, "bracket combination misses the product at i=" + std::to_string(i));
      GenPoly rewritten = pbw_rewrite(combo, gens, g0);
      sw.check(genpoly_min_degree(rewritten) >= 2,
               "bracket-ideal element has a low-order term at i=" + std::to_string(i));
    }
    out.push_back(watch.stamp(sw.count == 0
                                   ? CheckReport::skip("cone products" + tag, "cone.products",
                                                       "no adjacent pairs at this rank")
                                   : sw.report("cone products" + tag, "cone.products")));
  }

  {  // presentation comparison under the unimodular change of generators
    auto pres = katsylo_presentation(lambda);
    auto theta_gen = [&](int i) { return KGen{'y', i, 0}; };
    auto eta_top = [&](int i) { return KGen{'x', i, 1}; };  // eta_i^(2 s_i) after substitution

    std::vector<std::pair<KGen, KGen>> reading_a, reading_b;
    auto add = [](std::vector<std::pair<KGen, KGen>>& v, KGen a, KGen b) {
      if (b < a) std::swap(a, b);
      v.emplace_back(a, b);
    };
    for (int i = 1; i <= n - 2; ++i) {
      add(reading_a, theta_gen(i), theta_gen(i + 1));
      add(reading_b, theta_gen(i), theta_gen(i + 1));
    }
    if (lambda.epsilon() == -1) {
      add(reading_a, theta_gen(1), eta_top(1));
      add(reading_b, theta_gen(1), eta_top(1));
    }
    for (int i = 2; i <= n - 1; ++i) {
      add(reading_a, theta_gen(i), eta_top(i));
      add(reading_b, theta_gen(i), eta_top(i));
    }
    for (int i = 1; i <= n - 2; ++i) add(reading_a, theta_gen(i), eta_top(i + 2));
    for (int i = 1; i <= n - 3; ++i) add(reading_b, theta_gen(i), eta_top(i + 2));
    std::sort(reading_a.begin(), reading_a.end());
    std::sort(reading_b.begin(), reading_b.end());

    bool match_a = reading_a == pres.relations;
    auto dims_of = [&](const std::vector<std::pair<KGen, KGen>>& rels) {
      KatsyloPresentation alt = pres;
      alt.relations = rels;
      std::vector<int> dims;
      for (const auto& c : katsylo_components(alt)) dims.push_back(c.dimension);
      return dims;
    };
    auto dims_a = dims_of(reading_a), dims_b = dims_of(reading_b);
    std::ostringstream detail;
    detail << "full-window reading " << (match_a ? "matches" : "differs from")
           << " the component presentation";
    if (reading_a != reading_b)
      detail << "; short-window reading gives "
             << (dims_a == dims_b ? "the same dimensions" : "different dimensions");
    auto bij = verify_component_bijection(lambda);
    detail << "; " << bij.detail;
    bool ok = match_a && bij.passed();
    out.push_back(watch.stamp(
        ok ? CheckReport::ok("cone presentation" + tag, "cone.presentation", detail.str())
           : CheckReport::failed("cone presentation" + tag, "cone.presentation",
                                 detail.str())));
  }
  return out;
}

} // namespace nilorb
