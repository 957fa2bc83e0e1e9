#include "nilorb/model.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <random>
#include <sstream>

namespace nilorb {

const LinComb LieModel::empty_ = {};

std::string MatLabel::name() const {
  std::ostringstream os;
  os << "e[" << i << "," << j << ";" << k << "," << l << "]";
  return os.str();
}

std::string CentraliserLabel::name() const {
  std::ostringstream os;
  os << "c[" << i << "," << k << ";";
  if (twice_r % 2 == 0)
    os << twice_r / 2;
  else
    os << twice_r << "/2";
  os << "]";
  return os.str();
}

namespace {
int next_model_id() {
  static int counter = 0;
  return ++counter;
}
} // namespace

RatMat LieModel::unit_matrix(const MatLabel& lab) const {
  RatMat m(N_, N_);
  m.at(box_index(lab.i, lab.j), box_index(lab.k, lab.l)) = 1;
  return m;
}

std::string LieModel::var_name(int var) const {
  const MatLabel& lab = labels_[var];
  if (kind_ == Kind::gl) return lab.name();
  std::ostringstream os;
  os << "s[" << lab.i << "," << lab.j << ";" << lab.k << "," << lab.l << "]";
  return os.str();
}

LieModel LieModel::build(const EpsPartition& lambda) {
  if (lambda.has_zero_parts()) fail(errc::no_involution, "model wants positive parts");
  LieModel m;
  m.id_ = next_model_id();
  m.kind_ = Kind::gl;
  m.lambda_ = lambda;
  int n = lambda.rank();
  m.N_ = lambda.weight();
  m.box_offset_.resize(n);
  int off = 0;
  for (int i = 1; i <= n; ++i) {
    m.box_offset_[i - 1] = off;
    off += lambda.part(i);
  }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= lambda.part(i); ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= lambda.part(k); ++l) m.labels_.push_back({i, j, k, l});
  auto deg = [&](const MatLabel& a) {
    return 2 * (a.l - a.j) + lambda.part(a.i) - lambda.part(a.k);
  };
  std::sort(m.labels_.begin(), m.labels_.end(), [&](const MatLabel& a, const MatLabel& b) {
    if (deg(a) != deg(b)) return deg(a) < deg(b);
    return a < b;
  });
  m.dim_ = static_cast<int>(m.labels_.size());
  for (int v = 0; v < m.dim_; ++v) {
    const MatLabel& lab = m.labels_[v];
    m.var_index_.emplace(lab, v);
    m.degrees_.push_back(deg(lab));
    m.chi_.push_back((lab.k == lab.i && lab.l == lab.j - 1) ? Rat(1) : Rat(0));
    m.mats_.push_back(m.unit_matrix(lab));
  }

  // e, h and the form matrix J
  m.e_ = RatMat(m.N_, m.N_);
  m.h_ = RatMat(m.N_, m.N_);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < lambda.part(i); ++j)
      m.e_.at(m.box_index(i, j), m.box_index(i, j + 1)) = 1;
    for (int j = 1; j <= lambda.part(i); ++j)
      m.h_.at(m.box_index(i, j), m.box_index(i, j)) = lambda.part(i) + 1 - 2 * j;
  }
  m.row_sign_.resize(n);
  for (int i = 1; i <= n; ++i) m.row_sign_[i - 1] = (i <= lambda.involution()[i - 1]) ? 1 : -1;
  auto jsign = [&](int i, int j) { return m.row_sign_[i - 1] * ((j % 2 == 0) ? 1 : -1); };
  m.J_ = RatMat(m.N_, m.N_);
  for (int i = 1; i <= n; ++i) {
    int ip = lambda.involution()[i - 1];
    for (int j = 1; j <= lambda.part(i); ++j)
      m.J_.at(m.box_index(i, j), m.box_index(ip, lambda.part(i) + 1 - j)) = jsign(i, j);
  }

  // tau on basis labels
  int eps = lambda.epsilon();
  m.tau_map_.resize(m.dim_);
  for (int v = 0; v < m.dim_; ++v) {
    const MatLabel& a = m.labels_[v];
    int kp = lambda.involution()[a.k - 1];
    int ipp = lambda.involution()[a.i - 1];
    MatLabel image{kp, lambda.part(a.k) + 1 - a.l, ipp, lambda.part(a.i) + 1 - a.j};
    Rat sign = -eps * jsign(kp, lambda.part(a.k) + 1 - a.l) * jsign(a.i, a.j);
    m.tau_map_[v] = {m.var_index_.at(image), sign};
  }

  // f from [e,f] = h inside degree -2
  {
    std::vector<int> unknowns;
    for (int v = 0; v < m.dim_; ++v)
      if (m.degrees_[v] == -2) unknowns.push_back(v);
    int cols = static_cast<int>(unknowns.size());
    RatMat sys(m.N_ * m.N_, cols);
    std::vector<Rat> rhs(m.N_ * m.N_);
    for (int c = 0; c < cols; ++c) {
      RatMat ad = commutator(m.e_, m.mats_[unknowns[c]]);
      for (int r = 0; r < m.N_; ++r)
        for (int s = 0; s < m.N_; ++s) sys.at(r * m.N_ + s, c) = ad.at(r, s);
    }
    for (int r = 0; r < m.N_; ++r)
      for (int s = 0; s < m.N_; ++s) rhs[r * m.N_ + s] = m.h_.at(r, s);
    auto sol = solve_linear(sys, rhs);
    if (!sol || sys.rank() != cols) fail(errc::no_sl2, "no unique f with [e,f] = h");
    m.f_ = RatMat(m.N_, m.N_);
    for (int c = 0; c < cols; ++c)
      if ((*sol)[c] != 0) m.f_ = m.f_ + m.mats_[unknowns[c]].scaled((*sol)[c]);
    RatMat hf = commutator(m.h_, m.f_);
    if (!(hf == m.f_.scaled(Rat(-2)))) fail(errc::no_sl2, "[h,f] != -2f");
  }

  // bracket table straight from the unit formula
  for (int a = 0; a < m.dim_; ++a) {
    const MatLabel& x = m.labels_[a];
    for (int b = a + 1; b < m.dim_; ++b) {
      const MatLabel& y = m.labels_[b];
      std::map<int, Rat> acc;
      if (x.k == y.i && x.l == y.j) acc[m.var_index_.at({x.i, x.j, y.k, y.l})] += 1;
      if (y.k == x.i && y.l == x.j) acc[m.var_index_.at({y.i, y.j, x.k, x.l})] -= 1;
      LinComb lc;
      for (auto& [v, c] : acc)
        if (c != 0) lc.emplace_back(v, c);
      if (!lc.empty()) m.table_.emplace(std::make_pair(a, b), std::move(lc));
    }
  }

  if (lambda.trivial_involution()) {
    m.sub_ = std::make_shared<LieModel>(build_tau_fixed(m));
    // coordinates of each gl variable inside the subalgebra
    m.dirac_coord_.resize(m.dim_);
    for (int v = 0; v < m.dim_; ++v) {
      auto [w, sign] = m.tau_map_[v];
      if (w == v) {
        if (sign == 1) m.dirac_coord_[v] = {{m.sub_->var_of(m.labels_[v]), Rat(1)}};
        continue;  // anti-fixed: component vanishes
      }
      int rep = std::min(v, w);
      Rat coeff = rat(1, 2);
      if (rep != v) coeff *= m.tau_map_[rep].second;  // v = tau of rep up to that sign
      m.dirac_coord_[v] = {{m.sub_->var_of(m.labels_[rep]), coeff}};
    }
  }
  return m;
}

LieModel LieModel::build_tau_fixed(const LieModel& gl) {
  if (!gl.lambda().trivial_involution())
    fail(errc::mixed_parity, "tau-fixed model needs a trivial involution (uniform parity)");
  LieModel m;
  m.id_ = next_model_id();
  m.kind_ = Kind::tau_fixed;
  m.lambda_ = gl.lambda_;
  m.N_ = gl.N_;
  m.box_offset_ = gl.box_offset_;
  m.e_ = gl.e_;
  m.h_ = gl.h_;
  m.f_ = gl.f_;
  m.J_ = gl.J_;

  // basis: e_a + tau(e_a) over label orbits, plus fixed labels when tau acts
  // there by +1
  struct Entry {
    MatLabel rep;
    RatMat mat;
    int deg;
  };
  std::vector<Entry> entries;
  for (int v = 0; v < gl.dim_; ++v) {
    auto [w, sign] = gl.tau_map_[v];
    if (w == v) {
      if (sign == 1) entries.push_back({gl.labels_[v], gl.mats_[v], gl.degrees_[v]});
    } else if (v < w) {
      RatMat u = gl.mats_[v] + gl.mats_[w].scaled(sign);
      entries.push_back({gl.labels_[v], std::move(u), gl.degrees_[v]});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.rep < b.rep;
  });
  m.dim_ = static_cast<int>(entries.size());
  for (int v = 0; v < m.dim_; ++v) {
    m.labels_.push_back(entries[v].rep);
    m.var_index_.emplace(entries[v].rep, v);
    m.degrees_.push_back(entries[v].deg);
    m.mats_.push_back(entries[v].mat);
    Rat c = 0;
    RatMat prod = m.e_ * entries[v].mat;
    c = prod.trace();
    m.chi_.push_back(c);
  }
  for (int a = 0; a < m.dim_; ++a)
    for (int b = a + 1; b < m.dim_; ++b) {
      RatMat br = commutator(m.mats_[a], m.mats_[b]);
      if (br.is_zero()) continue;
      LinComb lc = m.expand(br);
      if (!lc.empty()) m.table_.emplace(std::make_pair(a, b), std::move(lc));
    }
  return m;
}

const LinComb& LieModel::bracket(int a, int b) const {
  if (a == b) return empty_;
  auto it = table_.find(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  if (it == table_.end()) return empty_;
  return it->second;
}

LinComb LieModel::expand(const RatMat& x) const {
  LinComb out;
  RatMat residue = x;
  for (int v = 0; v < dim_; ++v) {
    const MatLabel& lab = labels_[v];
    const Rat& c = residue.at(box_index(lab.i, lab.j), box_index(lab.k, lab.l));
    if (c != 0) {
      out.emplace_back(v, c);
      residue = residue - mats_[v].scaled(c);
    }
  }
  if (!residue.is_zero()) fail(errc::model_mismatch, "matrix is not in the model span");
  return out;
}

int LieModel::var_of(const MatLabel& lab) const {
  auto it = var_index_.find(lab);
  if (it == var_index_.end()) fail(errc::index_out_of_range, "no such label " + lab.name());
  return it->second;
}

std::pair<int, Rat> LieModel::tau_of_var(int var) const {
  if (kind_ != Kind::gl) fail(errc::model_mismatch, "tau acts on the gl model");
  return tau_map_[var];
}

RatMat LieModel::tau(const RatMat& x) const {
  return (J_ * x.transpose() * J_).scaled(Rat(-lambda_.epsilon()));
}

const LinComb& LieModel::dirac_coordinate(int gl_var) const {
  if (!sub_) fail(errc::mixed_parity, "no tau-fixed companion model");
  return dirac_coord_[gl_var];
}

const LieModel& LieModel::tau_fixed() const {
  if (!sub_) fail(errc::mixed_parity, "no tau-fixed companion model");
  return *sub_;
}

int LieModel::shift_entry(int i, int k) const {
  int d = lambda_.part(i) - lambda_.part(k);
  if (d < 0) d = -d;
  if (d % 2 != 0) fail(errc::mixed_parity, "half-integral shift entry");
  return d / 2;
}

std::vector<CentraliserLabel> LieModel::centraliser_labels() const {
  std::vector<CentraliserLabel> out;
  int n = lambda_.rank();
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      int twice_s = std::abs(lambda_.part(i) - lambda_.part(k));
      int mn = std::min(lambda_.part(i), lambda_.part(k));
      for (int t = 0; t < mn; ++t) out.push_back({i, k, twice_s + 2 * t});
    }
  return out;
}

LinComb LieModel::centraliser_expansion(int i, int k, int twice_r) const {
  // sum of e_{i,j;k,j+d} with 2d = twice_r - (lambda_i - lambda_k)
  int num = twice_r - (lambda_.part(i) - lambda_.part(k));
  if (num % 2 != 0) return {};
  int d = num / 2;
  LinComb out;
  for (int j = 1; j <= lambda_.part(i); ++j) {
    int l = j + d;
    if (l < 1 || l > lambda_.part(k)) continue;
    out.emplace_back(var_of({i, j, k, l}), Rat(1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int LieModel::g0_dimension() const {
  int count = 0;
  for (int v = 0; v < dim_; ++v) {
    auto [w, sign] = tau_map_[v];
    if (w == v) {
      if (sign == 1) ++count;
    } else if (v < w) {
      ++count;
    }
  }
  return count;
}

int LieModel::g0_kernel_dimension() const {
  std::vector<RatMat> basis;
  for (int v = 0; v < dim_; ++v) {
    auto [w, sign] = tau_map_[v];
    if (w == v && sign == 1)
      basis.push_back(mats_[v]);
    else if (w != v && v < w)
      basis.push_back(mats_[v] + mats_[w].scaled(sign));
  }
  std::vector<std::vector<Rat>> rows;
  for (const auto& u : basis) {
    RatMat ad = commutator(e_, u);
    std::vector<Rat> row;
    row.reserve(static_cast<std::size_t>(N_) * N_);
    for (int r = 0; r < N_; ++r)
      for (int c = 0; c < N_; ++c) row.push_back(ad.at(r, c));
    rows.push_back(std::move(row));
  }
  int rank = row_reduce(rows);
  return static_cast<int>(basis.size()) - rank;
}

void LieModel::perturb_bracket_for_testing(int a, int b) {
  auto it = table_.find(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  if (it == table_.end() || it->second.empty())
    fail(errc::index_out_of_range, "no stored bracket to perturb");
  it->second.front().second = -it->second.front().second;
}

// ---------------------------------------------------------------------------

namespace {

RatMat eval_comb(const LieModel& m, const LinComb& lc) {
  RatMat out(m.N(), m.N());
  for (const auto& [v, c] : lc) out = out + m.matrix(v).scaled(c);
  return out;
}

} // namespace

std::vector<CheckReport> verify_model(const LieModel& model) {
  Stopwatch watch;
  std::vector<CheckReport> out;
  const auto& lambda = model.lambda();
  int n = lambda.rank();
  int eps = lambda.epsilon();
  if (model.kind() != LieModel::Kind::gl) {
    out.push_back(watch.stamp(CheckReport::skip("model-check", "model",
                                                "structural sweep applies to the pyramid model")));
    return out;
  }

  {  // J^{-1} = eps J, i.e. J^2 = eps
    RatMat j2 = model.J_matrix() * model.J_matrix();
    bool ok = j2 == RatMat::identity(model.N()).scaled(Rat(eps));
    out.push_back(watch.stamp(ok ? CheckReport::ok("J-inverse", "model.J")
                                 : CheckReport::failed("J-inverse", "model.J", "J^2 != eps*I")));
  }
  {  // tau is an involutive automorphism; table against matrices
    std::string bad;
    for (int a = 0; a < model.dim() && bad.empty(); ++a) {
      RatMat ta = model.tau(model.matrix(a));
      RatMat taa = model.tau(ta);
      if (!(taa == model.matrix(a))) bad = "tau^2 misses " + model.var_name(a);
    }
    for (int a = 0; a < model.dim() && bad.empty(); ++a) {
      for (int b = a + 1; b < model.dim(); ++b) {
        RatMat lhs = model.tau(eval_comb(model, model.bracket(a, b)));
        RatMat rhs = commutator(model.tau(model.matrix(a)), model.tau(model.matrix(b)));
        if (!(lhs == rhs)) {
          bad = "tau automorphism fails on (" + model.var_name(a) + ", " + model.var_name(b) + ")";
          break;
        }
      }
    }
    out.push_back(watch.stamp(bad.empty() ? CheckReport::ok("tau-automorphism", "model.tau")
                                          : CheckReport::failed("tau-automorphism", "model.tau", bad)));
  }
  {  // tau fixes the sl2 triple; the triple relations themselves
    bool fixes = model.tau(model.e_matrix()) == model.e_matrix() &&
                 model.tau(model.h_matrix()) == model.h_matrix() &&
                 model.tau(model.f_matrix()) == model.f_matrix();
    bool sl2 = commutator(model.e_matrix(), model.f_matrix()) == model.h_matrix() &&
               commutator(model.h_matrix(), model.e_matrix()) == model.e_matrix().scaled(Rat(2)) &&
               commutator(model.h_matrix(), model.f_matrix()) == model.f_matrix().scaled(Rat(-2));
    out.push_back(watch.stamp(fixes && sl2
                      ? CheckReport::ok("sl2-triple", "model.sl2")
                      : CheckReport::failed("sl2-triple", "model.sl2",
                                            fixes ? "sl2 relations fail" : "tau moves e, h or f")));
  }
  {  // grading: ad(h) eigenvalue matches the stated degree
    std::string bad;
    for (int a = 0; a < model.dim(); ++a) {
      RatMat ad = commutator(model.h_matrix(), model.matrix(a));
      if (!(ad == model.matrix(a).scaled(Rat(model.degree(a))))) {
        bad = model.var_name(a);
        break;
      }
    }
    out.push_back(watch.stamp(bad.empty()
                                  ? CheckReport::ok("dynkin-grading", "model.grading")
                                  : CheckReport::failed("dynkin-grading", "model.grading",
                                                        "wrong ad(h) eigenvalue at " + bad)));
  }
  {  // chi is supported in degree -2; kappa(g0, g1) = 0 and chi(g1) = 0
    std::string bad;
    for (int a = 0; a < model.dim(); ++a) {
      if (model.chi(a) != 0 && model.degree(a) != -2) {
        bad = "chi outside degree -2 at " + model.var_name(a);
        break;
      }
    }
    if (bad.empty() && model.kind() == LieModel::Kind::gl) {
      std::vector<RatMat> g0, g1;
      for (int v = 0; v < model.dim(); ++v) {
        auto [w, sign] = model.tau_of_var(v);
        if (w == v) {
          (sign == 1 ? g0 : g1).push_back(model.matrix(v));
        } else if (v < w) {
          g0.push_back(model.matrix(v) + model.matrix(w).scaled(sign));
          g1.push_back(model.matrix(v) - model.matrix(w).scaled(sign));
        }
      }
      for (const auto& u : g1) {
        if ((model.e_matrix() * u).trace() != 0) {
          bad = "chi(g1) != 0";
          break;
        }
      }
      for (const auto& x : g0) {
        for (const auto& y : g1)
          if ((x * y).trace() != 0) {
            bad = "kappa(g0,g1) != 0";
            break;
          }
        if (!bad.empty()) break;
      }
    }
    out.push_back(watch.stamp(bad.empty() ? CheckReport::ok("form-and-chi", "model.kappa")
                                          : CheckReport::failed("form-and-chi", "model.kappa", bad)));
  }
  {  // centraliser: count, [e,c] = 0, bracket table, tau sign
    auto labels = model.centraliser_labels();
    long expected = 0;
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) expected += std::min(lambda.part(i), lambda.part(k));
    std::string bad;
    if (static_cast<long>(labels.size()) != expected) bad = "label count mismatch";

    std::vector<RatMat> cmat;
    for (const auto& cl : labels)
      cmat.push_back(eval_comb(model, model.centraliser_expansion(cl.i, cl.k, cl.twice_r)));
    for (std::size_t a = 0; a < labels.size() && bad.empty(); ++a) {
      if (!commutator(model.e_matrix(), cmat[a]).is_zero())
        bad = "[e, " + labels[a].name() + "] != 0";
    }
    long pairs = 0;
    for (std::size_t a = 0; a < labels.size() && bad.empty(); ++a) {
      for (std::size_t b = 0; b < labels.size() && bad.empty(); ++b) {
        const auto& x = labels[a];
        const auto& y = labels[b];
        RatMat lhs = commutator(cmat[a], cmat[b]);
        RatMat rhs(model.N(), model.N());
        if (x.k == y.i) rhs = rhs + eval_comb(model, model.centraliser_expansion(x.i, y.k, x.twice_r + y.twice_r));
        if (x.i == y.k) rhs = rhs - eval_comb(model, model.centraliser_expansion(y.i, x.k, x.twice_r + y.twice_r));
        ++pairs;
        if (!(lhs == rhs)) bad = "bracket (" + x.name() + ", " + y.name() + ")";
      }
    }
    if (bad.empty() && lambda.trivial_involution()) {
      for (const auto& cl : labels) {
        RatMat lhs = model.tau(eval_comb(model, model.centraliser_expansion(cl.i, cl.k, cl.twice_r)));
        int expo = (cl.twice_r - (lambda.part(cl.k) - lambda.part(cl.i))) / 2 - 1;
        Rat sign = (expo % 2 == 0) ? 1 : -1;
        RatMat rhs =
            eval_comb(model, model.centraliser_expansion(cl.k, cl.i, cl.twice_r)).scaled(sign);
        if (!(lhs == rhs)) {
          bad = "tau sign at " + cl.name();
          break;
        }
      }
    }
    out.push_back(watch.stamp(bad.empty() ? CheckReport::ok("centraliser-table", "model.centraliser",
                                                std::to_string(pairs) + " bracket pairs checked")
                              : CheckReport::failed("centraliser-table", "model.centraliser", bad)));
  }
  {  // dimensions: g0 and the ad(e) kernels
    long N = model.N();
    long want_g0 = (eps == 1) ? N * (N - 1) / 2 : N * (N + 1) / 2;
    std::string bad;
    if (model.g0_dimension() != want_g0) bad = "dim g0 mismatch";
    long min_sum = 0;
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) min_sum += std::min(lambda.part(i), lambda.part(k));
    if (bad.empty()) {
      std::vector<std::vector<Rat>> rows;
      for (int v = 0; v < model.dim(); ++v) {
        RatMat ad = commutator(model.e_matrix(), model.matrix(v));
        std::vector<Rat> row;
        for (int r = 0; r < model.N(); ++r)
          for (int c = 0; c < model.N(); ++c) row.push_back(ad.at(r, c));
        rows.push_back(std::move(row));
      }
      long gl_kernel = model.dim() - row_reduce(rows);
      if (gl_kernel != min_sum) bad = "dim ker ad(e) on gl mismatch";
    }
    if (bad.empty()) {
      long sq = 0;
      for (int c : transpose_partition(lambda.parts())) sq += static_cast<long>(c) * c;
      long odd = 0;
      for (int p : lambda.parts())
        if (p % 2 != 0) ++odd;
      long formula = (sq - (eps == 1 ? odd : -odd)) / 2;
      if (model.g0_kernel_dimension() != formula) bad = "dim ker ad(e) on g0 mismatch";
    }
    out.push_back(watch.stamp(bad.empty() ? CheckReport::ok("dimensions", "model.dimensions")
                                          : CheckReport::failed("dimensions", "model.dimensions", bad)));
  }
  {  // antisymmetry and Jacobi on the cached table (spot sweep)
    std::string bad;
    std::mt19937_64 rng(20240917);
    int d = model.dim();
    long budget = 4000;
    auto table_bracket = [&](int a, int b) {
      RatMat r(model.N(), model.N());
      if (a == b) return r;
      r = eval_comb(model, model.bracket(std::min(a, b), std::max(a, b)));
      return a < b ? r : r.scaled(Rat(-1));
    };
    for (long t = 0; t < budget && bad.empty(); ++t) {
      int a = static_cast<int>(rng() % d), b = static_cast<int>(rng() % d),
          c = static_cast<int>(rng() % d);
      RatMat jac = commutator(model.matrix(a), table_bracket(b, c)) +
                   commutator(model.matrix(b), table_bracket(c, a)) +
                   commutator(model.matrix(c), table_bracket(a, b));
      if (!jac.is_zero())
        bad = "Jacobi fails at (" + model.var_name(a) + "," + model.var_name(b) + "," +
              model.var_name(c) + ")";
      if (bad.empty() && !(table_bracket(a, b) == commutator(model.matrix(a), model.matrix(b))))
        bad = "table entry (" + model.var_name(a) + "," + model.var_name(b) + ")";
    }
    out.push_back(watch.stamp(bad.empty() ? CheckReport::ok("bracket-table", "model.jacobi")
                                          : CheckReport::failed("bracket-table", "model.jacobi", bad)));
  }
  return out;
}

} // namespace nilorb
