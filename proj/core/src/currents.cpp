#include "nilorb/currents.hpp"

#include <algorithm>
#include <sstream>

#include "nilorb/matrix.hpp"

namespace nilorb {

ShiftMatrix::ShiftMatrix(std::vector<std::vector<int>> entries) : s_(std::move(entries)) {
  n_ = static_cast<int>(s_.size());
  for (const auto& row : s_)
    if (static_cast<int>(row.size()) != n_) fail(errc::bad_shift_matrix, "matrix must be square");
  for (int i = 1; i <= n_; ++i) {
    if (at(i, i) != 0) fail(errc::bad_shift_matrix, "diagonal must vanish");
    for (int j = 1; j <= n_; ++j)
      if (at(i, j) < 0) fail(errc::bad_shift_matrix, "entries must be nonnegative");
  }
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      for (int k = 1; k <= n_; ++k) {
        bool monotone = (i <= j && j <= k) || (k <= j && j <= i);
        if (monotone && at(i, k) != at(i, j) + at(j, k))
          fail(errc::bad_shift_matrix, "additivity fails at (" + std::to_string(i) + "," +
                                           std::to_string(j) + "," + std::to_string(k) + ")");
      }
}

ShiftMatrix ShiftMatrix::symmetric_for(const EpsPartition& lambda) {
  int n = lambda.rank();
  std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int d = std::abs(lambda.part(i) - lambda.part(j));
      if (d % 2 != 0)
        fail(errc::mixed_parity, "symmetric shift matrix needs uniform parity");
      s[i - 1][j - 1] = d / 2;
    }
  return ShiftMatrix(std::move(s));
}

bool ShiftMatrix::symmetric() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::string CurrentLabel::name() const {
  std::ostringstream os;
  os << "e[" << i << "," << j << "]t^" << r;
  return os.str();
}

CurrentElement CurrentElement::basis(const ShiftMatrix& sigma, int r_max, int i, int j, int r) {
  if (i < 1 || j < 1 || i > sigma.n() || j > sigma.n() || r < sigma.at(i, j) || r > r_max)
    fail(errc::index_out_of_range, CurrentLabel{i, j, r}.name());
  CurrentElement e(&sigma, r_max);
  e.add({i, j, r}, Rat(1));
  return e;
}

void CurrentElement::add(const CurrentLabel& lab, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(lab);
  if (it == terms_.end()) {
    terms_.emplace(lab, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CurrentElement CurrentElement::operator+(const CurrentElement& o) const {
  CurrentElement out = *this;
  for (const auto& [lab, c] : o.terms_) out.add(lab, c);
  return out;
}

CurrentElement CurrentElement::operator-(const CurrentElement& o) const {
  CurrentElement out = *this;
  for (const auto& [lab, c] : o.terms_) out.add(lab, -c);
  return out;
}

CurrentElement CurrentElement::scaled(const Rat& c) const {
  CurrentElement out(sigma_, r_max_);
  if (c == 0) return out;
  for (const auto& [lab, x] : terms_) out.terms_.emplace(lab, x * c);
  return out;
}

std::string CurrentElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lab, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << nilorb::to_string(c) << " * " << lab.name();
  }
  return os.str();
}

CurrentElement current_bracket(const CurrentElement& a, const CurrentElement& b) {
  CurrentElement out(a.sigma(), a.r_max());
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      int r = x.r + y.r;
      Rat c = cx * cy;
      if (x.j == y.i || y.j == x.i) {
        if (r > a.r_max())
          fail(errc::truncation_overflow,
               "bracket reaches degree " + std::to_string(r) + " past R_max " +
                   std::to_string(a.r_max()));
      }
      if (x.j == y.i) out.add({x.i, y.j, r}, c);
      if (y.j == x.i) out.add({y.i, x.j, r}, -c);
    }
  }
  return out;
}

CurrentElement tau_current(const CurrentElement& x) {
  if (!x.sigma()->symmetric()) fail(errc::bad_shift_matrix, "tau needs a symmetric shift matrix");
  CurrentElement out(x.sigma(), x.r_max());
  for (const auto& [lab, c] : x.terms()) {
    int expo = lab.r - 1 + x.sigma()->at(lab.i, lab.j);
    Rat sign = (expo % 2 == 0) ? 1 : -1;
    out.add({lab.j, lab.i, lab.r}, c * sign);
  }
  return out;
}

namespace {

struct CurrentCtx {
  const ShiftMatrix& sigma;
  int r_max;
  int tau_flip = 0;  // fault injection: offsets the theta symmetrisation sign

  CurrentElement d(int i, int r) const { return CurrentElement::basis(sigma, r_max, i, i, r); }
  CurrentElement e(int i, int r) const { return CurrentElement::basis(sigma, r_max, i, i + 1, r); }
  CurrentElement f(int i, int r) const { return CurrentElement::basis(sigma, r_max, i + 1, i, r); }
  CurrentElement eta(int i, int r) const { return d(i, r); }
  CurrentElement theta(int i, int r) const {
    int expo = r - 1 + sigma.at(i, i + 1) + tau_flip;
    Rat sign = (expo % 2 == 0) ? 1 : -1;
    return e(i, r) + f(i, r).scaled(sign);
  }

  CurrentElement upper(int i, int j, int r) const {  // e_{i,j}t^r by recursion, i < j
    if (j == i + 1) return e(i, r);
    return current_bracket(e(i, sigma.at(i, i + 1)), upper(i + 1, j, r - sigma.at(i, i + 1)));
  }
  CurrentElement lower(int i, int j, int r) const {  // i > j
    if (i == j + 1) return f(j, r);
    return current_bracket(f(i - 1, sigma.at(i, i - 1)), lower(i - 1, j, r - sigma.at(i, i - 1)));
  }
  CurrentElement theta_chain(int i, int j, int r) const {  // i < j
    if (j == i + 1) return theta(i, r);
    return current_bracket(theta(i, sigma.at(i, i + 1)),
                           theta_chain(i + 1, j, r - sigma.at(i, i + 1)));
  }
};

using Instance = std::pair<bool, std::string>;

Instance check_equal(const CurrentElement& lhs, const CurrentElement& rhs,
                     const std::string& what) {
  if (lhs == rhs) return {true, ""};
  return {false, what + ": got " + lhs.to_string() + ", want " + rhs.to_string()};
}

CheckReport sweep(const std::string& name, const std::string& anchor, long count,
                  const std::string& first_fail) {
  if (first_fail.empty())
    return CheckReport::ok(name, anchor, std::to_string(count) + " instances");
  return CheckReport::failed(name, anchor, first_fail);
}

std::vector<CheckReport> untwisted_sweep(const CurrentCtx& c) {
  Stopwatch watch;
  std::vector<CheckReport> out;
  int n = c.sigma.n();
  auto s = [&](int i, int j) { return c.sigma.at(i, j); };
  CurrentElement zero(&c.sigma, c.r_max);

  {  // diagonal family commutes; d acts on e and f by degree shifts
    long count = 0;
    std::string bad;
    for (int i = 1; i <= n && bad.empty(); ++i)
      for (int j = 1; j <= n && bad.empty(); ++j)
        for (int r = 0; r <= c.r_max && bad.empty(); ++r)
          for (int q = 0; r + q <= c.r_max; ++q) {
            ++count;
            auto [ok, msg] = check_equal(current_bracket(c.d(i, r), c.d(j, q)), zero,
                                         "{d,d} at i=" + std::to_string(i));
            if (!ok) {
              bad = msg;
              break;
            }
          }
    out.push_back(watch.stamp(sweep("current d-d", "currents.r1", count, bad)));
  }
  {
    long count = 0;
    std::string bad;
    for (int i = 1; i <= n && bad.empty(); ++i)
      for (int j = 1; j <= n - 1 && bad.empty(); ++j)
        for (int r = 0; r <= c.r_max && bad.empty(); ++r)
          for (int q = s(j, j + 1); r + q <= c.r_max; ++q) {
            ++count;
            int delta = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
            CurrentElement want = delta == 0 ? zero : c.e(j, r + q).scaled(Rat(delta));
            auto [ok, msg] = check_equal(current_bracket(c.d(i, r), c.e(j, q)), want,
                                         "{d_" + std::to_string(i) + ",e_" + std::to_string(j) +
                                             "} r=" + std::to_string(r) + ",s=" + std::to_string(q));
            if (!ok) {
              bad = msg;
              break;
            }
            int delta_f = (i == j + 1 ? 1 : 0) - (i == j ? 1 : 0);
            CurrentElement want_f = delta_f == 0 ? zero : c.f(j, r + q).scaled(Rat(delta_f));
            auto [ok2, msg2] = check_equal(current_bracket(c.d(i, r), c.f(j, q)), want_f,
                                           "{d_" + std::to_string(i) + ",f_" + std::to_string(j) + "}");
            if (!ok2) {
              bad = msg2;
              break;
            }
          }
    out.push_back(watch.stamp(sweep("current d-e/d-f", "currents.r2-r3", count, bad)));
  }
  {  // adjacent degree-swap families and orthogonality
    long count = 0;
    std::string bad;
    for (int i = 1; i + 1 <= n - 1 && bad.empty(); ++i)
      for (int r1 = s(i, i + 1); r1 + 1 <= c.r_max && bad.empty(); ++r1)
        for (int r2 = s(i + 1, i + 2); r1 + r2 + 1 <= c.r_max; ++r2) {
          ++count;
          auto lhs = current_bracket(c.e(i, r1), c.e(i + 1, r2 + 1)) -
                     current_bracket(c.e(i, r1 + 1), c.e(i + 1, r2));
          auto lhs_f = current_bracket(c.f(i, r1), c.f(i + 1, r2 + 1)) -
                       current_bracket(c.f(i, r1 + 1), c.f(i + 1, r2));
          auto [ok, msg] = check_equal(lhs, zero, "e-swap i=" + std::to_string(i));
          auto [ok2, msg2] = check_equal(lhs_f, zero, "f-swap i=" + std::to_string(i));
          if (!ok || !ok2) {
            bad = ok ? msg2 : msg;
            break;
          }
        }
    for (int i = 1; i <= n - 1 && bad.empty(); ++i)
      for (int j = 1; j <= n - 1 && bad.empty(); ++j) {
        if (std::abs(i - j) == 1) continue;
        for (int r = s(i, i + 1); r <= c.r_max && bad.empty(); ++r)
          for (int q = s(j, j + 1); r + q <= c.r_max; ++q) {
            ++count;
            auto [ok, msg] = check_equal(current_bracket(c.e(i, r), c.e(j, q)), zero,
                                         "{e,e} far pair");
            auto [ok2, msg2] =
                check_equal(current_bracket(c.f(i, r), c.f(j, q)), zero, "{f,f} far pair");
            if (!ok || !ok2) {
              bad = ok ? msg2 : msg;
              break;
            }
          }
      }
    out.push_back(watch.stamp(sweep("current swaps and far pairs", "currents.r4-r7", count, bad)));
  }
  {  // Serre triples
    long count = 0;
    std::string bad;
    for (int i = 1; i <= n - 1 && bad.empty(); ++i)
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > n - 1) continue;
        for (int r1 = s(i, i + 1); r1 <= c.r_max && bad.empty(); ++r1)
          for (int r2 = s(i, i + 1); r2 <= c.r_max && bad.empty(); ++r2)
            for (int r3 = s(j, j + 1); r1 + r2 + r3 <= c.r_max; ++r3) {
              ++count;
              auto serre_e = current_bracket(c.e(i, r1), current_bracket(c.e(i, r2), c.e(j, r3))) +
                             current_bracket(c.e(i, r2), current_bracket(c.e(i, r1), c.e(j, r3)));
              auto serre_f = current_bracket(c.f(i, r1), current_bracket(c.f(i, r2), c.f(j, r3))) +
                             current_bracket(c.f(i, r2), current_bracket(c.f(i, r1), c.f(j, r3)));
              auto [ok, msg] = check_equal(
                  serre_e, zero, "Serre e (" + std::to_string(i) + "," + std::to_string(j) + ")");
              auto [ok2, msg2] = check_equal(serre_f, zero, "Serre f");
              if (!ok || !ok2) {
                bad = ok ? msg2 : msg;
                break;
              }
            }
        if (!bad.empty()) break;
      }
    out.push_back(watch.stamp(sweep("current Serre", "currents.r8-r9", count, bad)));
  }
  {  // generation: the recursions reproduce every label
    long count = 0;
    std::string bad;
    for (int i = 1; i <= n && bad.empty(); ++i)
      for (int j = 1; j <= n && bad.empty(); ++j) {
        if (i == j) continue;
        for (int r = s(i, j); r <= c.r_max; ++r) {
          ++count;
          CurrentElement got = i < j ? c.upper(i, j, r) : c.lower(i, j, r);
          auto [ok, msg] = check_equal(got, CurrentElement::basis(c.sigma, c.r_max, i, j, r),
                                       "generation of " + CurrentLabel{i, j, r}.name());
          if (!ok) {
            bad = msg;
            break;
          }
        }
      }
    out.push_back(watch.stamp(sweep("current generation", "currents.generation", count, bad)));
  }
  return out;
}

std::vector<CheckReport> twisted_sweep(const CurrentCtx& c) {
  Stopwatch watch;
  std::vector<CheckReport> out;
  int n = c.sigma.n();
  auto s = [&](int i, int j) { return c.sigma.at(i, j); };
  CurrentElement zero(&c.sigma, c.r_max);

  {  // eta family and eta-theta action
    long count = 0;
    std::string bad;
    for (int i = 1; i <= n && bad.empty(); ++i)
      for (int q1 = 1; q1 <= c.r_max && bad.empty(); q1 += 2)
        for (int j = 1; j <= n && bad.empty(); ++j)
          for (int q2 = 1; q1 + q2 <= c.r_max; q2 += 2) {
            ++count;
            auto [ok, msg] = check_equal(current_bracket(c.eta(i, q1), c.eta(j, q2)), zero,
                                         "{eta,eta}");
            if (!ok) {
              bad = msg;
              break;
            }
          }
    for (int i = 1; i <= n && bad.empty(); ++i)
      for (int q = 1; q <= c.r_max && bad.empty(); q += 2)
        for (int j = 1; j <= n - 1 && bad.empty(); ++j)
          for (int r = s(j, j + 1); q + r <= c.r_max; ++r) {
            ++count;
            int delta = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
            CurrentElement want = delta == 0 ? zero : c.theta(j, q + r).scaled(Rat(delta));
            auto [ok, msg] =
                check_equal(current_bracket(c.eta(i, q), c.theta(j, r)), want,
                            "{eta_" + std::to_string(i) + ";" + std::to_string(q) + ", theta_" +
                                std::to_string(j) + ";" + std::to_string(r) + "}");
            if (!ok) {
              bad = msg;
              break;
            }
          }
    out.push_back(watch.stamp(sweep("twisted eta relations", "currents.t1-t1.5", count, bad)));
  }
  {  // theta pair relations
    long count = 0;
    std::string bad;
    for (int i = 1; i <= n - 1 && bad.empty(); ++i)
      for (int j = 1; j <= n - 1 && bad.empty(); ++j) {
        if (std::abs(i - j) > 1) {
          for (int r = s(i, i + 1); r <= c.r_max && bad.empty(); ++r)
            for (int q = s(j, j + 1); r + q <= c.r_max; ++q) {
              ++count;
              auto [ok, msg] =
                  check_equal(current_bracket(c.theta(i, r), c.theta(j, q)), zero, "far thetas");
              if (!ok) {
                bad = msg;
                break;
              }
            }
        }
      }
    for (int i = 1; i + 1 <= n - 1 && bad.empty(); ++i)
      for (int r = s(i, i + 1); r + 1 <= c.r_max && bad.empty(); ++r)
        for (int q = s(i + 1, i + 2); r + q + 1 <= c.r_max; ++q) {
          ++count;
          auto lhs = current_bracket(c.theta(i, r), c.theta(i + 1, q + 1)) -
                     current_bracket(c.theta(i, r + 1), c.theta(i + 1, q));
          auto [ok, msg] = check_equal(lhs, zero, "theta swap i=" + std::to_string(i));
          if (!ok) {
            bad = msg;
            break;
          }
        }
    for (int i = 1; i <= n - 1 && bad.empty(); ++i)
      for (int r = s(i, i + 1); r <= c.r_max && bad.empty(); ++r)
        for (int q = s(i, i + 1); r + q <= c.r_max; ++q) {
          ++count;
          CurrentElement want = zero;
          if ((r + q) % 2 == 1) {
            int expo = q - 1 + s(i, i + 1);
            Rat sign = (expo % 2 == 0) ? 2 : -2;
            want = (c.eta(i, r + q) - c.eta(i + 1, r + q)).scaled(sign);
          }
          auto [ok, msg] = check_equal(current_bracket(c.theta(i, r), c.theta(i, q)), want,
                                       "{theta_i;" + std::to_string(r) + ", theta_i;" +
                                           std::to_string(q) + "} i=" + std::to_string(i));
          if (!ok) {
            bad = msg;
            break;
          }
        }
    out.push_back(watch.stamp(sweep("twisted theta pairs", "currents.t2-t4", count, bad)));
  }
  {  // twisted Serre, both parities
    long count = 0;
    std::string bad;
    for (int i = 1; i <= n - 1 && bad.empty(); ++i)
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > n - 1) continue;
        for (int r1 = s(i, i + 1); r1 <= c.r_max && bad.empty(); ++r1)
          for (int r2 = s(i, i + 1); r2 <= c.r_max && bad.empty(); ++r2)
            for (int r3 = s(j, j + 1); r1 + r2 + r3 <= c.r_max; ++r3) {
              ++count;
              auto lhs =
                  current_bracket(c.theta(i, r1), current_bracket(c.theta(i, r2), c.theta(j, r3))) +
                  current_bracket(c.theta(i, r2), current_bracket(c.theta(i, r1), c.theta(j, r3)));
              CurrentElement want = zero;
              if ((r1 + r2) % 2 == 0) {
                int expo = r2 - 1 + s(i, i + 1);
                Rat sign = (expo % 2 == 0) ? 2 : -2;
                want = c.theta(j, r1 + r2 + r3).scaled(sign);
              }
              auto [ok, msg] =
                  check_equal(lhs, want, "twisted Serre (i=" + std::to_string(i) + ",j=" +
                                             std::to_string(j) + ",r=" + std::to_string(r1) + "," +
                                             std::to_string(r2) + "," + std::to_string(r3) + ")");
              if (!ok) {
                bad = msg;
                break;
              }
            }
        if (!bad.empty()) break;
      }
    out.push_back(watch.stamp(sweep("twisted Serre", "currents.t4.5-t5", count, bad)));
  }
  {  // twisted generation: chained thetas hit every symmetrised label
    long count = 0;
    std::string bad;
    for (int i = 1; i <= n - 1 && bad.empty(); ++i)
      for (int j = i + 1; j <= n && bad.empty(); ++j)
        for (int r = s(i, j); r <= c.r_max; ++r) {
          ++count;
          int expo = r - 1 + s(i, j);
          Rat sign = (expo % 2 == 0) ? 1 : -1;
          CurrentElement want = CurrentElement::basis(c.sigma, c.r_max, i, j, r) +
                                CurrentElement::basis(c.sigma, c.r_max, j, i, r).scaled(sign);
          auto [ok, msg] = check_equal(c.theta_chain(i, j, r), want,
                                       "twisted generation at " + CurrentLabel{i, j, r}.name());
          if (!ok) {
            bad = msg;
            break;
          }
        }
    out.push_back(watch.stamp(sweep("twisted generation", "currents.t-generation", count, bad)));
  }
  return out;
}

} // namespace

std::vector<CheckReport> verify_current_presentations(const ShiftMatrix& sigma, int r_max) {
  CurrentCtx c{sigma, r_max};
  auto out = untwisted_sweep(c);
  if (sigma.symmetric()) {
    auto tw = twisted_sweep(c);
    out.insert(out.end(), tw.begin(), tw.end());
  } else {
    out.push_back(CheckReport::skip("twisted relations", "currents.t1-t5",
                                    "shift matrix is not symmetric"));
  }
  return out;
}

std::vector<CheckReport> verify_current_presentations_faulty_tau(const ShiftMatrix& sigma,
                                                                 int r_max) {
  CurrentCtx c{sigma, r_max, 1};
  return twisted_sweep(c);
}

LinComb current_to_centraliser(const CurrentElement& x, const LieModel& model) {
  const auto& lambda = model.lambda();
  int n = lambda.rank();
  if (x.sigma()->n() != n) fail(errc::shift_mismatch, "rank mismatch");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (x.sigma()->at(i, j) * 2 != std::abs(lambda.part(i) - lambda.part(j)))
        fail(errc::shift_mismatch, "shift matrix is not the symmetric one for the partition");

  std::map<int, Rat> acc;
  for (const auto& [lab, c] : x.terms()) {
    LinComb expansion = model.centraliser_expansion(lab.i, lab.j, 2 * lab.r);
    for (const auto& [v, w] : expansion) acc[v] += c * w;
  }
  LinComb out;
  for (const auto& [v, c] : acc)
    if (c != 0) out.emplace_back(v, c);
  return out;
}

std::vector<CheckReport> verify_current_centraliser_map(const EpsPartition& lambda, int r_max) {
  Stopwatch watch;
  std::vector<CheckReport> out;
  auto sigma = ShiftMatrix::symmetric_for(lambda);
  auto model = LieModel::build(lambda);
  int n = lambda.rank();

  auto to_matrix = [&](const CurrentElement& x) {
    RatMat m(model.N(), model.N());
    for (const auto& [v, c] : current_to_centraliser(x, model))
      m = m + model.matrix(v).scaled(c);
    return m;
  };

  {  // Lie homomorphism on all label pairs inside the budget
    long count = 0;
    std::string bad;
    for (int i = 1; i <= n && bad.empty(); ++i)
      for (int j = 1; j <= n && bad.empty(); ++j)
        for (int r = sigma.at(i, j); r <= r_max && bad.empty(); ++r)
          for (int k = 1; k <= n && bad.empty(); ++k)
            for (int l = 1; l <= n && bad.empty(); ++l)
              for (int q = sigma.at(k, l); r + q <= r_max; ++q) {
                ++count;
                auto x = CurrentElement::basis(sigma, r_max, i, j, r);
                auto y = CurrentElement::basis(sigma, r_max, k, l, q);
                RatMat lhs = to_matrix(current_bracket(x, y));
                RatMat rhs = commutator(to_matrix(x), to_matrix(y));
                if (!(lhs == rhs)) {
                  bad = "homomorphism fails on (" + CurrentLabel{i, j, r}.name() + ", " +
                        CurrentLabel{k, l, q}.name() + ")";
                  break;
                }
              }
    out.push_back(watch.stamp(bad.empty()
                                  ? CheckReport::ok("current-to-centraliser homomorphism", "currents.map",
                                                    std::to_string(count) + " pairs")
                                  : CheckReport::failed("current-to-centraliser homomorphism", "currents.map",
                                                        bad)));
  }
  {  // tau equivariance square
    std::string bad;
    long count = 0;
    if (lambda.trivial_involution()) {
      for (int i = 1; i <= n && bad.empty(); ++i)
        for (int j = 1; j <= n && bad.empty(); ++j)
          for (int r = sigma.at(i, j); r <= r_max; ++r) {
            ++count;
            auto x = CurrentElement::basis(sigma, r_max, i, j, r);
            RatMat lhs = to_matrix(tau_current(x));
            RatMat rhs = model.tau(to_matrix(x));
            if (!(lhs == rhs)) {
              bad = "equivariance fails at " + CurrentLabel{i, j, r}.name();
              break;
            }
          }
      out.push_back(watch.stamp(bad.empty()
                                    ? CheckReport::ok("tau equivariance square", "currents.equivariance",
                                                      std::to_string(count) + " labels")
                                    : CheckReport::failed("tau equivariance square", "currents.equivariance",
                                                          bad)));
    } else {
      out.push_back(watch.stamp(CheckReport::skip("tau equivariance square", "currents.equivariance",
                                                  "needs a trivial involution")));
    }
  }
  if (lambda.trivial_involution()) {  // twisted kernel = ideal closure of the listed generators
    // coordinates over all labels up to r_max
    std::map<CurrentLabel, int> coord;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int r = sigma.at(i, j); r <= r_max; ++r)
          coord.emplace(CurrentLabel{i, j, r}, static_cast<int>(coord.size()));
    auto to_vec = [&](const CurrentElement& x) {
      std::vector<Rat> v(coord.size(), Rat(0));
      for (const auto& [lab, c] : x.terms()) v[coord.at(lab)] = c;
      return v;
    };

    CurrentCtx ctx{sigma, r_max};
    std::vector<CurrentElement> fixed_basis;
    for (int i = 1; i <= n; ++i)
      for (int q = 1; q <= r_max; q += 2) fixed_basis.push_back(ctx.eta(i, q));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int r = sigma.at(i, j); r <= r_max; ++r) {
          int expo = r - 1 + sigma.at(i, j);
          Rat sign = (expo % 2 == 0) ? 1 : -1;
          fixed_basis.push_back(CurrentElement::basis(sigma, r_max, i, j, r) +
                                CurrentElement::basis(sigma, r_max, j, i, r).scaled(sign));
        }

    // kernel of the map restricted to the fixed subspace, via augmented rows
    std::size_t img_cols = static_cast<std::size_t>(model.N()) * model.N();
    std::vector<std::vector<Rat>> aug;
    for (std::size_t b = 0; b < fixed_basis.size(); ++b) {
      RatMat img = to_matrix(fixed_basis[b]);
      std::vector<Rat> row(img_cols + fixed_basis.size(), Rat(0));
      for (int r = 0; r < model.N(); ++r)
        for (int cidx = 0; cidx < model.N(); ++cidx)
          row[static_cast<std::size_t>(r) * model.N() + cidx] = img.at(r, cidx);
      row[img_cols + b] = 1;
      aug.push_back(std::move(row));
    }
    // eliminate on the image block only
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < img_cols && pivot_row < aug.size(); ++col) {
      std::size_t sel = pivot_row;
      while (sel < aug.size() && aug[sel][col] == 0) ++sel;
      if (sel == aug.size()) continue;
      std::swap(aug[pivot_row], aug[sel]);
      Rat inv = 1 / aug[pivot_row][col];
      for (auto& x : aug[pivot_row]) x *= inv;
      for (std::size_t r = 0; r < aug.size(); ++r) {
        if (r == pivot_row || aug[r][col] == 0) continue;
        Rat fct = aug[r][col];
        for (std::size_t j2 = 0; j2 < aug[r].size(); ++j2) aug[r][j2] -= fct * aug[pivot_row][j2];
      }
      ++pivot_row;
    }
    std::vector<std::vector<Rat>> kernel_vecs;  // in label coordinates
    for (std::size_t r = pivot_row; r < aug.size(); ++r) {
      CurrentElement combo(&sigma, r_max);
      for (std::size_t b = 0; b < fixed_basis.size(); ++b)
        if (aug[r][img_cols + b] != 0)
          combo = combo + fixed_basis[b].scaled(aug[r][img_cols + b]);
      kernel_vecs.push_back(to_vec(combo));
    }

    // listed generators and their Lie-ideal closure inside the truncation
    std::vector<CurrentElement> ideal;
    for (int q = lambda.part(1); q <= r_max; ++q)
      if (q % 2 == 1) ideal.push_back(ctx.eta(1, q));
    if (lambda.epsilon() == -1)
      for (int i = 1; i <= n - 1; ++i) {
        int r = lambda.part(i) + sigma.at(i, i + 1);
        if (r <= r_max) ideal.push_back(ctx.theta(i, r));
      }

    std::vector<std::vector<Rat>> closure;
    for (const auto& g : ideal) closure.push_back(to_vec(g));
    row_reduce(closure);
    std::vector<CurrentElement> frontier = ideal;
    while (!frontier.empty()) {
      std::vector<CurrentElement> next;
      for (const auto& g : frontier) {
        int top = 0;
        for (const auto& [lab, c] : g.terms()) top = std::max(top, lab.r);
        for (const auto& b : fixed_basis) {
          int btop = 0;
          for (const auto& [lab, c] : b.terms()) btop = std::max(btop, lab.r);
          if (top + btop > r_max) continue;
          CurrentElement br = current_bracket(g, b);
          if (br.is_zero()) continue;
          auto v = to_vec(br);
          if (!in_row_span(closure, v)) {
            closure.push_back(v);
            row_reduce(closure);
            next.push_back(br);
          }
        }
      }
      frontier = std::move(next);
    }

    std::string bad;
    for (const auto& kv : kernel_vecs)
      if (!in_row_span(closure, kv)) {
        bad = "kernel element escapes the ideal closure";
        break;
      }
    if (bad.empty()) {
      std::vector<std::vector<Rat>> kspan = kernel_vecs;
      row_reduce(kspan);
      for (auto& row : closure)
        if (!in_row_span(kspan, row)) {
          bad = "ideal closure exceeds the kernel";
          break;
        }
    }
    out.push_back(watch.stamp(bad.empty()
                      ? CheckReport::ok("twisted kernel generators", "currents.kernel",
                                        "kernel rank " + std::to_string(kernel_vecs.size()))
                      : CheckReport::failed("twisted kernel generators", "currents.kernel", bad)));
  }
  return out;
}

} // namespace nilorb
