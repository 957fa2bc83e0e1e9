#include "nilorb/poly.hpp"

#include <algorithm>
#include <sstream>

namespace nilorb {

SparsePoly SparsePoly::constant(const Rat& c, int model_id) {
  SparsePoly p(model_id);
  if (c != 0) p.terms_.emplace(Monomial{}, c);
  return p;
}

SparsePoly SparsePoly::variable(int var, const LieModel& model) {
  SparsePoly p(model.id());
  p.terms_.emplace(Monomial{var}, Rat(1));
  return p;
}

SparsePoly SparsePoly::from_comb(const LinComb& lc, const LieModel& model) {
  SparsePoly p(model.id());
  for (const auto& [v, c] : lc)
    if (c != 0) p.terms_.emplace(Monomial{v}, c);
  return p;
}

void SparsePoly::add_term(const Monomial& mono, const Rat& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

int merged_model(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  if (a != b) fail(errc::model_mismatch, "polynomials belong to different models");
  return a;
}

} // namespace

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly out(merged_model(model_id_, o.model_id_));
  out.terms_ = terms_;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly out(merged_model(model_id_, o.model_id_));
  out.terms_ = terms_;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly out(merged_model(model_id_, o.model_id_));
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      m.reserve(m1.size() + m2.size());
      std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(m));
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

SparsePoly SparsePoly::scaled(const Rat& c) const {
  SparsePoly out(model_id_);
  if (c == 0) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace(m, x * c);
  return out;
}

long SparsePoly::kazhdan_degree(const Monomial& m, const LieModel& model) {
  long d = 0;
  for (int v : m) d += model.degree(v) + 2;
  return d;
}

bool SparsePoly::kazhdan_homogeneous(const LieModel& model) const {
  long seen = -1;
  for (const auto& [m, c] : terms_) {
    if (m.empty()) continue;
    long d = kazhdan_degree(m, model);
    if (seen < 0) seen = d;
    if (d != seen) return false;
  }
  return true;
}

std::map<long, SparsePoly> SparsePoly::kazhdan_components(const LieModel& model) const {
  std::map<long, SparsePoly> out;
  for (const auto& [m, c] : terms_) {
    long d = kazhdan_degree(m, model);
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, SparsePoly(model_id_)).first;
    it->second.add_term(m, c);
  }
  return out;
}

std::string SparsePoly::to_string(const LieModel& model) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << nilorb::to_string(c);
    for (int v : m) os << " * " << model.var_name(v);
  }
  return os.str();
}

SparsePoly poisson_bracket(const SparsePoly& p, const SparsePoly& q, const LieModel& model) {
  merged_model(merged_model(p.model_id(), q.model_id()), model.id());
  SparsePoly out(model.id());
  for (const auto& [m1, c1] : p.terms()) {
    if (m1.empty()) continue;
    for (const auto& [m2, c2] : q.terms()) {
      if (m2.empty()) continue;
      // Leibniz in both slots: pick one factor from each monomial.
      for (std::size_t a = 0; a < m1.size(); ++a) {
        if (a > 0 && m1[a] == m1[a - 1]) continue;  // distinct variables once
        std::size_t mult1 = std::count(m1.begin(), m1.end(), m1[a]);
        Monomial rest1 = m1;
        rest1.erase(rest1.begin() + static_cast<long>(a));
        for (std::size_t b = 0; b < m2.size(); ++b) {
          if (b > 0 && m2[b] == m2[b - 1]) continue;
          std::size_t mult2 = std::count(m2.begin(), m2.end(), m2[b]);
          const LinComb& br = model.bracket(m1[a], m2[b]);
          if (br.empty()) continue;
          Rat factor = c1 * c2 * Rat(static_cast<long>(mult1 * mult2));
          Rat sign = (m1[a] < m2[b]) ? 1 : -1;
          if (m1[a] == m2[b]) continue;
          Monomial rest2 = m2;
          rest2.erase(rest2.begin() + static_cast<long>(b));
          Monomial base;
          base.reserve(rest1.size() + rest2.size());
          std::merge(rest1.begin(), rest1.end(), rest2.begin(), rest2.end(),
                     std::back_inserter(base));
          for (const auto& [v, coef] : br) {
            Monomial m = base;
            auto pos = std::upper_bound(m.begin(), m.end(), v);
            m.insert(pos, v);
            out.add_term(m, factor * sign * coef);
          }
        }
      }
    }
  }
  return out;
}

SlicePoly substitute_chi(const SparsePoly& p, const LieModel& model) {
  merged_model(p.model_id(), model.id());
  SlicePoly out(model.id());
  for (const auto& [mono, coeff] : p.terms()) {
    Rat c = coeff;
    Monomial kept;
    for (int v : mono) {
      if (model.degree(v) <= -2) {
        c *= model.chi(v);
        if (c == 0) break;
      } else {
        kept.push_back(v);
      }
    }
    if (c != 0) out.add_term(kept, c);
  }
  return out;
}

int first_non_invariant_direction(const SparsePoly& p, const LieModel& model) {
  for (int v = 0; v < model.dim(); ++v) {
    if (model.degree(v) >= 0) continue;
    SparsePoly br = poisson_bracket(SparsePoly::variable(v, model), p, model);
    if (!substitute_chi(br, model).is_zero()) return v;
  }
  return -1;
}

bool is_slice_invariant(const SparsePoly& p, const LieModel& model) {
  return first_non_invariant_direction(p, model) < 0;
}

SlicePoly slice_bracket(const SlicePoly& a, const SlicePoly& b, const LieModel& model,
                        const SparsePoly& witness_a, const SparsePoly& witness_b) {
  if (!(substitute_chi(witness_a, model) == a) || !(substitute_chi(witness_b, model) == b))
    fail(errc::non_invariant_witness, "witness does not reduce to the given element");
  if (!is_slice_invariant(witness_a, model) || !is_slice_invariant(witness_b, model))
    fail(errc::non_invariant_witness, "witness image is not invariant");
  return substitute_chi(poisson_bracket(witness_a, witness_b, model), model);
}

SlicePoly slice_bracket(const SparsePoly& a, const SparsePoly& b, const LieModel& model) {
  return substitute_chi(poisson_bracket(a, b, model), model);
}

SparsePoly apply_tau(const SparsePoly& p, const LieModel& model) {
  merged_model(p.model_id(), model.id());
  SparsePoly out(model.id());
  for (const auto& [mono, coeff] : p.terms()) {
    Rat c = coeff;
    Monomial m;
    for (int v : mono) {
      auto [w, sign] = model.tau_of_var(v);
      c *= sign;
      m.push_back(w);
    }
    std::sort(m.begin(), m.end());
    out.add_term(m, c);
  }
  return out;
}

bool is_tau_invariant(const SparsePoly& p, const LieModel& model) {
  return apply_tau(p, model) == p;
}

SlicePoly dirac_project(const SparsePoly& p, const LieModel& gl_model) {
  if (!is_tau_invariant(p, gl_model))
    fail(errc::not_tau_invariant, "Dirac projection needs a tau-invariant input");
  const LieModel& sub = gl_model.tau_fixed();
  SparsePoly out(sub.id());
  for (const auto& [mono, coeff] : p.terms()) {
    SparsePoly term = SparsePoly::constant(coeff, sub.id());
    for (int v : mono) {
      const LinComb& comp = gl_model.dirac_coordinate(v);
      SparsePoly factor(sub.id());
      for (const auto& [w, c] : comp) factor.add_term(Monomial{w}, c);
      term = term * factor;
      if (term.is_zero()) break;
    }
    out = out + term;
  }
  return substitute_chi(out, sub);
}

} // namespace nilorb
