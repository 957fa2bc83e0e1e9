#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilorb/poly.hpp"

namespace nilorb {

/// One free generator of the reduced algebra together with its expansion.
struct PBWBasisElement {
  std::string symbol;
  long kazhdan_degree = 0;
  SlicePoly expansion;
};

/// Polynomial in generator symbols: exponent vector (per generator) -> coeff.
using GenPoly = std::map<std::vector<int>, Rat>;

std::string genpoly_to_string(const GenPoly& p, const std::vector<PBWBasisElement>& gens);

/// Smallest total degree in the generator symbols (filtration order);
/// LONG_MAX for zero.
long genpoly_min_degree(const GenPoly& p);

/// Expands a generator-monomial exponent vector back into the slice.
SlicePoly expand_gen_monomial(const std::vector<int>& expo,
                              const std::vector<PBWBasisElement>& gens);

/// Rewrites s as the unique polynomial in the given free generators, degree
/// by Kazhdan degree through exact linear solves.  Throws NotInAlgebra when a
/// nonzero residual survives.
GenPoly pbw_rewrite(const SlicePoly& s, const std::vector<PBWBasisElement>& gens,
                    const LieModel& model);

} // namespace nilorb
