#pragma once

#include <cstddef>
#include <vector>

#include "clusteraut/automorphism.hpp"
#include "clusteraut/pattern.hpp"
#include "clusteraut/root_system.hpp"

namespace clusteraut {

/// Universal extended exchange matrix of a bipartite finite-type B: one frozen
/// row per almost positive coroot (in rs.dual() order) with entries
/// eps(i) [coroot : simple coroot i], labelled "coroot:(c1,...,cn)".
/// rs must be the root system of B's Cartan counterpart.
ExchangeMatrix universal_matrix(const ExchangeMatrix& b, const RootSystem& rs, const SignFunction& eps);

/// rho on frozen rows (indices into rs.dual().almost_positive()) with
/// mu_sign(U) row(coroot) = -U row(rho(coroot)) and principal part -B:
/// rho = tau_+ on coroots for sign -1, tau_- for sign +1. Throws
/// InvariantViolation when the identity fails.
std::vector<std::size_t> frozen_tau_symmetry(const ExchangeMatrix& u, const RootSystem& rs, const SignFunction& eps,
                                             int sign);

/// Sets every frozen variable to 1 and drops the frozen rows.
LabeledSeed specialize(const LabeledSeed& s);
/// p with every variable past the first n set to 1, in the ring x1..xn.
LaurentPoly specialize(const LaurentPoly& p, std::size_t n);

struct UniversalAutReport {
  AutGroup group;
  std::size_t principal_order = 0;
  bool gluing_free_everywhere = false;
  bool restriction_bijective = false;  // Aut(univ) -> Aut(principal) by specialization
};

/// Cluster automorphisms of the algebra with universal coefficients, frozen
/// variables permuted among themselves, compared with the principal part.
UniversalAutReport aut_univ(const ExchangeMatrix& u, std::size_t cap);

}  // namespace clusteraut
