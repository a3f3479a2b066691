#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusteraut/automorphism.hpp"
#include "clusteraut/pattern.hpp"
#include "clusteraut/root_system.hpp"

namespace clusteraut {

/// Vertex permutations sigma with b_{sigma(j) sigma(i)} = b_ji, and their orbits.
struct QuiverAutGroup {
  std::vector<std::vector<std::size_t>> elements;  // sorted; identity first
  std::vector<std::vector<std::size_t>> orbits;    // ordered by least vertex
  std::vector<std::size_t> orbit_of;               // vertex -> orbit index

  std::size_t order() const { return elements.size(); }
};

/// Needs a coefficient-free, simply laced, bipartite matrix.
QuiverAutGroup quiver_aut_group(const ExchangeMatrix& b);

/// The group generated by `generators` instead of the full automorphism group.
QuiverAutGroup quiver_aut_subgroup(const ExchangeMatrix& b, const std::vector<std::vector<std::size_t>>& generators);

/// b_IJ = sum_{k in I} b_{k, j} for any j in J. Throws InvariantViolation if
/// the sum depends on the representative j.
ExchangeMatrix fold_matrix(const ExchangeMatrix& b, const QuiverAutGroup& g);

/// Orbit sum of root coordinates.
RootVector project_root(const RootVector& alpha, const QuiverAutGroup& g);

/// Cluster automorphism x_i -> x_{sigma(i)} induced by a quiver automorphism.
ClusterAutomorphism quiver_automorphism_action(const ExchangeGraph& g, const std::vector<std::size_t>& sigma);

/// A seed of the unfolded algebra fixed by the group, with its projection.
struct InvariantSeed {
  SeedId seed;                       // in the unfolded graph
  std::vector<VarId> labeling;       // vertex -> variable, compatible with the action
  SeedId projected;                  // in the folded graph
};

struct InvariantSeedReport {
  std::vector<InvariantSeed> seeds;
  std::vector<VarId> projection;     // unfolded variable -> folded variable
  bool bijective = false;            // invariant seeds <-> folded seeds
  bool variables_onto = false;       // projection of all variables = all folded variables
};

/// `folded` must be the exchange graph of the folded initial seed.
InvariantSeedReport invariant_seeds(const ExchangeGraph& unfolded, const QuiverAutGroup& group,
                                    const ExchangeGraph& folded);

struct QuotientReport {
  std::size_t unfolded_order = 0;
  std::size_t group_order = 0;
  std::size_t folded_order = 0;
  bool normal = false;
  bool order_law = false;              // |Aut(unfolded)| / |G| = |Aut(folded)|
  bool induced_isomorphism = false;    // Aut(unfolded) -> Aut(folded) onto, kernel = G
  bool tau_compatible = false;         // unfolded f_+/f_- project to folded f_+/f_-
};

QuotientReport quotient_aut_check(const ExchangeGraph& unfolded, const AutGroup& unfolded_aut,
                                  const QuiverAutGroup& group, const ExchangeGraph& folded,
                                  const AutGroup& folded_aut, const std::vector<VarId>& projection);

/// Folded type listed for the bipartite Dynkin quivers with nontrivial
/// automorphisms: A_{2n-1} -> B_n, D_{n+1} -> C_n, D4 -> G2, E6 -> F4.
std::optional<DynkinType> listed_folded_type(const DynkinType& source);

/// B <-> C; every other type is its own dual.
DynkinType langlands_dual(const DynkinType& t);

struct FoldReport {
  DynkinType source;
  ExchangeMatrix folded;
  std::size_t group_order = 0;
  std::optional<DynkinType> computed_type;
  std::optional<DynkinType> listed_type;
  bool matches_listed = false;
  bool matches_listed_up_to_duality = false;
  bool pi_commutes_with_tau = false;
  bool pi_onto_roots = false;
  std::size_t invariant_seed_count = 0;
  std::size_t folded_seed_count = 0;
  bool seed_bijection = false;
  bool variables_onto = false;
  std::optional<QuotientReport> quotient;
};

/// Whole folding pipeline for a bipartite simply laced type. The group check
/// (which enumerates both automorphism groups) runs when `with_groups` is set.
FoldReport fold_report(const DynkinType& source, bool with_groups = true);

}  // namespace clusteraut
