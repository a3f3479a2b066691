#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusteraut/pattern.hpp"
#include "clusteraut/root_system.hpp"

namespace clusteraut {

/// Cluster automorphism as a permutation of the cluster variables of an
/// exchange graph. `direct` is true when it carries B to B, false for -B.
struct ClusterAutomorphism {
  std::vector<VarId> perm;
  bool direct = true;
  /// Frozen variable f goes to frozen variable frozen_perm[f]; empty when there are none.
  std::vector<std::size_t> frozen_perm;

  static ClusterAutomorphism identity(std::size_t size, std::size_t frozen = 0);
  bool is_identity() const;
  ClusterAutomorphism inverse() const;
  /// Smallest k >= 1 with this^k = identity.
  std::size_t order() const;

  friend bool operator==(const ClusterAutomorphism&, const ClusterAutomorphism&) = default;
  friend auto operator<=>(const ClusterAutomorphism&, const ClusterAutomorphism&) = default;
};

/// (a o b)(v) = a(b(v)).
ClusterAutomorphism compose(const ClusterAutomorphism& a, const ClusterAutomorphism& b);
ClusterAutomorphism power(const ClusterAutomorphism& a, std::size_t k);

/// Subgroup generated by the given elements (sorted).
std::vector<ClusterAutomorphism> generated_subgroup(const std::vector<ClusterAutomorphism>& generators,
                                                    std::size_t size);

/// The algebra map x_i -> images[i], y_f -> y_{frozen_images[f]} from the
/// initial seed, extended to all variables by Laurent substitution. Throws
/// InvalidArgument when `images` is not a cluster; nullopt when the relabeled
/// matrix of that cluster is not sign * B. Empty `frozen_images` fixes every
/// frozen variable.
std::optional<ClusterAutomorphism> extend_seed_map(const ExchangeGraph& g, const std::vector<VarId>& images,
                                                   int sign, std::vector<std::size_t> frozen_images = {});

/// Same map obtained by transporting the seed map along the BFS tree of the
/// exchange graph (no Laurent arithmetic). nullopt if transport is inconsistent.
std::optional<ClusterAutomorphism> transport_seed_map(const ExchangeGraph& g, const std::vector<VarId>& images);

/// f maps every edge of the exchange graph to an edge.
bool induces_graph_automorphism(const ExchangeGraph& g, const ClusterAutomorphism& f);

struct TauAutomorphisms {
  ClusterAutomorphism f_plus;
  ClusterAutomorphism f_minus;
};

/// f_- fixes the sources and mutates the sinks of the initial seed, f_+
/// dually. Verifies f(x_alpha) = x_{tau(alpha)} on every variable.
TauAutomorphisms tau_automorphisms(const ExchangeGraph& g, const RootSystem& rs, const SignFunction& eps);

/// The alternating word in f_+/f_- fixing the initial seed, acting on it by i -> i*.
ClusterAutomorphism f0_automorphism(const ExchangeGraph& g, const RootSystem& rs, const SignFunction& eps);

/// Type D_{2n}: the swap of the two fork leaves (and for D4 also a second fork
/// swap). Empty for every other type.
std::vector<ClusterAutomorphism> exceptional_automorphisms(const ExchangeGraph& g);

struct AutGroup {
  std::vector<ClusterAutomorphism> elements;  // sorted
  std::vector<ClusterAutomorphism> generators;
  std::size_t direct_count = 0;
  std::string structure;

  std::size_t order() const { return elements.size(); }
};

/// Every cluster automorphism of a coefficient-free finite exchange graph.
/// Group axioms and the index of the direct subgroup are verified.
AutGroup aut_group(const ExchangeGraph& g);

/// "D{m}", "D{m} x Z2", "D{m} x S3", or "order N", tested against f_-, f_+.
std::string identify_structure(const std::vector<ClusterAutomorphism>& elements, const ClusterAutomorphism& f_minus,
                               const ClusterAutomorphism& f_plus);

}  // namespace clusteraut
