#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clusteraut/int_matrix.hpp"

namespace clusteraut {

/// Finite Dynkin type label: family letter A-G plus rank.
struct DynkinType {
  char family = 'A';
  int rank = 1;

  /// Parses "A3", "E6", "G2"... Throws InvalidArgument on unknown labels.
  static DynkinType parse(std::string_view label);
  std::string to_string() const;

  bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

/// Standard Cartan matrix in the convention s_i(alpha_j) = alpha_j - a_ij alpha_i.
/// Node numbering: A/B/C/D as Bourbaki; E_n is the chain 1..n-1 with node n
/// attached to node 3; F4 is 1-2=>3-4 with 1,2 long; G2 has alpha_1 short.
IntMatrix standard_cartan(const DynkinType& type);

/// Identifies a Cartan matrix of finite type up to relabeling of its nodes,
/// or returns nullopt (not a Cartan matrix, decomposable, or infinite type).
std::optional<DynkinType> classify_cartan(const IntMatrix& a);

int coxeter_number(const DynkinType& type);
std::vector<int> exponents(const DynkinType& type);

/// Number of seeds in a cluster algebra of this type:
/// prod_i (e_i + h + 1) / (e_i + 1).
std::int64_t cluster_catalan_number(const DynkinType& type);

}  // namespace clusteraut
