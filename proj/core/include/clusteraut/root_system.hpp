#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusteraut/dynkin.hpp"
#include "clusteraut/exchange_matrix.hpp"

namespace clusteraut {

/// Coordinates [alpha : alpha_j] in the basis of simple roots.
using RootVector = std::vector<Int>;

/// Finite root system of a Cartan matrix, with the almost positive roots
/// listed as -alpha_1..-alpha_n followed by the positive roots ordered by
/// height, then lexicographically descending.
class RootSystem {
 public:
  explicit RootSystem(const DynkinType& type);
  /// Any Cartan matrix of finite type, in its own node numbering.
  explicit RootSystem(const CartanMatrix& cartan);

  const CartanMatrix& cartan() const { return cartan_; }
  const DynkinType& type() const { return type_; }
  std::size_t rank() const { return cartan_.rank(); }
  int coxeter_number() const { return h_; }
  const std::vector<int>& exponents() const { return exponents_; }

  const std::vector<RootVector>& positives() const { return positives_; }
  const std::vector<RootVector>& almost_positive() const { return almost_positive_; }
  RootVector simple(std::size_t i) const;
  RootVector negative_simple(std::size_t i) const;

  /// Position in almost_positive(), or nullopt.
  std::optional<std::size_t> index_of(const RootVector& v) const;
  bool is_almost_positive(const RootVector& v) const { return index_of(v).has_value(); }

  /// The map i -> i* with w0(alpha_i) = -alpha_{i*}.
  const std::vector<std::size_t>& w0_involution() const { return w0_; }
  bool w0_is_minus_identity() const;

  /// Root system of the transposed Cartan matrix (the coroots).
  RootSystem dual() const;
  /// Coroot of a root, in simple-coroot coordinates.
  RootVector coroot(const RootVector& alpha) const;
  /// (alpha, alpha) for the invariant form with (alpha_i, alpha_j) = d_i a_ij.
  Int squared_length(const RootVector& alpha) const;

  /// The 2-colouring with node 0 a source.
  SignFunction canonical_sign() const;

  /// "alpha1 + 2*alpha2", "-alpha3".
  std::string render(const RootVector& v) const;

 private:
  void build();

  CartanMatrix cartan_;
  DynkinType type_;
  int h_ = 0;
  std::vector<int> exponents_;
  std::vector<Int> symmetrizer_;
  std::vector<RootVector> positives_;
  std::vector<RootVector> almost_positive_;
  std::vector<std::size_t> w0_;
};

/// Simple reflection s_i(alpha) = alpha - <alpha_i^vee, alpha> alpha_i.
RootVector simple_reflection(const RootSystem& rs, std::size_t i, const RootVector& alpha);

/// Piecewise-linear sigma_i on almost positive roots: fixes -alpha_j (j != i),
/// acts as s_i otherwise.
RootVector sigma(const RootSystem& rs, std::size_t i, const RootVector& alpha);

/// tau_sign: the product of sigma_i over the nodes with eps(i) = sign.
RootVector tau(const RootSystem& rs, const SignFunction& eps, int sign, const RootVector& alpha);

/// tau_plus and tau_minus as permutations of almost_positive() indices.
struct TauGroup {
  std::vector<std::size_t> tau_plus;
  std::vector<std::size_t> tau_minus;
  std::size_t rotation_order = 0;  // order of tau_minus tau_plus
  std::size_t order = 0;
};

TauGroup tau_group(const RootSystem& rs, const SignFunction& eps);

/// d(i; r): the alternating tau product applied to -alpha_i. For r >= 0 it
/// needs eps(i) = (-1)^r; for r < 0 it needs eps(i) = (-1)^r as well
/// (r = -s-1 uses s factors starting with tau_plus on the left).
/// Throws InvalidArgument on parity mismatch.
RootVector d_vector_walk(const RootSystem& rs, const SignFunction& eps, std::size_t i, int r);

/// All pairs (i, r) with -1 <= r <= h satisfying the parity condition.
std::vector<std::pair<std::size_t, int>> d_vector_window(const RootSystem& rs, const SignFunction& eps);

/// i -> i* read off the tau walk; verified against the tau-orbit of -alpha_i.
std::vector<std::size_t> longest_involution(const RootSystem& rs, const SignFunction& eps);

}  // namespace clusteraut
