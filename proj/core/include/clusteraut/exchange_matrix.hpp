#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusteraut/dynkin.hpp"
#include "clusteraut/int_matrix.hpp"

namespace clusteraut {

/// Extended skew-symmetrizable exchange matrix B (m x n). Row j, column i holds
/// b_ji; the first n rows form the principal part, the remaining m - n rows are
/// frozen. Rows carry opaque labels so that relabeling is a data operation.
///
/// Construction validates: m >= n >= 2, principal part skew-symmetrizable,
/// B and its principal part indecomposable.
class ExchangeMatrix {
 public:
  ExchangeMatrix(IntMatrix entries, std::size_t n_exchangeable, std::vector<std::string> row_labels = {});
  /// Square coefficient-free matrix.
  explicit ExchangeMatrix(IntMatrix principal);

  std::size_t rows() const { return entries_.rows(); }
  std::size_t n() const { return n_; }
  std::size_t frozen_count() const { return entries_.rows() - n_; }
  bool coefficient_free() const { return frozen_count() == 0; }

  Int operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }
  const IntMatrix& entries() const { return entries_; }
  IntMatrix principal() const { return entries_.top_rows(n_); }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  std::vector<std::string> col_labels() const {
    return {row_labels_.begin(), row_labels_.begin() + static_cast<std::ptrdiff_t>(n_)};
  }

  ExchangeMatrix negated() const;
  /// Drops every frozen row.
  ExchangeMatrix principal_part() const;

  /// Same entries, validation skipped. Only for values produced from an
  /// already-validated matrix by an invariant-preserving operation.
  static ExchangeMatrix trusted(IntMatrix entries, std::size_t n, std::vector<std::string> row_labels);

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  ExchangeMatrix() = default;
  IntMatrix entries_;
  std::size_t n_ = 0;
  std::vector<std::string> row_labels_;
};

/// Positive diagonal D with D * B^ex skew-symmetric.
struct Symmetrizer {
  std::vector<Int> diagonal;
  friend bool operator==(const Symmetrizer&, const Symmetrizer&) = default;
};

/// Bipartite sign epsilon: +1 on sources, -1 on sinks.
struct SignFunction {
  std::vector<int> signs;
  std::size_t size() const { return signs.size(); }
  int operator()(std::size_t i) const { return signs[i]; }
  SignFunction negated() const;
  friend bool operator==(const SignFunction&, const SignFunction&) = default;
};

/// Square Cartan-like matrix: a_ii = 2, a_ij <= 0, a_ij = 0 iff a_ji = 0.
class CartanMatrix {
 public:
  explicit CartanMatrix(IntMatrix entries);
  const IntMatrix& entries() const { return entries_; }
  std::size_t rank() const { return entries_.rows(); }
  Int operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const std::optional<DynkinType>& dynkin_type() const { return type_; }
  CartanMatrix transposed() const { return CartanMatrix(entries_.transposed()); }
  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.entries_ == b.entries_; }

 private:
  IntMatrix entries_;
  std::optional<DynkinType> type_;
};

/// Row/column relabeling. `exchangeable[i]` is the source row/column of the
/// relabeled position i; `frozen[f]` the source frozen row (0-based among the
/// frozen rows) of frozen position f.
struct Relabeling {
  std::vector<std::size_t> exchangeable;
  std::vector<std::size_t> frozen;
  friend bool operator==(const Relabeling&, const Relabeling&) = default;
};

// Exchange-core operations. Indices are 0-based.

std::optional<Symmetrizer> find_symmetrizer(const IntMatrix& principal);
std::optional<Symmetrizer> find_symmetrizer(const ExchangeMatrix& b);

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

CartanMatrix cartan_counterpart(const IntMatrix& square);
CartanMatrix cartan_counterpart(const ExchangeMatrix& b);

std::optional<SignFunction> bipartite_sign(const IntMatrix& principal);
std::optional<SignFunction> bipartite_sign(const ExchangeMatrix& b);

/// Bipartite exchange matrix with the given Cartan counterpart: b_ji = eps(j)|a_ji|.
/// The sign is the 2-colouring with node 0 a source.
ExchangeMatrix bipartite_matrix(const IntMatrix& cartan);
ExchangeMatrix bipartite_matrix(const DynkinType& type);

bool is_gluing_free(const ExchangeMatrix& b);

/// Applies a relabeling: result(j, i) = b(src(j), src(i)).
ExchangeMatrix relabel(const ExchangeMatrix& b, const Relabeling& r);

/// Every relabeling r with relabel(b, r) == sign * target. Empty when the two
/// are not isomorphic. Throws InvalidArgument on shape mismatch.
std::vector<Relabeling> matrix_isomorphisms(const ExchangeMatrix& b, const ExchangeMatrix& target, int sign);

/// Valued ice quiver in DOT syntax. b_ji > 0 draws j -> i; arrows whose value
/// pair (|b_ji|, |b_ij|) differs from (1,1) are labelled; frozen vertices are boxes.
std::string quiver_dot(const ExchangeMatrix& b);

// Text format: one row per line, space separated; a line "---" separates the
// exchangeable rows from the frozen rows; "# text" after a row sets its label.
ExchangeMatrix parse_matrix_text(const std::string& text);
std::string to_matrix_text(const ExchangeMatrix& b);

}  // namespace clusteraut
