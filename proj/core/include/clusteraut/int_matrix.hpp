#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace clusteraut {

using Int = std::int64_t;

// Overflow-checked arithmetic; throws InvariantViolation instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

/// Dense row-major integer matrix. No structural invariants.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::vector<Int> row(std::size_t r) const;
  std::vector<std::vector<Int>> to_rows() const;

  IntMatrix transposed() const;
  IntMatrix negated() const;
  /// First `n` rows.
  IntMatrix top_rows(std::size_t n) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace clusteraut
