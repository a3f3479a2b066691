#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace clusteraut {

/// Ambient variable names of a Laurent ring. Shared, immutable.
struct Ring {
  std::vector<std::string> names;
  std::size_t size() const { return names.size(); }
};
using RingPtr = std::shared_ptr<const Ring>;

/// Ring with variables x1..x{count}.
RingPtr make_ring(std::size_t count);
RingPtr make_ring(std::vector<std::string> names);

struct Term {
  std::vector<int> exps;
  mpz_class coeff;
};

/// Exact Laurent polynomial over Z. Terms are kept sorted by exponent vector
/// (lexicographic, ascending) with no zero coefficients, so equal values have
/// equal representations.
class LaurentPoly {
 public:
  explicit LaurentPoly(RingPtr ring);

  static LaurentPoly constant(RingPtr ring, const mpz_class& c);
  static LaurentPoly variable(RingPtr ring, std::size_t i);
  static LaurentPoly monomial(RingPtr ring, std::vector<int> exps, const mpz_class& c = 1);
  /// Terms in any order; duplicates are merged and zeros dropped.
  static LaurentPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  /// Any integer power of a monomial; non-negative powers otherwise.
  LaurentPoly pow(int e) const;

  /// Smallest exponent of each variable over all terms (0 for the zero polynomial).
  std::vector<int> min_exponents() const;

  std::size_t hash() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Exact quotient a / b. Throws InvariantViolation when b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// (plus + minus) / old, exactly. Non-exact division is an invariant violation.
LaurentPoly lp_exchange(const LaurentPoly& plus, const LaurentPoly& minus, const LaurentPoly& old_var);

/// Algebra map x_v -> images[v] applied to p. All images share one ring.
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images);

/// d with p * x^d a polynomial whose terms include one free of the first n
/// variables. Throws InvalidArgument when p has no such form.
std::vector<int> denominator_vector(const LaurentPoly& p, std::size_t n);

/// "(1 + x1 + x2) / (x1*x2)".
std::string to_string(const LaurentPoly& p);

struct LaurentHash {
  std::size_t operator()(const LaurentPoly& p) const { return p.hash(); }
};

}  // namespace clusteraut
