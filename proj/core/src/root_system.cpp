#include "clusteraut/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "clusteraut/error.hpp"

namespace clusteraut {

namespace {

Int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), Int{0}); }

bool nonnegative(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int c) { return c >= 0; });
}

bool is_zero(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int c) { return c == 0; });
}

// Index k with v = -alpha_k, if any.
std::optional<std::size_t> negative_simple_index(const RootVector& v) {
  std::optional<std::size_t> k;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != -1 || k) return std::nullopt;
    k = i;
  }
  return k;
}

std::vector<std::size_t> compose(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) out[v] = a[b[v]];
  return out;
}

CartanMatrix checked_cartan(const CartanMatrix& c) {
  if (!c.dynkin_type()) throw InvalidArgument("Cartan matrix is not of finite type");
  return c;
}

}  // namespace

RootSystem::RootSystem(const DynkinType& type)
    : cartan_(standard_cartan(type)), type_(type) {
  build();
}

RootSystem::RootSystem(const CartanMatrix& cartan)
    : cartan_(checked_cartan(cartan)), type_(*cartan_.dynkin_type()) {
  build();
}

void RootSystem::build() {
  h_ = clusteraut::coxeter_number(type_);
  exponents_ = clusteraut::exponents(type_);
  const std::size_t n = rank();

  if (n == 1) {
    symmetrizer_ = {1};
  } else {
    auto sym = find_symmetrizer(bipartite_matrix(cartan_.entries()).principal());
    if (!sym) throw InvariantViolation("finite Cartan matrix without symmetrizer");
    symmetrizer_ = sym->diagonal;
  }

  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    seen.insert(simple(i));
    frontier.push_back(simple(i));
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        auto gamma = simple_reflection(*this, i, beta);
        if (nonnegative(gamma) && !is_zero(gamma) && seen.insert(gamma).second) next.push_back(gamma);
      }
    frontier = std::move(next);
  }
  positives_.assign(seen.begin(), seen.end());
  std::sort(positives_.begin(), positives_.end(), [](const RootVector& a, const RootVector& b) {
    const auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (positives_.size() * 2 != n * static_cast<std::size_t>(h_))
    throw InvariantViolation("positive root count differs from n*h/2 for " + type_.to_string());

  almost_positive_.clear();
  for (std::size_t i = 0; i < n; ++i) almost_positive_.push_back(negative_simple(i));
  almost_positive_.insert(almost_positive_.end(), positives_.begin(), positives_.end());
  w0_ = longest_involution(*this, canonical_sign());
}

RootVector RootSystem::simple(std::size_t i) const {
  RootVector v(rank(), 0);
  v.at(i) = 1;
  return v;
}

RootVector RootSystem::negative_simple(std::size_t i) const {
  RootVector v(rank(), 0);
  v.at(i) = -1;
  return v;
}

std::optional<std::size_t> RootSystem::index_of(const RootVector& v) const {
  if (v.size() != rank()) return std::nullopt;
  if (auto k = negative_simple_index(v)) return *k;
  if (!nonnegative(v)) return std::nullopt;
  // positives_ is sorted by (height asc, lex desc).
  auto it = std::lower_bound(positives_.begin(), positives_.end(), v, [](const RootVector& a, const RootVector& b) {
    const auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (it == positives_.end() || *it != v) return std::nullopt;
  return rank() + static_cast<std::size_t>(it - positives_.begin());
}

bool RootSystem::w0_is_minus_identity() const {
  for (std::size_t i = 0; i < w0_.size(); ++i)
    if (w0_[i] != i) return false;
  return true;
}

RootSystem RootSystem::dual() const { return RootSystem(cartan_.transposed()); }

Int RootSystem::squared_length(const RootVector& alpha) const {
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      s = checked_add(s, checked_mul(checked_mul(alpha[i], alpha[j]), checked_mul(symmetrizer_[i], cartan_(i, j))));
  return s;
}

RootVector RootSystem::coroot(const RootVector& alpha) const {
  const Int len = squared_length(alpha);
  if (len <= 0) throw InvalidArgument("coroot of a non-root");
  RootVector out(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const Int num = checked_mul(alpha[i], 2 * symmetrizer_[i]);
    if (num % len != 0) throw InvariantViolation("non-integral coroot coordinates");
    out[i] = num / len;
  }
  return out;
}

SignFunction RootSystem::canonical_sign() const {
  if (rank() == 1) return SignFunction{{1}};
  auto eps = bipartite_sign(bipartite_matrix(cartan_.entries()).principal());
  if (!eps) throw InvariantViolation("bipartite matrix without bipartite sign");
  return *eps;
}

std::string RootSystem::render(const RootVector& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Int c = v[i];
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1) out += std::to_string(c) + '*';
    out += "alpha" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

RootVector simple_reflection(const RootSystem& rs, std::size_t i, const RootVector& alpha) {
  if (i >= rs.rank() || alpha.size() != rs.rank()) throw InvalidArgument("simple_reflection: bad index or vector");
  Int pairing = 0;
  for (std::size_t j = 0; j < rs.rank(); ++j)
    pairing = checked_add(pairing, checked_mul(rs.cartan()(i, j), alpha[j]));
  RootVector out = alpha;
  out[i] = checked_add(out[i], checked_neg(pairing));
  return out;
}

RootVector sigma(const RootSystem& rs, std::size_t i, const RootVector& alpha) {
  if (!rs.is_almost_positive(alpha)) throw InvalidArgument("sigma: root is not almost positive");
  if (auto k = negative_simple_index(alpha); k && *k != i) return alpha;
  return simple_reflection(rs, i, alpha);
}

RootVector tau(const RootSystem& rs, const SignFunction& eps, int sign, const RootVector& alpha) {
  if (!rs.is_almost_positive(alpha)) throw InvalidArgument("tau: root is not almost positive");
  if (eps.size() != rs.rank()) throw InvalidArgument("tau: sign function size mismatch");
  RootVector out = alpha;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (eps(i) != sign) continue;
    Int v = -alpha[i];
    for (std::size_t j = 0; j < rs.rank(); ++j)
      if (j != i) v = checked_add(v, checked_neg(checked_mul(rs.cartan()(i, j), std::max<Int>(alpha[j], 0))));
    out[i] = v;
  }
  return out;
}

TauGroup tau_group(const RootSystem& rs, const SignFunction& eps) {
  const auto& roots = rs.almost_positive();
  TauGroup g;
  for (int sign : {1, -1}) {
    auto& perm = sign == 1 ? g.tau_plus : g.tau_minus;
    for (const auto& a : roots) {
      auto idx = rs.index_of(tau(rs, eps, sign, a));
      if (!idx) throw InvariantViolation("tau leaves the almost positive roots");
      perm.push_back(*idx);
    }
  }
  const auto rot = compose(g.tau_minus, g.tau_plus);
  std::vector<std::size_t> identity(roots.size());
  std::iota(identity.begin(), identity.end(), 0);
  auto p = rot;
  g.rotation_order = 1;
  while (p != identity) {
    p = compose(rot, p);
    ++g.rotation_order;
  }
  std::set<std::vector<std::size_t>> group{identity};
  std::vector<std::vector<std::size_t>> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& q : frontier)
      for (const auto* gen : {&g.tau_plus, &g.tau_minus}) {
        auto r = compose(*gen, q);
        if (group.insert(r).second) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  g.order = group.size();
  return g;
}

RootVector d_vector_walk(const RootSystem& rs, const SignFunction& eps, std::size_t i, int r) {
  if (i >= rs.rank()) throw InvalidArgument("d_vector_walk: index out of range");
  const int parity = (r % 2 == 0) ? 1 : -1;
  if (eps(i) != parity) throw InvalidArgument("d_vector_walk: parity condition fails for this (i, r)");
  RootVector v = rs.negative_simple(i);
  if (r >= 0) {
    // tau_- tau_+ ... tau_{eps(i)}: factor k from the left is tau_{(-1)^k}.
    for (int k = r; k >= 1; --k) v = tau(rs, eps, k % 2 == 0 ? 1 : -1, v);
  } else {
    // tau_+ tau_- ... tau_{eps(i)}: factor k from the left is tau_{(-1)^(k-1)}.
    const int s = -r - 1;
    for (int k = s; k >= 1; --k) v = tau(rs, eps, k % 2 == 1 ? 1 : -1, v);
  }
  return v;
}

std::vector<std::pair<std::size_t, int>> d_vector_window(const RootSystem& rs, const SignFunction& eps) {
  std::vector<std::pair<std::size_t, int>> out;
  for (int r = -1; r <= rs.coxeter_number(); ++r)
    for (std::size_t i = 0; i < rs.rank(); ++i)
      if (eps(i) == (r % 2 == 0 ? 1 : -1)) out.emplace_back(i, r);
  return out;
}

std::vector<std::size_t> longest_involution(const RootSystem& rs, const SignFunction& eps) {
  const int h = rs.coxeter_number();
  const std::size_t n = rs.rank();
  std::vector<std::size_t> star(n);
  if (n == 1) return {0};
  for (std::size_t i = 0; i < n; ++i) {
    const int r = eps(i) == ((h + 1) % 2 == 0 ? 1 : -1) ? h + 1 : -h - 2;
    auto k = negative_simple_index(d_vector_walk(rs, eps, i, r));
    if (!k) throw InvariantViolation("tau walk did not return to a negative simple root");
    star[i] = *k;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (star[star[i]] != i) throw InvariantViolation("i -> i* is not an involution");
  // -alpha_{i*} must lie on the rotation orbit of -alpha_i.
  const auto g = tau_group(rs, eps);
  const auto rot = compose(g.tau_minus, g.tau_plus);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    std::size_t v = i;
    for (std::size_t step = 0; step < g.rotation_order && !found; ++step) {
      found = v == star[i] || g.tau_plus[v] == star[i];
      v = rot[v];
    }
    if (!found) throw InvariantViolation("-alpha_{i*} is not on the tau orbit of -alpha_i");
  }
  return star;
}

}  // namespace clusteraut
