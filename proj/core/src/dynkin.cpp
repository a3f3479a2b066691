#include "clusteraut/dynkin.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "clusteraut/error.hpp"

namespace clusteraut {

namespace {

bool valid_rank(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B':
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

void bond(IntMatrix& a, std::size_t i, std::size_t j) {
  a(i, j) = -1;
  a(j, i) = -1;
}

// Undirected adjacency of the Cartan graph.
std::vector<std::vector<std::size_t>> adjacency(const IntMatrix& a) {
  std::vector<std::vector<std::size_t>> adj(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j) != 0) adj[i].push_back(j);
  return adj;
}

// Length of the arm starting at `next` when coming from `from` (nodes counted).
int arm_length(const std::vector<std::vector<std::size_t>>& adj, std::size_t from, std::size_t next) {
  int len = 1;
  while (true) {
    std::size_t step = adj.size();
    for (auto v : adj[next])
      if (v != from) step = v;
    if (step == adj.size()) return len;
    from = next;
    next = step;
    ++len;
  }
}

}  // namespace

DynkinType DynkinType::parse(std::string_view label) {
  if (label.size() < 2) throw InvalidArgument("bad Dynkin label '" + std::string(label) + "'");
  char family = label[0];
  if (family >= 'a' && family <= 'g') family = static_cast<char>(family - 'a' + 'A');
  int rank = 0;
  auto digits = label.substr(1);
  if (!digits.empty() && digits[0] == '_') digits.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || !valid_rank(family, rank))
    throw InvalidArgument("bad Dynkin label '" + std::string(label) + "'");
  return {family, rank};
}

std::string DynkinType::to_string() const { return std::string(1, family) + std::to_string(rank); }

IntMatrix standard_cartan(const DynkinType& t) {
  if (!valid_rank(t.family, t.rank)) throw InvalidArgument("bad Dynkin type " + t.to_string());
  const auto n = static_cast<std::size_t>(t.rank);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  switch (t.family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) bond(a, i, i + 1);
      bond(a, n - 3, n - 1);
      break;
    case 'E':
      for (std::size_t i = 0; i + 2 < n; ++i) bond(a, i, i + 1);
      bond(a, 2, n - 1);
      break;
    case 'F':
      bond(a, 0, 1);
      bond(a, 1, 2);
      bond(a, 2, 3);
      a(2, 1) = -2;  // alpha_3 short
      break;
    case 'G':
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
  }
  return a;
}

std::optional<DynkinType> classify_cartan(const IntMatrix& a) {
  if (!a.square() || a.rows() == 0) return std::nullopt;
  const std::size_t n = a.rows();
  std::size_t edges = 0;
  int weight2 = 0;
  int weight3 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 2) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) > 0 || a(j, i) > 0) return std::nullopt;
      if ((a(i, j) == 0) != (a(j, i) == 0)) return std::nullopt;
      if (a(i, j) == 0) continue;
      ++edges;
      const Int w = a(i, j) * a(j, i);
      if (w == 2) ++weight2;
      else if (w == 3) ++weight3;
      else if (w != 1) return std::nullopt;
    }
  }
  if (n == 1) return DynkinType{'A', 1};
  if (edges != n - 1) return std::nullopt;

  // Connected + n-1 edges => tree.
  auto adj = adjacency(a);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n) return std::nullopt;

  std::size_t max_degree = 0;
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v) {
    max_degree = std::max(max_degree, adj[v].size());
    if (adj[v].size() >= 3) branch.push_back(v);
  }

  if (weight3 > 0) {
    if (n == 2 && weight3 == 1) return DynkinType{'G', 2};
    return std::nullopt;
  }
  if (weight2 > 1) return std::nullopt;
  if (weight2 == 1) {
    if (max_degree > 2) return std::nullopt;
    if (n == 2) return DynkinType{'B', 2};
    // Locate the double bond (i, j) with a(i, j) = -2.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a(i, j) * a(j, i) != 2) continue;
        if (a(i, j) != -2) continue;
        const bool i_end = adj[i].size() == 1;
        const bool j_end = adj[j].size() == 1;
        if (i_end) return DynkinType{'B', static_cast<int>(n)};  // short end node
        if (j_end) return DynkinType{'C', static_cast<int>(n)};  // long end node
        if (n == 4) return DynkinType{'F', 4};
        return std::nullopt;
      }
    return std::nullopt;
  }

  // Simply laced.
  if (max_degree <= 2) return DynkinType{'A', static_cast<int>(n)};
  if (branch.size() != 1 || adj[branch[0]].size() != 3) return std::nullopt;
  std::vector<int> arms;
  for (auto w : adj[branch[0]]) arms.push_back(arm_length(adj, branch[0], w));
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return DynkinType{'D', static_cast<int>(n)};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return DynkinType{'E', static_cast<int>(n)};
  return std::nullopt;
}

int coxeter_number(const DynkinType& t) {
  switch (t.family) {
    case 'A': return t.rank + 1;
    case 'B':
    case 'C': return 2 * t.rank;
    case 'D': return 2 * (t.rank - 1);
    case 'E': return t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
    case 'F': return 12;
    case 'G': return 6;
  }
  throw InvalidArgument("bad Dynkin type " + t.to_string());
}

std::vector<int> exponents(const DynkinType& t) {
  std::vector<int> e;
  switch (t.family) {
    case 'A':
      for (int i = 1; i <= t.rank; ++i) e.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= t.rank; ++i) e.push_back(2 * i - 1);
      break;
    case 'D':
      for (int i = 1; i < t.rank; ++i) e.push_back(2 * i - 1);
      e.push_back(t.rank - 1);
      std::sort(e.begin(), e.end());
      break;
    case 'E':
      if (t.rank == 6) e = {1, 4, 5, 7, 8, 11};
      else if (t.rank == 7) e = {1, 5, 7, 9, 11, 13, 17};
      else e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case 'F': e = {1, 5, 7, 11}; break;
    case 'G': e = {1, 5}; break;
    default: throw InvalidArgument("bad Dynkin type " + t.to_string());
  }
  return e;
}

std::int64_t cluster_catalan_number(const DynkinType& t) {
  const int h = coxeter_number(t);
  std::int64_t num = 1;
  std::int64_t den = 1;
  for (int e : exponents(t)) {
    num *= e + h + 1;
    den *= e + 1;
    const auto g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw InvariantViolation("non-integral Catalan number for " + t.to_string());
  return num;
}

}  // namespace clusteraut
