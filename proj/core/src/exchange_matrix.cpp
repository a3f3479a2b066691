#include "clusteraut/exchange_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "clusteraut/error.hpp"

namespace clusteraut {

namespace {

std::vector<std::string> default_labels(std::size_t m) {
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t j = 0; j < m; ++j) labels.push_back(std::to_string(j + 1));
  return labels;
}

bool connected(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (vertices == 0) return true;
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  std::size_t components = vertices;
  for (auto [a, b] : edges) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

bool principal_indecomposable(const IntMatrix& b, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (b(j, i) != 0) edges.emplace_back(j, i);
  return connected(n, edges);
}

bool full_indecomposable(const IntMatrix& b, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 0; j < b.rows(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (b(j, i) != 0) edges.emplace_back(j, i);
  return connected(b.rows(), edges);
}

Int abs_int(Int v) { return v < 0 ? checked_neg(v) : v; }

}  // namespace

ExchangeMatrix::ExchangeMatrix(IntMatrix entries, std::size_t n_exchangeable, std::vector<std::string> row_labels)
    : entries_(std::move(entries)), n_(n_exchangeable), row_labels_(std::move(row_labels)) {
  if (entries_.cols() != n_) throw InvalidArgument("exchange matrix must have n columns");
  if (n_ < 2) throw InvalidArgument("exchange matrix needs n >= 2");
  if (entries_.rows() < n_) throw InvalidArgument("exchange matrix needs m >= n");
  if (row_labels_.empty()) row_labels_ = default_labels(entries_.rows());
  if (row_labels_.size() != entries_.rows()) throw InvalidArgument("row label count differs from row count");
  if (!find_symmetrizer(entries_.top_rows(n_))) throw InvalidArgument("principal part is not skew-symmetrizable");
  if (!principal_indecomposable(entries_, n_)) throw InvalidArgument("principal part is decomposable");
  if (!full_indecomposable(entries_, n_)) throw InvalidArgument("exchange matrix is decomposable");
}

ExchangeMatrix::ExchangeMatrix(IntMatrix principal)
    : ExchangeMatrix(principal, principal.rows(), {}) {}

ExchangeMatrix ExchangeMatrix::trusted(IntMatrix entries, std::size_t n, std::vector<std::string> row_labels) {
  ExchangeMatrix b;
  b.entries_ = std::move(entries);
  b.n_ = n;
  b.row_labels_ = std::move(row_labels);
  return b;
}

ExchangeMatrix ExchangeMatrix::negated() const { return trusted(entries_.negated(), n_, row_labels_); }

ExchangeMatrix ExchangeMatrix::principal_part() const {
  return trusted(entries_.top_rows(n_), n_, col_labels());
}

SignFunction SignFunction::negated() const {
  SignFunction out = *this;
  for (auto& s : out.signs) s = -s;
  return out;
}

CartanMatrix::CartanMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.square()) throw InvalidArgument("Cartan matrix must be square");
  for (std::size_t i = 0; i < rank(); ++i) {
    if (entries_(i, i) != 2) throw InvalidArgument("Cartan matrix needs a_ii = 2");
    for (std::size_t j = 0; j < rank(); ++j) {
      if (i == j) continue;
      if (entries_(i, j) > 0) throw InvalidArgument("Cartan matrix needs a_ij <= 0");
      if ((entries_(i, j) == 0) != (entries_(j, i) == 0))
        throw InvalidArgument("Cartan matrix needs a_ij = 0 iff a_ji = 0");
    }
  }
  type_ = classify_cartan(entries_);
}

std::optional<Symmetrizer> find_symmetrizer(const IntMatrix& b) {
  if (!b.square()) return std::nullopt;
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != 0) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool zi = b(i, j) == 0, zj = b(j, i) == 0;
      if (zi != zj) return std::nullopt;
      if (!zi && (b(i, j) > 0) == (b(j, i) > 0)) return std::nullopt;
    }
  }
  // d_j / d_i = -b_ij / b_ji, propagated over each connected component as a fraction.
  std::vector<Int> num(n, 0), den(n, 1);
  std::vector<int> component(n, -1);
  int comps = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    component[root] = comps;
    num[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) == 0 || component[j] >= 0) continue;
        Int nj = checked_mul(num[i], abs_int(b(i, j)));
        Int dj = checked_mul(den[i], abs_int(b(j, i)));
        const Int g = std::gcd(nj, dj);
        num[j] = nj / g;
        den[j] = dj / g;
        component[j] = comps;
        stack.push_back(j);
      }
    }
    ++comps;
  }
  // Scale each component to least positive integers.
  std::vector<Int> d(n, 0);
  for (int c = 0; c < comps; ++c) {
    Int l = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == c) l = std::lcm(l, den[i]);
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == c) {
        d[i] = checked_mul(num[i], l / den[i]);
        g = std::gcd(g, d[i]);
      }
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == c) d[i] /= g;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (checked_mul(d[i], b(i, j)) != checked_neg(checked_mul(d[j], b(j, i)))) return std::nullopt;
  return Symmetrizer{d};
}

std::optional<Symmetrizer> find_symmetrizer(const ExchangeMatrix& b) { return find_symmetrizer(b.principal()); }

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  if (k >= b.n()) throw InvalidArgument("mutation index out of range");
  const auto& e = b.entries();
  IntMatrix out(e.rows(), e.cols());
  for (std::size_t j = 0; j < e.rows(); ++j) {
    for (std::size_t i = 0; i < e.cols(); ++i) {
      if (j == k || i == k) {
        out(j, i) = checked_neg(e(j, i));
        continue;
      }
      const Int bjk = e(j, k), bki = e(k, i);
      Int delta = 0;
      if (bjk > 0 && bki > 0) delta = checked_mul(bjk, bki);
      else if (bjk < 0 && bki < 0) delta = checked_neg(checked_mul(bjk, bki));
      out(j, i) = checked_add(e(j, i), delta);
    }
  }
  return ExchangeMatrix::trusted(std::move(out), b.n(), b.row_labels());
}

CartanMatrix cartan_counterpart(const IntMatrix& b) {
  if (!b.square()) throw InvalidArgument("Cartan counterpart needs a square matrix");
  IntMatrix a(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) a(i, j) = i == j ? 2 : -abs_int(b(i, j));
  return CartanMatrix(std::move(a));
}

CartanMatrix cartan_counterpart(const ExchangeMatrix& b) { return cartan_counterpart(b.principal()); }

std::optional<SignFunction> bipartite_sign(const IntMatrix& b) {
  if (!b.square()) return std::nullopt;
  const std::size_t n = b.rows();
  std::vector<bool> out(n, false), in(n, false);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (b(j, i) > 0) {
        out[j] = true;
        in[i] = true;
      }
  SignFunction eps;
  eps.signs.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (out[v] && in[v]) return std::nullopt;
    eps.signs[v] = in[v] ? -1 : 1;
  }
  return eps;
}

std::optional<SignFunction> bipartite_sign(const ExchangeMatrix& b) { return bipartite_sign(b.principal()); }

ExchangeMatrix bipartite_matrix(const IntMatrix& a) {
  CartanMatrix cartan(a);
  const std::size_t n = a.rows();
  std::vector<int> colour(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != 0) continue;
    colour[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (w == v || a(v, w) == 0) continue;
        if (colour[w] == 0) {
          colour[w] = -colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          throw InvalidArgument("Cartan graph is not bipartite");
        }
      }
    }
  }
  IntMatrix b(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) b(j, i) = colour[j] * abs_int(a(j, i));
  return ExchangeMatrix(std::move(b));
}

ExchangeMatrix bipartite_matrix(const DynkinType& type) { return bipartite_matrix(standard_cartan(type)); }

bool is_gluing_free(const ExchangeMatrix& b) {
  std::vector<std::vector<Int>> frozen;
  for (std::size_t j = b.n(); j < b.rows(); ++j) frozen.push_back(b.entries().row(j));
  std::sort(frozen.begin(), frozen.end());
  return std::adjacent_find(frozen.begin(), frozen.end()) == frozen.end();
}

ExchangeMatrix relabel(const ExchangeMatrix& b, const Relabeling& r) {
  const std::size_t n = b.n();
  if (r.exchangeable.size() != n || r.frozen.size() != b.frozen_count())
    throw InvalidArgument("relabeling size mismatch");
  auto src = [&](std::size_t j) { return j < n ? r.exchangeable[j] : n + r.frozen[j - n]; };
  IntMatrix out(b.rows(), n);
  std::vector<std::string> labels(b.rows());
  for (std::size_t j = 0; j < b.rows(); ++j) {
    labels[j] = b.row_labels()[src(j)];
    for (std::size_t i = 0; i < n; ++i) out(j, i) = b(src(j), r.exchangeable[i]);
  }
  return ExchangeMatrix::trusted(std::move(out), n, std::move(labels));
}

namespace {

// Isomorphism-invariant fingerprint of vertex v: multiset of incident value
// pairs and of frozen entries in its column.
std::vector<Int> vertex_signature(const IntMatrix& e, std::size_t n, std::size_t v, Int sign) {
  std::vector<std::pair<Int, Int>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    if (i != v) pairs.emplace_back(sign * e(v, i), sign * e(i, v));
  std::sort(pairs.begin(), pairs.end());
  std::vector<Int> frozen;
  for (std::size_t j = n; j < e.rows(); ++j) frozen.push_back(sign * e(j, v));
  std::sort(frozen.begin(), frozen.end());
  std::vector<Int> sig;
  for (auto [a, b] : pairs) {
    sig.push_back(a);
    sig.push_back(b);
  }
  sig.push_back(std::numeric_limits<Int>::min());
  sig.insert(sig.end(), frozen.begin(), frozen.end());
  return sig;
}

}  // namespace

std::vector<Relabeling> matrix_isomorphisms(const ExchangeMatrix& b, const ExchangeMatrix& target, int sign) {
  if (b.rows() != target.rows() || b.n() != target.n())
    throw InvalidArgument("matrix_isomorphisms: shape mismatch");
  if (sign != 1 && sign != -1) throw InvalidArgument("matrix_isomorphisms: sign must be +1 or -1");
  const std::size_t n = b.n();
  const std::size_t f = b.frozen_count();
  const auto& src = b.entries();
  const auto& tgt = target.entries();

  std::vector<std::vector<Int>> sig_src(n), sig_tgt(n);
  for (std::size_t v = 0; v < n; ++v) {
    sig_src[v] = vertex_signature(src, n, v, 1);
    sig_tgt[v] = vertex_signature(tgt, n, v, sign);
  }

  std::vector<Relabeling> result;
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> fperm(f);
  std::vector<bool> fused(f, false);

  std::function<void(std::size_t)> assign_frozen = [&](std::size_t pos) {
    if (pos == f) {
      result.push_back(Relabeling{perm, fperm});
      return;
    }
    for (std::size_t g = 0; g < f; ++g) {
      if (fused[g]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = src(n + g, perm[i]) == sign * tgt(n + pos, i);
      if (!ok) continue;
      fused[g] = true;
      fperm[pos] = g;
      assign_frozen(pos + 1);
      fused[g] = false;
    }
  };

  std::function<void(std::size_t)> assign = [&](std::size_t pos) {
    if (pos == n) {
      assign_frozen(0);
      return;
    }
    for (std::size_t u = 0; u < n; ++u) {
      if (used[u] || sig_src[u] != sig_tgt[pos]) continue;
      bool ok = src(u, u) == sign * tgt(pos, pos);
      for (std::size_t q = 0; q < pos && ok; ++q)
        ok = src(perm[q], u) == sign * tgt(q, pos) && src(u, perm[q]) == sign * tgt(pos, q);
      if (!ok) continue;
      used[u] = true;
      perm[pos] = u;
      assign(pos + 1);
      used[u] = false;
    }
  };
  assign(0);
  return result;
}

std::string quiver_dot(const ExchangeMatrix& b) {
  const auto& labels = b.row_labels();
  const std::size_t n = b.n();
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph Q {\n";
  for (std::size_t j = 0; j < b.rows(); ++j) {
    os << "  " << quote(labels[j]);
    if (j >= n) os << " [shape=box]";
    os << ";\n";
  }
  auto edge = [&](std::size_t from, std::size_t to, Int v1, Int v2) {
    os << "  " << quote(labels[from]) << " -> " << quote(labels[to]);
    if (v1 != 1 || v2 != 1) os << " [label=\"(" << v1 << ',' << v2 << ")\"]";
    os << ";\n";
  };
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (b(j, i) > 0) edge(j, i, abs_int(b(j, i)), abs_int(b(i, j)));
  for (std::size_t j = n; j < b.rows(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Int v = abs_int(b(j, i));
      if (b(j, i) > 0) edge(j, i, v, v);
      else if (b(j, i) < 0) edge(i, j, v, v);
    }
  os << "}\n";
  return os.str();
}

ExchangeMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<Int>> rows;
  std::vector<std::string> labels;
  std::optional<std::size_t> separator;
  std::size_t line_no = 0;
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string();
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string label;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      label = trim(line.substr(hash + 1));
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line == "---") {
      if (separator) throw InvalidArgument("matrix text: more than one '---' separator");
      separator = rows.size();
      continue;
    }
    std::istringstream fields(line);
    std::vector<Int> row;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw InvalidArgument("matrix text line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
      row.push_back(static_cast<Int>(v));
    }
    rows.push_back(std::move(row));
    labels.push_back(label.empty() ? std::to_string(rows.size()) : label);
  }
  if (rows.empty()) throw InvalidArgument("matrix text: no rows");
  const std::size_t n = separator.value_or(rows.size());
  for (const auto& r : rows)
    if (r.size() != n) throw InvalidArgument("matrix text: every row needs n = " + std::to_string(n) + " entries");
  return ExchangeMatrix(IntMatrix::from_rows(rows), n, labels);
}

std::string to_matrix_text(const ExchangeMatrix& b) {
  std::ostringstream os;
  for (std::size_t j = 0; j < b.rows(); ++j) {
    if (j == b.n()) os << "---\n";
    for (std::size_t i = 0; i < b.n(); ++i) {
      if (i) os << ' ';
      os << b(j, i);
    }
    if (b.row_labels()[j] != std::to_string(j + 1)) os << "  # " << b.row_labels()[j];
    os << '\n';
  }
  return os.str();
}

}  // namespace clusteraut
