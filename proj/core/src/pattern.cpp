#include "clusteraut/pattern.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "clusteraut/error.hpp"

namespace clusteraut {

namespace {

// New variable at position k: (prod_{b_jk>0} x_j^{b_jk} + prod_{b_jk<0} x_j^{-b_jk}) / x_k.
LaurentPoly exchange(const std::vector<const LaurentPoly*>& vars, const ExchangeMatrix& b, std::size_t k,
                     const RingPtr& ring) {
  LaurentPoly plus = LaurentPoly::constant(ring, 1);
  LaurentPoly minus = LaurentPoly::constant(ring, 1);
  for (std::size_t j = 0; j < b.rows(); ++j) {
    const Int e = b(j, k);
    if (e > 0) plus = plus * vars[j]->pow(static_cast<int>(e));
    else if (e < 0) minus = minus * vars[j]->pow(static_cast<int>(-e));
  }
  return lp_exchange(plus, minus, *vars[k]);
}

}  // namespace

LabeledSeed initial_seed(const ExchangeMatrix& b) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < b.n(); ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t f = 0; f < b.frozen_count(); ++f) names.push_back("y" + std::to_string(f + 1));
  auto ring = make_ring(std::move(names));
  LabeledSeed s{{}, {}, b};
  for (std::size_t i = 0; i < b.n(); ++i) s.exchangeables.push_back(LaurentPoly::variable(ring, i));
  for (std::size_t f = 0; f < b.frozen_count(); ++f) s.frozens.push_back(LaurentPoly::variable(ring, b.n() + f));
  return s;
}

LabeledSeed mutate_seed(const LabeledSeed& s, std::size_t k) {
  if (k >= s.n()) throw InvalidArgument("mutation index out of range");
  std::vector<const LaurentPoly*> vars;
  for (const auto& x : s.exchangeables) vars.push_back(&x);
  for (const auto& y : s.frozens) vars.push_back(&y);
  LabeledSeed out = s;
  out.exchangeables[k] = exchange(vars, s.matrix, k, s.exchangeables[k].ring());
  out.matrix = mutate_matrix(s.matrix, k);
  return out;
}

LabeledSeed mutate_sign(const LabeledSeed& s, const SignFunction& eps, int sign) {
  LabeledSeed out = s;
  for (std::size_t k = 0; k < s.n(); ++k)
    if (eps(k) == sign) out = mutate_seed(out, k);
  return out;
}

std::vector<std::pair<SeedId, SeedId>> ExchangeGraph::edges() const {
  std::set<std::pair<SeedId, SeedId>> out;
  for (SeedId s = 0; s < neighbors_.size(); ++s)
    for (auto t : neighbors_[s]) out.emplace(std::min(s, t), std::max(s, t));
  return {out.begin(), out.end()};
}

std::optional<VarId> ExchangeGraph::find_variable(const LaurentPoly& p) const {
  auto it = var_index_.find(p);
  if (it == var_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SeedId> ExchangeGraph::find_seed(std::vector<VarId> cluster) const {
  std::sort(cluster.begin(), cluster.end());
  auto it = seed_index_.find(cluster);
  if (it == seed_index_.end()) return std::nullopt;
  return it->second;
}

LabeledSeed ExchangeGraph::labeled(SeedId s) const {
  const auto& rec = seeds_.at(s);
  LabeledSeed out{{}, frozens_, rec.matrix};
  for (auto v : rec.cluster) out.exchangeables.push_back(variables_[v]);
  return out;
}

VarId ExchangeGraph::intern(const LaurentPoly& p) {
  auto [it, inserted] = var_index_.try_emplace(p, variables_.size());
  if (inserted) variables_.push_back(p);
  return it->second;
}

std::size_t default_cap(const std::optional<DynkinType>& type) {
  if (!type) return 100000;
  return static_cast<std::size_t>(10 * cluster_catalan_number(*type));
}

ExchangeGraph exchange_graph(const LabeledSeed& initial, std::size_t cap) {
  ExchangeGraph g;
  g.n_ = initial.n();
  g.ring_ = initial.exchangeables.front().ring();
  g.frozens_ = initial.frozens;
  std::vector<VarId> cluster;
  for (const auto& x : initial.exchangeables) cluster.push_back(g.intern(x));
  if (std::set<VarId>(cluster.begin(), cluster.end()).size() != cluster.size())
    throw InvalidArgument("initial cluster has repeated variables");

  auto add_seed = [&](std::vector<VarId> c, ExchangeMatrix m, std::optional<std::pair<SeedId, std::size_t>> parent) {
    auto key = c;
    std::sort(key.begin(), key.end());
    const SeedId id = g.seeds_.size();
    g.seed_index_.emplace(std::move(key), id);
    g.seeds_.push_back(ExchangeGraph::Seed{std::move(c), std::move(m), parent});
    g.neighbors_.emplace_back(g.n_, id);
    if (g.seeds_.size() > cap)
      throw CapExceeded("exchange graph exceeds " + std::to_string(cap) + " seeds");
    return id;
  };
  add_seed(cluster, initial.matrix, std::nullopt);

  for (SeedId s = 0; s < g.seeds_.size(); ++s) {
    for (std::size_t k = 0; k < g.n_; ++k) {
      // Copies: add_seed may reallocate seeds_.
      const auto cur_cluster = g.seeds_[s].cluster;
      const auto cur_matrix = g.seeds_[s].matrix;
      std::vector<const LaurentPoly*> vars;
      for (auto v : cur_cluster) vars.push_back(&g.variables_[v]);
      for (const auto& y : g.frozens_) vars.push_back(&y);
      const auto fresh = exchange(vars, cur_matrix, k, g.ring_);
      const VarId v = g.intern(fresh);
      auto next_cluster = cur_cluster;
      next_cluster[k] = v;
      auto next_matrix = mutate_matrix(cur_matrix, k);

      if (auto t = g.find_seed(next_cluster)) {
        // Clusters determine seeds: the stored matrix must agree after reordering.
        const auto& rep = g.seeds_[*t];
        Relabeling r;
        for (auto var : next_cluster)
          r.exchangeable.push_back(static_cast<std::size_t>(
              std::find(rep.cluster.begin(), rep.cluster.end(), var) - rep.cluster.begin()));
        for (std::size_t f = 0; f < g.frozens_.size(); ++f) r.frozen.push_back(f);
        if (!(relabel(rep.matrix, r) == next_matrix))
          throw InvariantViolation("two seeds share a cluster but not a matrix");
        g.neighbors_[s][k] = *t;
      } else {
        g.neighbors_[s][k] = add_seed(std::move(next_cluster), std::move(next_matrix), std::make_pair(s, k));
      }
    }
  }
  return g;
}

const LaurentPoly& BipartiteBelt::variable(std::size_t i, long r) const { return seed(r).exchangeables.at(i); }

const LabeledSeed& BipartiteBelt::seed(long r) const {
  const long p = static_cast<long>(seeds.size());
  return seeds[static_cast<std::size_t>(((r % p) + p) % p)];
}

BipartiteBelt bipartite_belt(const LabeledSeed& initial) {
  auto eps = bipartite_sign(initial.matrix);
  if (!eps) throw InvalidArgument("initial seed is not bipartite");
  BipartiteBelt belt{*eps, {initial}};
  constexpr std::size_t kMaxPeriod = 10000;
  while (true) {
    const int sign = belt.seeds.size() % 2 == 1 ? -1 : 1;
    auto next = mutate_sign(belt.seeds.back(), *eps, sign);
    if (next == initial) break;
    belt.seeds.push_back(std::move(next));
    if (belt.seeds.size() > kMaxPeriod) throw CapExceeded("bipartite belt does not close");
  }
  return belt;
}

std::vector<SeedId> belt_seed_ids(const ExchangeGraph& g, const BipartiteBelt& belt) {
  std::vector<SeedId> out;
  for (const auto& s : belt.seeds) {
    std::vector<VarId> cluster;
    for (const auto& x : s.exchangeables) {
      auto v = g.find_variable(x);
      if (!v) throw InvariantViolation("belt variable missing from the exchange graph");
      cluster.push_back(*v);
    }
    auto id = g.find_seed(cluster);
    if (!id) throw InvariantViolation("belt seed missing from the exchange graph");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
  }
  return out;
}

std::vector<SeedId> enumerate_bipartite_seeds(const ExchangeGraph& g) {
  std::vector<SeedId> out;
  for (SeedId s = 0; s < g.size(); ++s)
    if (bipartite_sign(g.seed(s).matrix)) out.push_back(s);
  return out;
}

std::optional<DynkinType> is_finite_type(const ExchangeMatrix& b, std::size_t cap) {
  if (!b.coefficient_free()) throw InvalidArgument("finite-type test needs a coefficient-free matrix");
  std::set<std::vector<std::vector<Int>>> seen{b.entries().to_rows()};
  std::deque<ExchangeMatrix> queue{b};
  while (!queue.empty()) {
    auto m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < m.n(); ++i)
      for (std::size_t j = 0; j < m.n(); ++j)
        if (std::abs(m(i, j) * m(j, i)) > 3) return std::nullopt;  // some seed has an infinite rank-2 piece
    if (auto t = cartan_counterpart(m).dynkin_type()) return t;
    for (std::size_t k = 0; k < m.n(); ++k) {
      auto next = mutate_matrix(m, k);
      if (seen.insert(next.entries().to_rows()).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

RootVariableBijection root_variable_bijection(const ExchangeGraph& g, const RootSystem& rs) {
  const auto& b0 = g.seed(g.initial()).matrix;
  if (!(cartan_counterpart(b0).entries() == rs.cartan().entries()))
    throw InvalidArgument("root system does not match the initial seed's Cartan counterpart");
  if (!bipartite_sign(b0)) throw InvalidArgument("initial seed is not bipartite");
  const std::size_t n = g.n();
  RootVariableBijection out;
  out.root_of.assign(g.variables().size(), 0);
  out.variable_of.assign(rs.almost_positive().size(), g.variables().size());
  for (VarId v = 0; v < g.variables().size(); ++v) {
    std::size_t root = v;
    if (v >= n) {
      const auto d = denominator_vector(g.variable(v), n);
      auto idx = rs.index_of(RootVector(d.begin(), d.end()));
      if (!idx || *idx < n) throw InvariantViolation("denominator vector is not a positive root");
      root = *idx;
    }
    if (out.variable_of[root] != g.variables().size())
      throw InvariantViolation("two cluster variables share a denominator vector");
    out.root_of[v] = root;
    out.variable_of[root] = v;
  }
  if (g.variables().size() != rs.almost_positive().size())
    throw InvariantViolation("cluster variable count differs from the almost positive root count");
  return out;
}

std::string exchange_graph_dot(const ExchangeGraph& g, const std::set<SeedId>& highlight) {
  std::ostringstream os;
  os << "graph E {\n";
  for (SeedId s = 0; s < g.size(); ++s) {
    os << "  " << s;
    if (highlight.count(s)) os << " [style=filled]";
    os << ";\n";
  }
  for (auto [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace clusteraut
