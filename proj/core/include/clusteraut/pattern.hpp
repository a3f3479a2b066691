#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clusteraut/exchange_matrix.hpp"
#include "clusteraut/laurent.hpp"
#include "clusteraut/root_system.hpp"

namespace clusteraut {

/// Ordered cluster plus exchange matrix. Variables are Laurent polynomials in
/// the initial cluster x1..xn and the frozen symbols y1..yf.
struct LabeledSeed {
  std::vector<LaurentPoly> exchangeables;
  std::vector<LaurentPoly> frozens;
  ExchangeMatrix matrix;

  std::size_t n() const { return exchangeables.size(); }
  friend bool operator==(const LabeledSeed& a, const LabeledSeed& b) {
    return a.matrix == b.matrix && a.exchangeables == b.exchangeables && a.frozens == b.frozens;
  }
};

/// Seed with the initial cluster (x1..xn; y1..yf) and matrix b.
LabeledSeed initial_seed(const ExchangeMatrix& b);

/// Mutation at exchangeable index k.
LabeledSeed mutate_seed(const LabeledSeed& s, std::size_t k);

/// Mutation at every index with eps(k) == sign (these commute in a bipartite seed).
LabeledSeed mutate_sign(const LabeledSeed& s, const SignFunction& eps, int sign);

using VarId = std::size_t;
using SeedId = std::size_t;

/// Exchange graph of a finite cluster algebra. Seeds are identified by their
/// unordered cluster; each keeps the ordered cluster under which it was first
/// reached (its representative). Variable ids 0..n-1 are the initial cluster.
class ExchangeGraph {
 public:
  struct Seed {
    std::vector<VarId> cluster;  // representative order
    ExchangeMatrix matrix;       // in that order
    std::optional<std::pair<SeedId, std::size_t>> parent;  // (seed, k) reaching it first
  };

  std::size_t n() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<LaurentPoly>& variables() const { return variables_; }
  const LaurentPoly& variable(VarId v) const { return variables_.at(v); }
  const std::vector<LaurentPoly>& frozens() const { return frozens_; }
  const std::vector<Seed>& seeds() const { return seeds_; }
  const Seed& seed(SeedId s) const { return seeds_.at(s); }
  std::size_t size() const { return seeds_.size(); }
  SeedId initial() const { return 0; }

  /// Neighbour of seed s across its representative position k.
  SeedId neighbor(SeedId s, std::size_t k) const { return neighbors_.at(s).at(k); }
  /// Undirected edges (a < b), each once.
  std::vector<std::pair<SeedId, SeedId>> edges() const;

  std::optional<VarId> find_variable(const LaurentPoly& p) const;
  /// Seed whose cluster is this set of variable ids (any order).
  std::optional<SeedId> find_seed(std::vector<VarId> cluster) const;

  /// Representative ordered cluster of s as Laurent polynomials.
  LabeledSeed labeled(SeedId s) const;

  friend ExchangeGraph exchange_graph(const LabeledSeed& initial, std::size_t cap);

 private:
  VarId intern(const LaurentPoly& p);

  std::size_t n_ = 0;
  RingPtr ring_;
  std::vector<LaurentPoly> variables_;
  std::vector<LaurentPoly> frozens_;
  std::unordered_map<LaurentPoly, VarId, LaurentHash> var_index_;
  std::vector<Seed> seeds_;
  std::map<std::vector<VarId>, SeedId> seed_index_;
  std::vector<std::vector<SeedId>> neighbors_;
};

/// 10x the cluster-count oracle when the type is known, 100000 otherwise.
std::size_t default_cap(const std::optional<DynkinType>& type);

/// BFS closure under all mutations (lowest index first). Throws CapExceeded
/// once more than `cap` seeds are found.
ExchangeGraph exchange_graph(const LabeledSeed& initial, std::size_t cap);

/// One labeled period of the bipartite belt: seeds[0] is the initial seed,
/// seeds[2r+1] = mu_-(seeds[2r]), seeds[2r+2] = mu_+(seeds[2r+1]).
struct BipartiteBelt {
  SignFunction eps;
  std::vector<LabeledSeed> seeds;

  std::size_t period() const { return seeds.size(); }
  /// x_{i;r} for any integer r, by periodicity.
  const LaurentPoly& variable(std::size_t i, long r) const;
  const LabeledSeed& seed(long r) const;
};

/// Throws InvalidArgument when the initial matrix is not bipartite.
BipartiteBelt bipartite_belt(const LabeledSeed& initial);

/// Graph ids of the belt's seeds, in order of first appearance.
std::vector<SeedId> belt_seed_ids(const ExchangeGraph& g, const BipartiteBelt& belt);

/// Seeds whose principal part admits a bipartite sign.
std::vector<SeedId> enumerate_bipartite_seeds(const ExchangeGraph& g);

/// Finite type of the mutation class of a coefficient-free matrix, or nullopt
/// (infinite, or the search hit `cap` matrices).
std::optional<DynkinType> is_finite_type(const ExchangeMatrix& b, std::size_t cap = 100000);

/// Almost positive roots <-> cluster variables. root_of[v] indexes
/// rs.almost_positive(); variable_of is the inverse.
struct RootVariableBijection {
  std::vector<std::size_t> root_of;
  std::vector<VarId> variable_of;
};

/// Needs g built from a bipartite seed whose Cartan counterpart is rs.cartan().
RootVariableBijection root_variable_bijection(const ExchangeGraph& g, const RootSystem& rs);

/// DOT export of the exchange graph; highlighted seeds are filled.
std::string exchange_graph_dot(const ExchangeGraph& g, const std::set<SeedId>& highlight = {});

}  // namespace clusteraut
