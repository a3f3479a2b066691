#include "clusteraut/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "clusteraut/error.hpp"

namespace clusteraut {

ClusterAutomorphism ClusterAutomorphism::identity(std::size_t size, std::size_t frozen) {
  ClusterAutomorphism f;
  f.perm.resize(size);
  std::iota(f.perm.begin(), f.perm.end(), 0);
  f.frozen_perm.resize(frozen);
  std::iota(f.frozen_perm.begin(), f.frozen_perm.end(), 0);
  return f;
}

bool ClusterAutomorphism::is_identity() const {
  for (std::size_t v = 0; v < perm.size(); ++v)
    if (perm[v] != v) return false;
  for (std::size_t f = 0; f < frozen_perm.size(); ++f)
    if (frozen_perm[f] != f) return false;
  return direct;
}

ClusterAutomorphism ClusterAutomorphism::inverse() const {
  ClusterAutomorphism f{std::vector<VarId>(perm.size()), direct, std::vector<std::size_t>(frozen_perm.size())};
  for (std::size_t v = 0; v < perm.size(); ++v) f.perm[perm[v]] = v;
  for (std::size_t v = 0; v < frozen_perm.size(); ++v) f.frozen_perm[frozen_perm[v]] = v;
  return f;
}

std::size_t ClusterAutomorphism::order() const {
  std::size_t k = 1;
  auto p = *this;
  while (!p.is_identity()) {
    p = compose(*this, p);
    ++k;
  }
  return k;
}

ClusterAutomorphism compose(const ClusterAutomorphism& a, const ClusterAutomorphism& b) {
  if (a.perm.size() != b.perm.size() || a.frozen_perm.size() != b.frozen_perm.size())
    throw InvalidArgument("composing automorphisms of different graphs");
  ClusterAutomorphism f{std::vector<VarId>(a.perm.size()), a.direct == b.direct,
                        std::vector<std::size_t>(a.frozen_perm.size())};
  for (std::size_t v = 0; v < a.perm.size(); ++v) f.perm[v] = a.perm[b.perm[v]];
  for (std::size_t v = 0; v < a.frozen_perm.size(); ++v) f.frozen_perm[v] = a.frozen_perm[b.frozen_perm[v]];
  return f;
}

ClusterAutomorphism power(const ClusterAutomorphism& a, std::size_t k) {
  auto out = ClusterAutomorphism::identity(a.perm.size(), a.frozen_perm.size());
  for (std::size_t i = 0; i < k; ++i) out = compose(a, out);
  return out;
}

std::vector<ClusterAutomorphism> generated_subgroup(const std::vector<ClusterAutomorphism>& generators,
                                                    std::size_t size) {
  const std::size_t frozen = generators.empty() ? 0 : generators.front().frozen_perm.size();
  std::set<ClusterAutomorphism> group{ClusterAutomorphism::identity(size, frozen)};
  std::vector<ClusterAutomorphism> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<ClusterAutomorphism> next;
    for (const auto& q : frontier)
      for (const auto& gen : generators) {
        auto r = compose(gen, q);
        if (group.insert(r).second) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

namespace {

std::size_t position_in(const std::vector<VarId>& cluster, VarId v) {
  auto it = std::find(cluster.begin(), cluster.end(), v);
  if (it == cluster.end()) throw InvariantViolation("variable missing from cluster");
  return static_cast<std::size_t>(it - cluster.begin());
}

bool is_permutation_vector(const std::vector<VarId>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto v : perm) {
    if (v >= perm.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

std::optional<ClusterAutomorphism> extend_seed_map(const ExchangeGraph& g, const std::vector<VarId>& images,
                                                   int sign, std::vector<std::size_t> frozen_images) {
  if (images.size() != g.n()) throw InvalidArgument("seed map needs one image per initial variable");
  const std::size_t nf = g.frozens().size();
  if (frozen_images.empty()) {
    frozen_images.resize(nf);
    std::iota(frozen_images.begin(), frozen_images.end(), 0);
  }
  if (frozen_images.size() != nf) throw InvalidArgument("seed map needs one image per frozen variable");
  auto t = g.find_seed(images);
  if (!t) throw InvalidArgument("seed map images are not a cluster");
  const auto& target = g.seed(*t);
  Relabeling r{{}, frozen_images};
  for (auto v : images) r.exchangeable.push_back(position_in(target.cluster, v));
  const auto& b0 = g.seed(g.initial()).matrix;
  if (!(relabel(target.matrix, r) == (sign == 1 ? b0 : b0.negated()))) return std::nullopt;
  std::vector<LaurentPoly> frozen_values;
  for (auto f : frozen_images) frozen_values.push_back(g.frozens().at(f));

  // f is a ring homomorphism, so f(x_v) is obtained by evaluating the exchange
  // relation that first produced x_v at the images of its neighbours. This
  // equals substituting the images into the Laurent form of x_v.
  std::vector<std::optional<LaurentPoly>> value(g.variables().size());
  for (std::size_t i = 0; i < g.n(); ++i) value[i] = g.variable(images[i]);
  for (SeedId s = 0; s < g.size(); ++s) {
    const auto& rec = g.seed(s);
    if (!rec.parent) continue;
    auto [p, k] = *rec.parent;
    const VarId v = rec.cluster[k];
    if (value[v]) continue;
    const auto& parent = g.seed(p);
    LabeledSeed mapped{{}, frozen_values, parent.matrix};
    for (auto u : parent.cluster) mapped.exchangeables.push_back(*value[u]);
    value[v] = mutate_seed(mapped, k).exchangeables[k];
  }
  ClusterAutomorphism f{std::vector<VarId>(g.variables().size()), sign == 1, frozen_images};
  for (VarId v = 0; v < g.variables().size(); ++v) {
    auto image = g.find_variable(*value[v]);
    if (!image) throw InvariantViolation("seed map sends a cluster variable outside the cluster variables");
    f.perm[v] = *image;
  }
  if (!is_permutation_vector(f.perm)) throw InvariantViolation("seed map is not a bijection on cluster variables");
  return f;
}

std::optional<ClusterAutomorphism> transport_seed_map(const ExchangeGraph& g, const std::vector<VarId>& images) {
  const std::size_t none = g.variables().size();
  std::vector<VarId> perm(none, none);
  std::vector<std::vector<VarId>> ordered(g.size());
  std::vector<SeedId> where(g.size());
  auto start = g.find_seed(images);
  if (!start) return std::nullopt;
  ordered[g.initial()] = images;
  where[g.initial()] = *start;
  for (SeedId s = 0; s < g.size(); ++s) {
    const auto& rec = g.seed(s);
    if (rec.parent) {
      auto [p, k] = *rec.parent;
      const auto& lp = ordered[p];
      const auto& image_seed = g.seed(where[p]);
      const SeedId q = g.neighbor(where[p], position_in(image_seed.cluster, lp[k]));
      const auto& qc = g.seed(q).cluster;
      auto fresh = std::find_if(qc.begin(), qc.end(),
                                [&](VarId v) { return std::find(lp.begin(), lp.end(), v) == lp.end(); });
      if (fresh == qc.end()) return std::nullopt;
      ordered[s] = lp;
      ordered[s][k] = *fresh;
      where[s] = q;
    }
    for (std::size_t i = 0; i < g.n(); ++i) {
      const VarId v = rec.cluster[i];
      if (perm[v] == none) perm[v] = ordered[s][i];
      else if (perm[v] != ordered[s][i]) return std::nullopt;
    }
  }
  if (!is_permutation_vector(perm)) return std::nullopt;
  return ClusterAutomorphism{perm, true, {}};
}

bool induces_graph_automorphism(const ExchangeGraph& g, const ClusterAutomorphism& f) {
  auto image_of = [&](SeedId s) {
    std::vector<VarId> c;
    for (auto v : g.seed(s).cluster) c.push_back(f.perm[v]);
    return g.find_seed(c);
  };
  std::vector<SeedId> seed_map(g.size());
  for (SeedId s = 0; s < g.size(); ++s) {
    auto t = image_of(s);
    if (!t) return false;
    seed_map[s] = *t;
  }
  for (SeedId s = 0; s < g.size(); ++s)
    for (std::size_t k = 0; k < g.n(); ++k) {
      const SeedId t = g.neighbor(s, k);
      // The edge s - t exchanges cluster position k; its image must exchange f(x_k).
      const auto& image = g.seed(seed_map[s]);
      if (g.neighbor(seed_map[s], position_in(image.cluster, f.perm[g.seed(s).cluster[k]])) != seed_map[t])
        return false;
    }
  return true;
}

namespace {

ClusterAutomorphism checked_extend(const ExchangeGraph& g, const std::vector<VarId>& images, int sign) {
  auto f = extend_seed_map(g, images, sign);
  if (!f) throw InvariantViolation("seed map does not carry B to the expected matrix");
  auto t = transport_seed_map(g, images);
  if (!t || t->perm != f->perm) throw InvariantViolation("substitution and path transport disagree");
  return *f;
}

// The initial variable at position i mutated once, i.e. the neighbour across k = i.
VarId mutated_initial(const ExchangeGraph& g, std::size_t i) {
  const auto& c = g.seed(g.neighbor(g.initial(), i)).cluster;
  return c[i];
}

}  // namespace

TauAutomorphisms tau_automorphisms(const ExchangeGraph& g, const RootSystem& rs, const SignFunction& eps) {
  const auto& b0 = g.seed(g.initial()).matrix;
  auto sign0 = bipartite_sign(b0);
  if (!sign0) throw InvalidArgument("initial seed is not bipartite");
  if (!(*sign0 == eps) && !(sign0->negated() == eps)) throw InvalidArgument("sign function does not match the seed");
  std::vector<VarId> minus_images, plus_images;
  for (std::size_t i = 0; i < g.n(); ++i) {
    minus_images.push_back(eps(i) == 1 ? i : mutated_initial(g, i));
    plus_images.push_back(eps(i) == -1 ? i : mutated_initial(g, i));
  }
  TauAutomorphisms out{checked_extend(g, plus_images, -1), checked_extend(g, minus_images, -1)};

  const auto bij = root_variable_bijection(g, rs);
  const auto& roots = rs.almost_positive();
  for (VarId v = 0; v < g.variables().size(); ++v) {
    const auto& alpha = roots[bij.root_of[v]];
    for (int sign : {1, -1}) {
      const auto& f = sign == 1 ? out.f_plus : out.f_minus;
      const auto expected = *rs.index_of(tau(rs, eps, sign, alpha));
      if (bij.root_of[f.perm[v]] != expected)
        throw InvariantViolation("f(x_alpha) differs from x_{tau(alpha)}");
    }
  }
  return out;
}

ClusterAutomorphism f0_automorphism(const ExchangeGraph& g, const RootSystem& rs, const SignFunction& eps) {
  const auto tau_auts = tau_automorphisms(g, rs, eps);
  const int h = rs.coxeter_number();
  const auto rotation = compose(tau_auts.f_minus, tau_auts.f_plus);
  auto f0 = h % 2 == 1 ? compose(tau_auts.f_plus, power(rotation, static_cast<std::size_t>((h + 1) / 2)))
                       : power(rotation, static_cast<std::size_t>((h + 2) / 2));
  const auto& star = rs.w0_involution();
  for (std::size_t i = 0; i < g.n(); ++i)
    if (f0.perm[i] != star[i]) throw InvariantViolation("f0 does not act on the initial cluster by i -> i*");
  return f0;
}

namespace {

// Indices of the leaves adjacent to the unique branch node, or empty.
std::vector<std::size_t> fork_leaves(const IntMatrix& b) {
  const std::size_t n = b.rows();
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b(i, j) != 0) ++degree[i];
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] != 3) continue;
    for (std::size_t w = 0; w < n; ++w)
      if (b(v, w) != 0 && degree[w] == 1) leaves.push_back(w);
  }
  return leaves;
}

}  // namespace

std::vector<ClusterAutomorphism> exceptional_automorphisms(const ExchangeGraph& g) {
  const auto& b0 = g.seed(g.initial()).matrix;
  const auto type = cartan_counterpart(b0).dynkin_type();
  if (!type || type->family != 'D' || type->rank % 2 != 0) return {};
  const auto leaves = fork_leaves(b0.principal());
  if (leaves.size() < 2) throw InvariantViolation("type D matrix without a fork");
  std::vector<std::pair<std::size_t, std::size_t>> swaps{{leaves[leaves.size() - 2], leaves.back()}};
  if (type->rank == 4) swaps.emplace_back(leaves.front(), leaves[1]);

  std::vector<ClusterAutomorphism> out;
  for (auto [a, b] : swaps) {
    std::vector<VarId> images(g.n());
    std::iota(images.begin(), images.end(), 0);
    std::swap(images[a], images[b]);
    out.push_back(checked_extend(g, images, 1));
  }
  return out;
}

std::string identify_structure(const std::vector<ClusterAutomorphism>& elements, const ClusterAutomorphism& f_minus,
                               const ClusterAutomorphism& f_plus) {
  const std::size_t size = f_minus.perm.size();
  const std::size_t order = elements.size();
  const auto dihedral = generated_subgroup({f_minus, f_plus}, size);
  const std::size_t m = compose(f_minus, f_plus).order();
  const std::string d = "D" + std::to_string(m);
  if (dihedral.size() != 2 * m) return "order " + std::to_string(order);
  if (order == 2 * m) return d;

  auto commutes_with_dihedral = [&](const ClusterAutomorphism& z) {
    return compose(z, f_minus) == compose(f_minus, z) && compose(z, f_plus) == compose(f_plus, z);
  };
  std::vector<ClusterAutomorphism> centralizer_involutions;
  for (const auto& z : elements)
    if (z.order() == 2 && commutes_with_dihedral(z) &&
        !std::binary_search(dihedral.begin(), dihedral.end(), z))
      centralizer_involutions.push_back(z);

  if (order == 4 * m) {
    for (const auto& z : centralizer_involutions)
      if (generated_subgroup({f_minus, f_plus, z}, size).size() == order) return d + " x Z2";
  }
  if (order == 12 * m) {
    for (std::size_t i = 0; i < centralizer_involutions.size(); ++i)
      for (std::size_t j = i + 1; j < centralizer_involutions.size(); ++j) {
        const auto s3 = generated_subgroup({centralizer_involutions[i], centralizer_involutions[j]}, size);
        if (s3.size() != 6) continue;
        const auto& a = centralizer_involutions[i];
        const auto& b = centralizer_involutions[j];
        if (compose(a, b).order() != 3) continue;
        bool trivial_meet = true;
        for (const auto& x : s3)
          if (!x.is_identity() && std::binary_search(dihedral.begin(), dihedral.end(), x)) trivial_meet = false;
        if (trivial_meet && generated_subgroup({f_minus, f_plus, a, b}, size).size() == order) return d + " x S3";
      }
  }
  return "order " + std::to_string(order);
}

AutGroup aut_group(const ExchangeGraph& g) {
  const auto& b0 = g.seed(g.initial()).matrix;
  if (!b0.coefficient_free()) throw InvalidArgument("aut_group needs a coefficient-free exchange graph");
  const std::size_t size = g.variables().size();

  std::set<ClusterAutomorphism> found;
  for (SeedId s = 0; s < g.size(); ++s) {
    const auto& rec = g.seed(s);
    for (int sign : {1, -1}) {
      for (const auto& r : matrix_isomorphisms(rec.matrix, b0, sign)) {
        std::vector<VarId> images;
        for (auto i : r.exchangeable) images.push_back(rec.cluster[i]);
        auto f = transport_seed_map(g, images);
        if (!f) throw InvariantViolation("path transport failed for a matrix isomorphism");
        f->direct = sign == 1;
        found.insert(*f);
      }
    }
  }

  AutGroup out;
  out.elements.assign(found.begin(), found.end());
  // Ground truth: each element is the Laurent-substitution extension of its initial action.
  for (const auto& f : out.elements) {
    std::vector<VarId> images(f.perm.begin(), f.perm.begin() + static_cast<std::ptrdiff_t>(g.n()));
    auto sub = extend_seed_map(g, images, f.direct ? 1 : -1);
    if (!sub || sub->perm != f.perm) throw InvariantViolation("substitution and path transport disagree");
    if (!induces_graph_automorphism(g, f)) throw InvariantViolation("automorphism does not preserve the exchange graph");
  }
  for (const auto& a : out.elements)
    for (const auto& b : out.elements)
      if (!found.count(compose(a, b))) throw InvariantViolation("automorphisms are not closed under composition");
  out.direct_count = static_cast<std::size_t>(
      std::count_if(out.elements.begin(), out.elements.end(), [](const ClusterAutomorphism& f) { return f.direct; }));
  if (out.direct_count != out.order() && 2 * out.direct_count != out.order())
    throw InvariantViolation("direct automorphisms do not have index at most two");

  std::optional<TauAutomorphisms> tau_auts;
  if (auto eps = bipartite_sign(b0)) {
    if (cartan_counterpart(b0).dynkin_type()) {
      RootSystem rs(cartan_counterpart(b0));
      tau_auts = tau_automorphisms(g, rs, *eps);
      out.generators = {tau_auts->f_minus, tau_auts->f_plus};
    }
  }
  for (const auto& f : out.elements) {
    if (generated_subgroup(out.generators, size).size() == out.order()) break;
    const auto current = generated_subgroup(out.generators, size);
    if (!std::binary_search(current.begin(), current.end(), f)) out.generators.push_back(f);
  }
  out.structure = tau_auts ? identify_structure(out.elements, tau_auts->f_minus, tau_auts->f_plus)
                           : "order " + std::to_string(out.order());
  return out;
}

}  // namespace clusteraut
