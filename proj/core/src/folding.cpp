#include "clusteraut/folding.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "clusteraut/error.hpp"

namespace clusteraut {

namespace {

using Perm = std::vector<std::size_t>;

Perm compose_perm(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) out[v] = a[b[v]];
  return out;
}

void check_foldable(const ExchangeMatrix& b) {
  if (!b.coefficient_free()) throw InvalidArgument("folding needs a coefficient-free matrix");
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.n(); ++j)
      if (std::abs(b(i, j)) > 1) throw InvalidArgument("folding needs a simply laced matrix");
  if (!bipartite_sign(b)) throw InvalidArgument("folding needs a bipartite matrix");
}

QuiverAutGroup with_orbits(std::vector<Perm> elements, const ExchangeMatrix& b) {
  std::sort(elements.begin(), elements.end());
  const auto eps = *bipartite_sign(b);
  for (const auto& s : elements) {
    for (std::size_t j = 0; j < b.n(); ++j) {
      if (eps(s[j]) != eps(j)) throw InvariantViolation("quiver automorphism mixes sources and sinks");
      for (std::size_t i = 0; i < b.n(); ++i)
        if (b(s[j], s[i]) != b(j, i)) throw InvariantViolation("permutation does not preserve the quiver");
    }
  }
  QuiverAutGroup g;
  g.elements = std::move(elements);
  const std::size_t n = b.n();
  g.orbit_of.assign(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.orbit_of[v] != n) continue;
    std::set<std::size_t> orbit;
    for (const auto& s : g.elements) orbit.insert(s[v]);
    for (auto w : orbit) g.orbit_of[w] = g.orbits.size();
    g.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return g;
}

}  // namespace

QuiverAutGroup quiver_aut_group(const ExchangeMatrix& b) {
  check_foldable(b);
  std::vector<Perm> elements;
  for (const auto& r : matrix_isomorphisms(b, b, 1)) elements.push_back(r.exchangeable);
  return with_orbits(std::move(elements), b);
}

QuiverAutGroup quiver_aut_subgroup(const ExchangeMatrix& b, const std::vector<Perm>& generators) {
  check_foldable(b);
  Perm id(b.n());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> group{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& q : frontier)
      for (const auto& s : generators) {
        if (s.size() != b.n()) throw InvalidArgument("generator has the wrong size");
        auto r = compose_perm(s, q);
        if (group.insert(r).second) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  return with_orbits({group.begin(), group.end()}, b);
}

ExchangeMatrix fold_matrix(const ExchangeMatrix& b, const QuiverAutGroup& g) {
  const std::size_t m = g.orbits.size();
  IntMatrix out(m, m);
  for (std::size_t I = 0; I < m; ++I)
    for (std::size_t J = 0; J < m; ++J) {
      std::optional<Int> value;
      for (auto j : g.orbits[J]) {
        Int s = 0;
        for (auto k : g.orbits[I]) s = checked_add(s, b(k, j));
        if (value && *value != s) throw InvariantViolation("folded entry depends on the orbit representative");
        value = s;
      }
      out(I, J) = *value;
    }
  if (m < 2) throw InvalidArgument("folding leaves fewer than two orbits");
  return ExchangeMatrix(std::move(out));
}

RootVector project_root(const RootVector& alpha, const QuiverAutGroup& g) {
  RootVector out(g.orbits.size(), 0);
  for (std::size_t k = 0; k < alpha.size(); ++k) out[g.orbit_of[k]] = checked_add(out[g.orbit_of[k]], alpha[k]);
  return out;
}

ClusterAutomorphism quiver_automorphism_action(const ExchangeGraph& g, const Perm& sigma) {
  std::vector<VarId> images(sigma.begin(), sigma.end());
  auto f = extend_seed_map(g, images, 1);
  if (!f) throw InvalidArgument("permutation is not a quiver automorphism of the initial seed");
  return *f;
}

InvariantSeedReport invariant_seeds(const ExchangeGraph& unfolded, const QuiverAutGroup& group,
                                    const ExchangeGraph& folded) {
  const std::size_t n = unfolded.n();
  std::vector<ClusterAutomorphism> actions;
  for (const auto& s : group.elements) actions.push_back(quiver_automorphism_action(unfolded, s));

  InvariantSeedReport report;
  // Projection of variables: x_k -> x_{orbit(k)}.
  std::vector<LaurentPoly> images;
  for (std::size_t k = 0; k < n; ++k) images.push_back(LaurentPoly::variable(folded.ring(), group.orbit_of[k]));
  const VarId missing = folded.variables().size();
  std::set<VarId> hit;
  for (VarId v = 0; v < unfolded.variables().size(); ++v) {
    auto w = folded.find_variable(substitute(unfolded.variable(v), images));
    report.projection.push_back(w ? *w : missing);
    if (w) hit.insert(*w);
  }
  report.variables_onto = hit.size() == folded.variables().size() &&
                          std::find(report.projection.begin(), report.projection.end(), missing) ==
                              report.projection.end();

  const auto b0 = unfolded.seed(unfolded.initial()).matrix;
  std::set<SeedId> projected_ids;
  bool all_projected = true;
  for (SeedId s = 0; s < unfolded.size(); ++s) {
    const auto& rec = unfolded.seed(s);
    const std::set<VarId> cluster(rec.cluster.begin(), rec.cluster.end());
    bool stable = true;
    for (const auto& a : actions)
      for (auto v : rec.cluster)
        if (!cluster.count(a.perm[v])) stable = false;
    if (!stable) continue;

    // Labeling vertex -> variable with a_sigma(l(k)) = l(sigma(k)) and an invariant matrix.
    const VarId unset = unfolded.variables().size();
    std::vector<VarId> label(n, unset);
    std::optional<std::vector<VarId>> found;
    auto matrix_of = [&](const std::vector<VarId>& l) {
      Relabeling r;
      for (auto v : l)
        r.exchangeable.push_back(
            static_cast<std::size_t>(std::find(rec.cluster.begin(), rec.cluster.end(), v) - rec.cluster.begin()));
      return relabel(rec.matrix, r);
    };
    std::function<void(std::size_t)> assign = [&](std::size_t orbit) {
      if (found) return;
      if (orbit == group.orbits.size()) {
        const auto m = matrix_of(label);
        for (const auto& sg : group.elements)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
              if (m(sg[j], sg[i]) != m(j, i)) return;
        found = label;
        return;
      }
      const std::size_t rep = group.orbits[orbit].front();
      for (auto v : rec.cluster) {
        if (std::find(label.begin(), label.end(), v) != label.end()) continue;
        auto saved = label;
        bool ok = true;
        for (std::size_t e = 0; e < group.elements.size() && ok; ++e) {
          const std::size_t target = group.elements[e][rep];
          const VarId image = actions[e].perm[v];
          if (label[target] == unset) {
            if (std::find(label.begin(), label.end(), image) != label.end()) ok = false;
            else label[target] = image;
          } else if (label[target] != image) {
            ok = false;
          }
        }
        if (ok) assign(orbit + 1);
        label = saved;
        if (found) return;
      }
    };
    assign(0);
    if (!found) continue;

    InvariantSeed inv{s, *found, 0};
    const auto folded_matrix = fold_matrix(matrix_of(*found), group);
    std::vector<VarId> projected_cluster;
    for (const auto& orbit : group.orbits) projected_cluster.push_back(report.projection[(*found)[orbit.front()]]);
    auto t = std::find(projected_cluster.begin(), projected_cluster.end(), missing) == projected_cluster.end()
                 ? folded.find_seed(projected_cluster)
                 : std::nullopt;
    if (!t) {
      all_projected = false;
      continue;
    }
    const auto& target = folded.seed(*t);
    Relabeling r;
    for (auto v : projected_cluster)
      r.exchangeable.push_back(
          static_cast<std::size_t>(std::find(target.cluster.begin(), target.cluster.end(), v) - target.cluster.begin()));
    if (!(relabel(target.matrix, r) == folded_matrix)) all_projected = false;
    inv.projected = *t;
    projected_ids.insert(*t);
    report.seeds.push_back(std::move(inv));
  }
  report.bijective = all_projected && projected_ids.size() == report.seeds.size() &&
                     projected_ids.size() == folded.size();
  return report;
}

QuotientReport quotient_aut_check(const ExchangeGraph& unfolded, const AutGroup& unfolded_aut,
                                  const QuiverAutGroup& group, const ExchangeGraph& folded,
                                  const AutGroup& folded_aut, const std::vector<VarId>& projection) {
  QuotientReport out;
  out.unfolded_order = unfolded_aut.order();
  out.group_order = group.order();
  out.folded_order = folded_aut.order();
  out.order_law = out.group_order * out.folded_order == out.unfolded_order;

  std::set<ClusterAutomorphism> g_set;
  for (const auto& s : group.elements) g_set.insert(quiver_automorphism_action(unfolded, s));
  out.normal = true;
  for (const auto& f : unfolded_aut.elements) {
    const auto finv = f.inverse();
    for (const auto& a : g_set)
      if (!g_set.count(compose(compose(f, a), finv))) out.normal = false;
  }

  const std::size_t folded_size = folded.variables().size();
  auto induced = [&](const ClusterAutomorphism& f) -> std::optional<ClusterAutomorphism> {
    ClusterAutomorphism h{std::vector<VarId>(folded_size, folded_size), f.direct, {}};
    for (VarId v = 0; v < projection.size(); ++v) {
      const VarId from = projection[v], to = projection[f.perm[v]];
      if (from >= folded_size || to >= folded_size) return std::nullopt;
      if (h.perm[from] == folded_size) h.perm[from] = to;
      else if (h.perm[from] != to) return std::nullopt;
    }
    std::set<VarId> image(h.perm.begin(), h.perm.end());
    if (image.size() != folded_size || image.count(folded_size)) return std::nullopt;
    return h;
  };

  const std::set<ClusterAutomorphism> folded_set(folded_aut.elements.begin(), folded_aut.elements.end());
  std::set<ClusterAutomorphism> image;
  std::set<ClusterAutomorphism> kernel;
  bool well_defined = true;
  for (const auto& f : unfolded_aut.elements) {
    auto h = induced(f);
    if (!h || !folded_set.count(*h)) {
      well_defined = false;
      continue;
    }
    image.insert(*h);
    if (h->is_identity()) kernel.insert(f);
  }
  out.induced_isomorphism = well_defined && image == folded_set && kernel == g_set;

  const auto& b_unf = unfolded.seed(unfolded.initial()).matrix;
  const auto& b_fold = folded.seed(folded.initial()).matrix;
  RootSystem rs_unf(cartan_counterpart(b_unf));
  RootSystem rs_fold(cartan_counterpart(b_fold));
  const auto eps_unf = *bipartite_sign(b_unf);
  SignFunction eps_fold;
  for (const auto& orbit : group.orbits) eps_fold.signs.push_back(eps_unf(orbit.front()));
  const auto t_unf = tau_automorphisms(unfolded, rs_unf, eps_unf);
  const auto t_fold = tau_automorphisms(folded, rs_fold, eps_fold);
  auto hp = induced(t_unf.f_plus);
  auto hm = induced(t_unf.f_minus);
  out.tau_compatible = hp && hm && *hp == t_fold.f_plus && *hm == t_fold.f_minus;
  return out;
}

std::optional<DynkinType> listed_folded_type(const DynkinType& source) {
  switch (source.family) {
    case 'A':
      if (source.rank % 2 == 1 && source.rank >= 3) return DynkinType{'B', (source.rank + 1) / 2};
      return std::nullopt;
    case 'D':
      if (source.rank == 4) return DynkinType{'G', 2};
      return DynkinType{'C', source.rank - 1};
    case 'E':
      if (source.rank == 6) return DynkinType{'F', 4};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

DynkinType langlands_dual(const DynkinType& t) {
  if (t.family == 'B' && t.rank >= 3) return {'C', t.rank};
  if (t.family == 'C' && t.rank >= 3) return {'B', t.rank};
  return t;
}

FoldReport fold_report(const DynkinType& source, bool with_groups) {
  const auto b = bipartite_matrix(source);
  const auto group = quiver_aut_group(b);
  if (group.order() == 1) throw InvalidArgument(source.to_string() + " has no nontrivial quiver automorphism");
  FoldReport r{source, fold_matrix(b, group), group.order(), {}, {}, false, false, false, false, 0, 0, false, false, {}};
  r.computed_type = cartan_counterpart(r.folded).dynkin_type();
  r.listed_type = listed_folded_type(source);
  if (r.computed_type && r.listed_type) {
    r.matches_listed = *r.computed_type == *r.listed_type;
    r.matches_listed_up_to_duality = r.matches_listed || langlands_dual(*r.computed_type) == *r.listed_type;
  }

  // Roots: orbit sums carry the almost positive roots onto those of the fold and commute with tau.
  RootSystem rs_unf(source);
  RootSystem rs_fold(cartan_counterpart(r.folded));
  const auto eps_unf = *bipartite_sign(b);
  const auto eps_fold = *bipartite_sign(r.folded);
  std::set<std::size_t> hit;
  r.pi_commutes_with_tau = true;
  bool inside = true;
  for (const auto& alpha : rs_unf.almost_positive()) {
    const auto p = project_root(alpha, group);
    auto idx = rs_fold.index_of(p);
    if (!idx) {
      inside = false;
      r.pi_commutes_with_tau = false;
      continue;
    }
    hit.insert(*idx);
    for (int sign : {1, -1})
      if (project_root(tau(rs_unf, eps_unf, sign, alpha), group) != tau(rs_fold, eps_fold, sign, p))
        r.pi_commutes_with_tau = false;
  }
  r.pi_onto_roots = inside && hit.size() == rs_fold.almost_positive().size();

  const auto g_unf = exchange_graph(initial_seed(b), default_cap(source));
  const auto g_fold = exchange_graph(initial_seed(r.folded), default_cap(r.computed_type));
  const auto inv = invariant_seeds(g_unf, group, g_fold);
  r.invariant_seed_count = inv.seeds.size();
  r.folded_seed_count = g_fold.size();
  r.seed_bijection = inv.bijective;
  r.variables_onto = inv.variables_onto;
  if (with_groups) {
    const auto aut_unf = aut_group(g_unf);
    const auto aut_fold = aut_group(g_fold);
    r.quotient = quotient_aut_check(g_unf, aut_unf, group, g_fold, aut_fold, inv.projection);
  }
  return r;
}

}  // namespace clusteraut
