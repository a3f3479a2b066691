#include "clusteraut/universal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "clusteraut/error.hpp"

namespace clusteraut {

namespace {

std::string coroot_label(const RootVector& c) {
  std::ostringstream os;
  os << "coroot:(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

LaurentPoly specialize_into(const LaurentPoly& p, const RingPtr& ring) {
  std::vector<LaurentPoly> images;
  for (std::size_t i = 0; i < p.nvars(); ++i)
    images.push_back(i < ring->size() ? LaurentPoly::variable(ring, i) : LaurentPoly::constant(ring, 1));
  return substitute(p, images);
}

}  // namespace

ExchangeMatrix universal_matrix(const ExchangeMatrix& b, const RootSystem& rs, const SignFunction& eps) {
  if (!b.coefficient_free()) throw InvalidArgument("universal matrix needs a coefficient-free matrix");
  auto sign = bipartite_sign(b);
  if (!sign || !(*sign == eps)) throw InvalidArgument("universal matrix needs B bipartite with respect to eps");
  if (!(cartan_counterpart(b).entries() == rs.cartan().entries()))
    throw InvalidArgument("root system does not match the Cartan counterpart of B");
  const std::size_t n = b.n();
  const auto dual = rs.dual();
  const auto& coroots = dual.almost_positive();
  IntMatrix u(n + coroots.size(), n);
  std::vector<std::string> labels = b.row_labels();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) u(j, i) = b(j, i);
  for (std::size_t f = 0; f < coroots.size(); ++f) {
    for (std::size_t i = 0; i < n; ++i) u(n + f, i) = eps(i) * coroots[f][i];
    labels.push_back(coroot_label(coroots[f]));
  }
  ExchangeMatrix out(std::move(u), n, std::move(labels));
  if (!is_gluing_free(out)) throw InvariantViolation("universal matrix has two equal frozen rows");
  return out;
}

std::vector<std::size_t> frozen_tau_symmetry(const ExchangeMatrix& u, const RootSystem& rs, const SignFunction& eps,
                                             int sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  const auto dual = rs.dual();
  const auto& coroots = dual.almost_positive();
  if (u.frozen_count() != coroots.size()) throw InvalidArgument("matrix is not a universal matrix for rs");
  std::vector<std::size_t> rho;
  for (const auto& c : coroots) rho.push_back(*dual.index_of(tau(dual, eps, -sign, c)));

  ExchangeMatrix m = u;
  for (std::size_t k = 0; k < u.n(); ++k)
    if (eps(k) == sign) m = mutate_matrix(m, k);
  const std::size_t n = u.n();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (m(j, i) != -u(j, i)) throw InvariantViolation("composite mutation does not negate the principal part");
  for (std::size_t f = 0; f < coroots.size(); ++f)
    for (std::size_t i = 0; i < n; ++i)
      if (m(n + f, i) != -u(n + rho[f], i))
        throw InvariantViolation("mutated frozen row differs from the tau-permuted negated row");
  return rho;
}

LaurentPoly specialize(const LaurentPoly& p, std::size_t n) { return specialize_into(p, make_ring(n)); }

LabeledSeed specialize(const LabeledSeed& s) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.n(); ++i) names.push_back("x" + std::to_string(i + 1));
  const auto ring = make_ring(std::move(names));
  LabeledSeed out{{}, {}, s.matrix.principal_part()};
  for (const auto& x : s.exchangeables) out.exchangeables.push_back(specialize_into(x, ring));
  return out;
}

UniversalAutReport aut_univ(const ExchangeMatrix& u, std::size_t cap) {
  const auto gu = exchange_graph(initial_seed(u), cap);
  const auto gp = exchange_graph(initial_seed(u.principal_part()), cap);
  const auto aut_p = aut_group(gp);

  UniversalAutReport report{AutGroup{}, aut_p.order()};
  report.gluing_free_everywhere = true;
  for (SeedId s = 0; s < gu.size(); ++s)
    if (!is_gluing_free(gu.seed(s).matrix)) report.gluing_free_everywhere = false;

  std::set<ClusterAutomorphism> found;
  for (SeedId s = 0; s < gu.size(); ++s) {
    const auto& rec = gu.seed(s);
    for (int sign : {1, -1}) {
      for (const auto& r : matrix_isomorphisms(rec.matrix, u, sign)) {
        std::vector<VarId> images;
        for (auto i : r.exchangeable) images.push_back(rec.cluster[i]);
        auto t = transport_seed_map(gu, images);
        if (!t) throw InvariantViolation("path transport failed for a matrix isomorphism");
        t->direct = sign == 1;
        t->frozen_perm = r.frozen;
        found.insert(*t);
      }
    }
  }
  auto& group = report.group;
  group.elements.assign(found.begin(), found.end());
  for (const auto& f : group.elements) {
    std::vector<VarId> images(f.perm.begin(), f.perm.begin() + static_cast<std::ptrdiff_t>(gu.n()));
    auto sub = extend_seed_map(gu, images, f.direct ? 1 : -1, f.frozen_perm);
    if (!sub || !(*sub == f)) throw InvariantViolation("substitution and path transport disagree");
  }
  for (const auto& a : group.elements)
    for (const auto& b : group.elements)
      if (!found.count(compose(a, b))) throw InvariantViolation("automorphisms are not closed under composition");
  group.direct_count = static_cast<std::size_t>(
      std::count_if(group.elements.begin(), group.elements.end(), [](const ClusterAutomorphism& f) { return f.direct; }));
  for (const auto& f : group.elements) {
    const auto current = generated_subgroup(group.generators, gu.variables().size());
    if (current.size() == group.order()) break;
    if (!std::binary_search(current.begin(), current.end(), f)) group.generators.push_back(f);
  }

  // Restriction by specialization.
  const std::size_t np = gp.variables().size();
  std::vector<VarId> projection;
  for (const auto& x : gu.variables()) {
    auto v = gp.find_variable(specialize_into(x, gp.ring()));
    projection.push_back(v ? *v : np);
  }
  const std::set<ClusterAutomorphism> principal(aut_p.elements.begin(), aut_p.elements.end());
  std::set<ClusterAutomorphism> image;
  bool ok = std::find(projection.begin(), projection.end(), np) == projection.end();
  for (const auto& f : group.elements) {
    if (!ok) break;
    ClusterAutomorphism h{std::vector<VarId>(np, np), f.direct, {}};
    for (VarId v = 0; v < projection.size(); ++v) {
      const VarId from = projection[v], to = projection[f.perm[v]];
      if (h.perm[from] != np && h.perm[from] != to) ok = false;
      h.perm[from] = to;
    }
    if (!ok || !principal.count(h)) {
      ok = false;
      break;
    }
    image.insert(h);
  }
  report.restriction_bijective = ok && image.size() == group.order() && image == principal;
  group.structure = report.restriction_bijective ? aut_p.structure : "order " + std::to_string(group.order());
  return report;
}

}  // namespace clusteraut
