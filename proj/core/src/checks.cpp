#include "clusteraut/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "clusteraut/automorphism.hpp"
#include "clusteraut/folding.hpp"
#include "clusteraut/pattern.hpp"
#include "clusteraut/root_system.hpp"
#include "clusteraut/universal.hpp"

namespace clusteraut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Typed {
  DynkinType type;
  RootSystem rs;
  SignFunction eps;
  ExchangeMatrix b;
  ExchangeGraph g;
};

Typed build(const std::string& label) {
  const auto t = DynkinType::parse(label);
  RootSystem rs(t);
  auto eps = rs.canonical_sign();
  auto b = bipartite_matrix(t);
  auto g = exchange_graph(initial_seed(b), default_cap(t));
  return {t, std::move(rs), std::move(eps), std::move(b), std::move(g)};
}

// Collects per-case failures into one result.
struct Tally {
  CheckResult r;
  std::ostringstream ok;
  std::ostringstream bad;

  Tally(int id, std::string name) {
    r.id = id;
    r.name = std::move(name);
  }
  void expect(bool cond, const std::string& what) { (cond ? ok : bad) << what << "; "; }
  CheckResult finish() {
    r.pass = bad.str().empty();
    r.detail = r.pass ? ok.str() : "failed: " + bad.str();
    while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
    return r;
  }
};

std::string fmt_time(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

// Exponents table, kept apart from the library's.
std::vector<int> oracle_exponents(const DynkinType& t) {
  std::vector<int> e;
  const int n = t.rank;
  switch (t.family) {
    case 'A':
      for (int i = 1; i <= n; ++i) e.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      break;
    case 'E':
      if (n == 6) e = {1, 4, 5, 7, 8, 11};
      if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case 'F':
      e = {1, 5, 7, 11};
      break;
    case 'G':
      e = {1, 5};
      break;
  }
  return e;
}

std::int64_t catalan_oracle(const DynkinType& t) {
  const auto e = oracle_exponents(t);
  const int h = *std::max_element(e.begin(), e.end()) + 1;
  std::int64_t num = 1, den = 1;
  for (int x : e) {
    num *= x + h + 1;
    den *= x + 1;
  }
  return num / den;
}

// Random skew-symmetrizable matrix with a connected principal part.
ExchangeMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(2, 5), frozen(0, 3), d(1, 3), c(-2, 2), cnz(1, 2), sgn(0, 1), y(-3, 3);
  const std::size_t n = static_cast<std::size_t>(size(rng));
  const std::size_t f = static_cast<std::size_t>(frozen(rng));
  std::vector<Int> dd(n);
  for (auto& x : dd) x = d(rng);
  IntMatrix m(n + f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Int v = c(rng);
      if (j == i + 1 && v == 0) v = sgn(rng) ? cnz(rng) : -cnz(rng);
      m(i, j) = v * dd[j];
      m(j, i) = -v * dd[i];
    }
  for (std::size_t r = n; r < n + f; ++r)
    for (std::size_t i = 0; i < n; ++i) m(r, i) = y(rng);
  for (std::size_t r = n; r < n + f; ++r)
    if (m(r, 0) == 0) m(r, 0) = 1;
  return ExchangeMatrix(std::move(m), n);
}

const std::vector<std::string> kSmallTypes = {"A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"};

}  // namespace

CheckResult check_tau_groups(const CheckOptions& opt) {
  Tally t(1, "tau group orders");
  std::vector<std::pair<std::string, std::size_t>> cases = {{"A2", 5}, {"A3", 6}, {"A4", 7}, {"B2", 3},
                                                            {"B3", 4}, {"C3", 4}, {"D4", 4}, {"G2", 4}};
  if (opt.slow) {
    cases.push_back({"E6", 14});
    cases.push_back({"F4", 7});
  }
  for (const auto& [label, rot] : cases) {
    const auto t0 = Clock::now();
    RootSystem rs(DynkinType::parse(label));
    const auto tg = tau_group(rs, rs.canonical_sign());
    const double s = seconds_since(t0);
    t.expect(tg.rotation_order == rot && tg.order == 2 * rot && s < 1.0,
             label + " D" + std::to_string(tg.rotation_order) + " order " + std::to_string(tg.order) + " in " +
                 fmt_time(s));
  }
  return t.finish();
}

CheckResult check_simply_laced_aut(const CheckOptions& opt) {
  Tally t(2, "automorphism groups, simply laced");
  std::vector<std::pair<std::string, std::size_t>> cases = {{"A2", 10}, {"A3", 12}, {"A4", 14}, {"D4", 48}};
  if (opt.slow) cases.push_back({"E6", 28});
  for (const auto& [label, order] : cases) {
    const auto t0 = Clock::now();
    const auto ty = build(label);
    const auto a = aut_group(ty.g);
    const double s = seconds_since(t0);
    const double limit = ty.type.rank <= 4 ? 10.0 : 300.0;
    t.expect(a.order() == order && s < limit,
             label + " order " + std::to_string(a.order()) + " (" + a.structure + ") in " + fmt_time(s));
  }
  return t.finish();
}

CheckResult check_non_simply_laced_aut(const CheckOptions& opt) {
  Tally t(3, "automorphism groups, non-simply laced");
  std::vector<std::pair<std::string, std::size_t>> cases = {{"B2", 6}, {"B3", 8}, {"C3", 8}, {"G2", 8}};
  if (opt.slow) cases.push_back({"F4", 14});
  for (const auto& [label, order] : cases) {
    const auto t0 = Clock::now();
    const auto ty = build(label);
    const auto a = aut_group(ty.g);
    t.expect(a.order() == order,
             label + " order " + std::to_string(a.order()) + " (" + a.structure + ") in " + fmt_time(seconds_since(t0)));
  }
  return t.finish();
}

CheckResult check_tau_law(const CheckOptions&) {
  Tally t(4, "f_plus and f_minus act as tau on roots");
  for (const std::string label : {"A3", "B3"}) {
    const auto ty = build(label);
    const auto bij = root_variable_bijection(ty.g, ty.rs);
    const auto fs = tau_automorphisms(ty.g, ty.rs, ty.eps);
    const auto& ap = ty.rs.almost_positive();
    std::size_t agree = 0;
    const std::size_t total = ty.g.variables().size();
    for (VarId v = 0; v < total; ++v) {
      const auto& alpha = ap[bij.root_of[v]];
      const auto plus = ty.rs.index_of(tau(ty.rs, ty.eps, 1, alpha));
      const auto minus = ty.rs.index_of(tau(ty.rs, ty.eps, -1, alpha));
      if (plus && minus && bij.root_of[fs.f_plus.perm[v]] == *plus && bij.root_of[fs.f_minus.perm[v]] == *minus)
        ++agree;
    }
    t.expect(agree == total && total == ap.size(),
             label + " " + std::to_string(agree) + "/" + std::to_string(total) + " variables");
  }
  return t.finish();
}

CheckResult check_graph_sizes(const CheckOptions& opt) {
  Tally t(5, "exchange graph sizes");
  std::vector<std::pair<std::string, std::size_t>> cases = {{"A2", 5},  {"A3", 14}, {"A4", 42}, {"B2", 6},
                                                            {"B3", 20}, {"C3", 20}, {"D4", 50}, {"G2", 8}};
  if (opt.slow) {
    cases.push_back({"F4", 105});
    cases.push_back({"E6", 833});
  }
  for (const auto& [label, expected] : cases) {
    const auto ty = build(label);
    const auto oracle = catalan_oracle(ty.type);
    t.expect(ty.g.size() == expected && static_cast<std::int64_t>(expected) == oracle,
             label + " " + std::to_string(ty.g.size()) + " seeds");
  }
  return t.finish();
}

CheckResult check_belt(const CheckOptions&) {
  Tally t(6, "bipartite seeds lie on one belt");
  for (const std::string label : {"A3", "B3", "D4"}) {
    const auto ty = build(label);
    const auto bip = enumerate_bipartite_seeds(ty.g);
    const std::set<SeedId> bip_set(bip.begin(), bip.end());
    const auto ids = belt_seed_ids(ty.g, bipartite_belt(initial_seed(ty.b)));
    const std::set<SeedId> belt_set(ids.begin(), ids.end());
    bool unique = true;
    for (SeedId s : bip) {
      const auto other = belt_seed_ids(ty.g, bipartite_belt(ty.g.labeled(s)));
      unique = unique && std::set<SeedId>(other.begin(), other.end()) == belt_set;
    }
    t.expect(bip_set == belt_set && unique,
             label + " " + std::to_string(bip.size()) + " bipartite seeds, belt of " + std::to_string(belt_set.size()));
  }
  return t.finish();
}

CheckResult check_folding(const CheckOptions&) {
  Tally t(7, "folding");
  const std::vector<std::tuple<std::string, std::string, std::size_t, std::size_t>> cases = {{"A3", "B2", 2, 6},
                                                                                             {"D4", "G2", 6, 8}};
  for (const auto& [src, target, group, seeds] : cases) {
    const auto r = fold_report(DynkinType::parse(src));
    const bool type_ok = r.computed_type && r.computed_type->to_string() == target;
    const bool law = r.quotient && r.quotient->order_law && r.quotient->normal && r.quotient->induced_isomorphism;
    t.expect(type_ok && r.group_order == group && r.invariant_seed_count == seeds && r.folded_seed_count == seeds &&
                 r.seed_bijection && law,
             src + "/" + std::to_string(r.group_order) + " -> " +
                 (r.computed_type ? r.computed_type->to_string() : "?") + ", " +
                 std::to_string(r.invariant_seed_count) + " invariant seeds, " +
                 (r.quotient ? std::to_string(r.quotient->unfolded_order) + "/" +
                                   std::to_string(r.quotient->group_order) + "=" +
                                   std::to_string(r.quotient->folded_order)
                             : "no group check"));
  }
  return t.finish();
}

CheckResult check_universal(const CheckOptions&) {
  Tally t(8, "universal coefficients");
  for (const auto& [label, order] : std::vector<std::pair<std::string, std::size_t>>{{"A2", 10}, {"B2", 6}, {"A3", 12}}) {
    const auto t0 = Clock::now();
    const auto ty = DynkinType::parse(label);
    RootSystem rs(ty);
    const auto eps = rs.canonical_sign();
    const auto u = universal_matrix(bipartite_matrix(ty), rs, eps);
    const auto dual = rs.dual();
    const auto& coroots = dual.almost_positive();
    const std::size_t n = u.n();

    // Match the rows of the composite mutation against -U directly.
    bool sym = true;
    std::vector<std::vector<std::size_t>> perms;
    for (int sign : {-1, 1}) {
      ExchangeMatrix m = u;
      for (std::size_t k = 0; k < n; ++k)
        if (eps(k) == sign) m = mutate_matrix(m, k);
      std::vector<std::size_t> rho(coroots.size(), coroots.size());
      for (std::size_t f = 0; f < coroots.size(); ++f)
        for (std::size_t g = 0; g < coroots.size(); ++g) {
          bool same = true;
          for (std::size_t i = 0; i < n; ++i) same = same && m(n + f, i) == -u(n + g, i);
          if (same) rho[f] = g;
        }
      for (std::size_t f = 0; f < coroots.size(); ++f)
        sym = sym && rho[f] < coroots.size() && coroots[rho[f]] == tau(dual, eps, -sign, coroots[f]);
      sym = sym && rho == frozen_tau_symmetry(u, rs, eps, sign);
      perms.push_back(rho);
    }
    // Composite of the two frozen permutations has the rotation order of the dual tau group.
    std::vector<std::size_t> rot(coroots.size());
    for (std::size_t f = 0; f < rot.size(); ++f) rot[f] = perms[0][perms[1][f]];
    std::size_t k = 1;
    for (auto p = rot; !std::is_sorted(p.begin(), p.end()) || p.front() != 0; ++k)
      for (auto& x : p) x = rot[x];
    sym = sym && k == tau_group(dual, eps).rotation_order;

    const auto rep = aut_univ(u, 100000);
    const double s = seconds_since(t0);
    t.expect(is_gluing_free(u) && rep.gluing_free_everywhere && sym && rep.group.order() == order &&
                 rep.principal_order == order && rep.restriction_bijective && s < 60.0,
             label + " " + std::to_string(u.frozen_count()) + " frozen rows, order " +
                 std::to_string(rep.group.order()) + " in " + fmt_time(s));
  }
  return t.finish();
}

CheckResult check_properties(const CheckOptions& opt) {
  Tally t(9, "property suites");
  const auto t0 = Clock::now();
  std::mt19937 rng(opt.seed);

  std::size_t involutions = 0, symmetrizers = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto b = random_matrix(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, b.n() - 1)(rng);
    const auto mb = mutate_matrix(b, k);
    if (mutate_matrix(mb, k) == b) ++involutions;
    if (find_symmetrizer(mb) == find_symmetrizer(b)) ++symmetrizers;
  }
  t.expect(involutions == 200, "mutation involution " + std::to_string(involutions) + "/200");
  t.expect(symmetrizers == 200, "symmetrizer invariance " + std::to_string(symmetrizers) + "/200");

  std::size_t walks = 0, glued = 0;
  for (const std::string label : {"A2", "A3", "B2", "G2", "B3", "D4"}) {
    const auto ty = DynkinType::parse(label);
    RootSystem rs(ty);
    const auto u = universal_matrix(bipartite_matrix(ty), rs, rs.canonical_sign());
    for (int w = 0; w < 20; ++w, ++walks) {
      ExchangeMatrix m = u;
      std::uniform_int_distribution<std::size_t> pick(0, u.n() - 1);
      for (int step = 0; step < 30; ++step) {
        m = mutate_matrix(m, pick(rng));
        if (!is_gluing_free(m)) {
          ++glued;
          break;
        }
      }
    }
  }
  t.expect(glued == 0, "gluing-free along " + std::to_string(walks) + " random walks");

  std::vector<std::string> types = kSmallTypes;
  for (const std::string extra : {"A5", "D5", "C4", "B4", "E6", "F4"}) types.push_back(extra);
  std::size_t tau_bad = 0, roots_seen = 0, cover_bad = 0;
  for (const auto& label : types) {
    RootSystem rs(DynkinType::parse(label));
    const auto eps = rs.canonical_sign();
    const auto& ap = rs.almost_positive();
    for (const auto& a : ap)
      for (int sign : {1, -1}) {
        ++roots_seen;
        const auto ta = tau(rs, eps, sign, a);
        if (!rs.is_almost_positive(ta) || tau(rs, eps, sign, ta) != a) ++tau_bad;
      }
    std::vector<int> hits(ap.size(), 0);
    for (const auto& [i, r] : d_vector_window(rs, eps)) {
      const auto idx = rs.index_of(d_vector_walk(rs, eps, i, r));
      if (idx) ++hits[*idx];
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) ++cover_bad;
  }
  t.expect(tau_bad == 0, "tau involutive on " + std::to_string(roots_seen) + " root/sign pairs over " +
                             std::to_string(types.size()) + " types");
  t.expect(cover_bad == 0, "window covers every almost positive root once");

  std::size_t checked = 0, negative = 0;
  std::vector<std::string> pos_types = kSmallTypes;
  if (opt.slow) pos_types.push_back("F4");
  for (const auto& label : pos_types) {
    const auto ty = DynkinType::parse(label);
    const auto g = exchange_graph(initial_seed(bipartite_matrix(ty)), default_cap(ty));
    for (const auto& v : g.variables()) {
      ++checked;
      for (const auto& term : v.terms())
        if (term.coeff <= 0) {
          ++negative;
          break;
        }
    }
  }
  t.expect(negative == 0, "positive coefficients in " + std::to_string(checked) + " cluster variables");
  const double s = seconds_since(t0);
  t.expect(s < 10.0, "total " + fmt_time(s));
  return t.finish();
}

std::vector<CheckResult> run_checks(const CheckOptions& opt) {
  const std::vector<std::pair<std::string, std::function<CheckResult(const CheckOptions&)>>> all = {
      {"tau group orders", check_tau_groups},
      {"automorphism groups, simply laced", check_simply_laced_aut},
      {"automorphism groups, non-simply laced", check_non_simply_laced_aut},
      {"f_plus and f_minus act as tau on roots", check_tau_law},
      {"exchange graph sizes", check_graph_sizes},
      {"bipartite seeds lie on one belt", check_belt},
      {"folding", check_folding},
      {"universal coefficients", check_universal},
      {"property suites", check_properties}};
  std::vector<CheckResult> out;
  int id = 0;
  for (const auto& [name, fn] : all) {
    ++id;
    try {
      out.push_back(fn(opt));
    } catch (const std::exception& e) {
      out.push_back({id, name, false, std::string("exception: ") + e.what()});
    }
  }
  return out;
}

std::string format_check(const CheckResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail;
}

}  // namespace clusteraut
