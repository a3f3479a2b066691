// clusteraut: command-line front end.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "clusteraut/checks.hpp"
#include "clusteraut/error.hpp"
#include "clusteraut/serialize.hpp"

using namespace clusteraut;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kCap = 3, kInvariant = 4 };

struct Input {
  std::string type;
  std::string matrix;
  std::string out = "json";
  std::size_t cap = 0;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

ExchangeMatrix load_matrix(const Input& in) {
  if (!in.type.empty() && !in.matrix.empty()) throw InvalidArgument("give either --type or --matrix, not both");
  if (!in.type.empty()) return bipartite_matrix(DynkinType::parse(in.type));
  if (in.matrix.empty()) throw InvalidArgument("one of --type or --matrix is required");
  std::string text;
  if (in.matrix == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream f(in.matrix);
    if (!f) throw InvalidArgument("cannot open " + in.matrix);
    text = read_all(f);
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return matrix_from_json(Json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidArgument(std::string("bad json: ") + e.what());
    }
  }
  return parse_matrix_text(text);
}

DynkinType load_type(const Input& in) {
  if (!in.type.empty()) return DynkinType::parse(in.type);
  const auto b = load_matrix(in);
  const auto t = cartan_counterpart(b.principal_part()).dynkin_type();
  if (!t) throw InvalidArgument("Cartan counterpart of the matrix is not of finite type");
  return *t;
}

std::size_t cap_for(const Input& in, const ExchangeMatrix& b) {
  if (in.cap) return in.cap;
  if (!in.type.empty()) return default_cap(DynkinType::parse(in.type));
  return default_cap(b.coefficient_free() ? is_finite_type(b) : std::nullopt);
}

void require_out(const Input& in, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (in.out == a) return;
  throw InvalidArgument("--out " + in.out + " is not supported by this verb");
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_mutate(const Input& in, const std::vector<std::size_t>& ks) {
  require_out(in, {"json", "text", "dot"});
  auto b = load_matrix(in);
  for (auto k : ks) {
    if (k < 1 || k > b.n()) throw InvalidArgument("--k must lie in 1.." + std::to_string(b.n()));
    b = mutate_matrix(b, k - 1);
  }
  if (in.out == "text") std::cout << to_matrix_text(b);
  else if (in.out == "dot") std::cout << quiver_dot(b);
  else emit(to_json(b));
  return kOk;
}

int run_graph(const Input& in) {
  require_out(in, {"json", "text", "dot"});
  const auto b = load_matrix(in);
  const auto g = exchange_graph(initial_seed(b), cap_for(in, b));
  if (in.out == "dot") {
    std::cout << exchange_graph_dot(g);
  } else if (in.out == "text") {
    std::cout << "seeds " << g.size() << "\nvariables " << g.variables().size() << "\nedges " << g.edges().size()
              << '\n';
    for (VarId v = 0; v < g.variables().size(); ++v) std::cout << v << ' ' << to_string(g.variable(v)) << '\n';
  } else {
    emit(to_json(g));
  }
  return kOk;
}

int run_belt(const Input& in) {
  require_out(in, {"json", "text", "dot"});
  const auto b = load_matrix(in);
  const auto belt = bipartite_belt(initial_seed(b));
  if (in.out == "dot") {
    const auto g = exchange_graph(initial_seed(b), cap_for(in, b));
    const auto ids = belt_seed_ids(g, belt);
    std::cout << exchange_graph_dot(g, {ids.begin(), ids.end()});
    return kOk;
  }
  if (in.out == "text") {
    for (std::size_t r = 0; r < belt.period(); ++r) {
      std::cout << r << ':';
      for (const auto& x : belt.seeds[r].exchangeables) std::cout << "  " << to_string(x);
      std::cout << '\n';
    }
    return kOk;
  }
  Json seeds = Json::array();
  for (const auto& s : belt.seeds) {
    Json vars = Json::array();
    for (const auto& x : s.exchangeables) vars.push_back(to_string(x));
    seeds.push_back({{"variables", vars}, {"matrix", to_json(s.matrix)}});
  }
  emit({{"eps", belt.eps.signs}, {"period", belt.period()}, {"seeds", seeds}});
  return kOk;
}

int run_roots(const Input& in) {
  require_out(in, {"json", "text"});
  RootSystem rs(load_type(in));
  if (in.out == "text") {
    for (const auto& r : rs.almost_positive()) std::cout << rs.render(r) << '\n';
    return kOk;
  }
  Json roots = Json::array();
  for (const auto& r : rs.almost_positive()) roots.push_back({{"coords", r}, {"name", rs.render(r)}});
  emit({{"type", rs.type().to_string()},
        {"coxeter_number", rs.coxeter_number()},
        {"exponents", rs.exponents()},
        {"w0_involution", rs.w0_involution()},
        {"almost_positive", roots}});
  return kOk;
}

int run_tau_group(const Input& in) {
  require_out(in, {"json", "text"});
  RootSystem rs(load_type(in));
  const auto eps = rs.canonical_sign();
  const auto t = tau_group(rs, eps);
  if (in.out == "text") {
    std::cout << "D" << t.rotation_order << " order " << t.order << '\n';
    return kOk;
  }
  auto j = to_json(t, rs);
  j["longest_involution"] = longest_involution(rs, eps);
  emit(j);
  return kOk;
}

int run_aut_group(const Input& in) {
  require_out(in, {"json", "text"});
  const auto b = load_matrix(in);
  const auto g = exchange_graph(initial_seed(b), cap_for(in, b));
  const auto a = aut_group(g);
  if (in.out == "text") std::cout << a.structure << " order " << a.order() << '\n';
  else emit(to_json(a));
  return kOk;
}

int run_fold(const Input& in, bool skip_groups) {
  require_out(in, {"json", "text"});
  const auto r = fold_report(load_type(in), !skip_groups);
  if (in.out == "text") std::cout << to_matrix_text(r.folded);
  else emit(to_json(r));
  return kOk;
}

int run_universal(const Input& in, bool with_aut) {
  require_out(in, {"json", "text", "dot"});
  const auto t = load_type(in);
  RootSystem rs(t);
  const auto eps = rs.canonical_sign();
  const auto u = universal_matrix(bipartite_matrix(t), rs, eps);
  if (in.out == "text") {
    std::cout << to_matrix_text(u);
    return kOk;
  }
  if (in.out == "dot") {
    std::cout << quiver_dot(u);
    return kOk;
  }
  Json j{{"type", t.to_string()},
         {"matrix", to_json(u)},
         {"frozen_tau_minus", frozen_tau_symmetry(u, rs, eps, -1)},
         {"frozen_tau_plus", frozen_tau_symmetry(u, rs, eps, 1)}};
  if (with_aut) {
    const auto r = aut_univ(u, in.cap ? in.cap : default_cap(t));
    j["automorphisms"] = to_json(r.group);
    j["principal_order"] = r.principal_order;
    j["gluing_free_everywhere"] = r.gluing_free_everywhere;
    j["restriction_bijective"] = r.restriction_bijective;
  }
  emit(j);
  return kOk;
}

int run_check(const Input& in, bool slow, std::uint32_t seed) {
  require_out(in, {"json", "text"});
  const auto results = run_checks({slow, seed});
  bool all = true;
  Json j = Json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    if (in.out == "text") std::cout << format_check(r) << '\n';
    j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  if (in.out == "json") emit(j);
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster algebra automorphisms of finite type"};
  app.require_subcommand(1);
  Input in;
  std::vector<std::size_t> ks;
  bool skip_groups = false, with_aut = false, slow = false;
  std::uint32_t seed = CheckOptions{}.seed;

  auto common = [&](CLI::App* sub, bool matrix) {
    sub->add_option("--type", in.type, "Dynkin type label, e.g. A3, B2, E6");
    if (matrix) sub->add_option("--matrix", in.matrix, "matrix file (text or json), '-' for stdin");
    sub->add_option("--out", in.out, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--cap", in.cap, "maximum number of seeds");
  };
  auto* mutate = app.add_subcommand("mutate", "mutate an exchange matrix");
  common(mutate, true);
  mutate->add_option("--k", ks, "1-based mutation indices, applied in order")->required();
  auto* graph = app.add_subcommand("graph", "exchange graph");
  common(graph, true);
  auto* belt = app.add_subcommand("belt", "bipartite belt");
  common(belt, true);
  auto* roots = app.add_subcommand("roots", "almost positive roots");
  common(roots, true);
  auto* tau = app.add_subcommand("tau-group", "group generated by tau_plus and tau_minus");
  common(tau, true);
  auto* aut = app.add_subcommand("aut-group", "cluster automorphism group");
  common(aut, true);
  auto* fold = app.add_subcommand("fold", "fold a simply laced type by its quiver automorphisms");
  common(fold, false);
  fold->add_flag("--skip-groups", skip_groups, "skip the automorphism group comparison");
  auto* univ = app.add_subcommand("universal", "universal coefficient matrix");
  common(univ, false);
  univ->add_flag("--aut", with_aut, "also compute its automorphism group");
  auto* check = app.add_subcommand("check", "run the acceptance checks");
  check->add_option("--out", in.out, "json or text")->check(CLI::IsMember({"json", "text"}));
  check->add_flag("--slow", slow, "include E6 and F4");
  check->add_option("--seed", seed, "random seed for the property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*mutate) return run_mutate(in, ks);
    if (*graph) return run_graph(in);
    if (*belt) return run_belt(in);
    if (*roots) return run_roots(in);
    if (*tau) return run_tau_group(in);
    if (*aut) return run_aut_group(in);
    if (*fold) return run_fold(in, skip_groups);
    if (*univ) return run_universal(in, with_aut);
    if (*check) return run_check(in, slow, seed);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const Error& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  }
  return kParse;
}
