// simis: per-instance queries and the exhaustive small-case verifier.
//
// Exit codes: 0 answered/verified, 1 inconsistency or falsified property,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "simis/io.hpp"
#include "simis/random.hpp"
#include "simis/simis.hpp"

using namespace simis;
using io::Json;

namespace {

struct Globals {
  bool csv = false;
  std::size_t max_n = 12;
  std::uint64_t seed = 1;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    throw ArgumentError(std::string("malformed JSON: ") + e.what());
  }
}

void check_size(std::size_t n, const Globals& g) {
  if (n > g.max_n) {
    throw ResourceError("input has " + std::to_string(n) + " vertices, above --max-n " + std::to_string(g.max_n));
  }
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

Clutter read_clutter(const std::string& path, const std::string& as, const Globals& g) {
  const Json j = read_json(path);
  Clutter h = as == "graph" ? clutter_of_graph(io::parse_graph(j)) : io::parse_clutter(j);
  check_size(h.num_vertices(), g);
  return h;
}

int cmd_simis(const std::string& path, std::string as, unsigned k, const Globals& g) {
  const Json j = read_json(path);
  if (as.empty()) as = j.contains("gens") ? "ideal" : "graph";
  MonomialIdeal ideal = MonomialIdeal::zero(0);
  if (as == "ideal") {
    ideal = io::parse_ideal(j);
  } else if (as == "graph") {
    ideal = complementary_edge_ideal(io::parse_graph(j));
  } else {
    ideal = edge_ideal(io::parse_clutter(j));
  }
  check_size(ideal.num_vars(), g);
  Json out = io::to_json(is_simis(ideal, k));
  out["ideal"] = io::to_json(ideal);
  emit(out);
  return 0;
}

int cmd_packing(const std::string& path, const std::string& as, const Globals& g) {
  emit(io::to_json(has_packing(read_clutter(path, as, g), g.max_n)));
  return 0;
}

int cmd_koenig(const std::string& path, const std::string& as, const Globals& g) {
  const Clutter h = read_clutter(path, as, g);
  const int tau = cover_number(h);
  const int nu = matching_number(h);
  emit(Json{{"koenig", tau == nu}, {"cover_number", tau}, {"matching_number", nu}});
  return 0;
}

int cmd_classify(const std::string& path, const Globals& g) {
  const Graph graph = io::parse_graph(read_json(path));
  check_size(graph.num_vertices(), g);
  emit(io::to_json(classify_graph(graph)));
  return 0;
}

int cmd_decompose(const std::string& path, const Globals& g) {
  const Graph graph = io::parse_graph(read_json(path));
  check_size(graph.num_vertices(), g);
  emit(Json{{"ideal", io::to_json(complementary_edge_ideal(graph))},
            {"primes", io::to_json(primary_decomposition_cx(graph))}});
  return 0;
}

IncidenceMatrix read_matrix(const std::string& path) {
  const std::string text = read_input(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return io::parse_matrix(Json::parse(text));
    } catch (const Json::parse_error& e) {
      throw ArgumentError(std::string("malformed JSON: ") + e.what());
    }
  }
  std::istringstream in(text);
  return io::parse_dense_matrix(in);
}

int cmd_lp(const std::string& path, const std::vector<Weight>& alpha, std::optional<Weight> scan, std::size_t extend,
           const Globals& g) {
  const IncidenceMatrix m = extend_matrix(read_matrix(path), extend);
  check_size(m.cols(), g);
  Json out{{"matrix", io::to_json(m)}};
  if (scan) {
    const auto w = duality_gap_search(m, *scan);
    out["box"] = *scan;
    out["gap_found"] = w.has_value();
    if (w) {
      out["alpha"] = w->alpha;
      out["report"] = io::to_json(w->report);
    }
  } else {
    if (alpha.empty()) throw ArgumentError("lp: give --alpha or --scan");
    out["alpha"] = alpha;
    out["report"] = io::to_json(solve_lp(m, alpha));
  }
  // The structural test only applies to matrices with row sums n - 2.
  try {
    out["structural_mfmc"] = structural_mfmc_check(m);
  } catch (const ArgumentError&) {
    out["structural_mfmc"] = nullptr;
  }
  emit(out);
  return 0;
}

int cmd_verify(std::size_t n, const std::vector<unsigned>& ks, Weight box, const Globals& g) {
  TheoremOptions o;
  o.n = n;
  o.k_list = ks;
  o.box = box;
  o.max_packing_vertices = std::max(g.max_n, n);
  const auto report = verify_theorem(o);
  if (g.csv) {
    std::cout << io::to_csv(report);
  } else {
    emit(io::to_json(report));
  }
  if (!report.consistent) {
    for (const auto& row : report.rows) {
      if (!row.all_agree) std::cerr << "disagreement: " << io::to_json(row, o.k_list).dump() << '\n';
    }
    return 1;
  }
  return 0;
}

// Randomized checks of structural identities; any counterexample exits 1.
int cmd_property(std::size_t trials, const Globals& g) {
  std::mt19937_64 rng(g.seed);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::size_t extension = 0, weak = 0, inclusion = 0;
  Json failures = Json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    const Clutter h = random_clutter(rng, size(rng), 5);
    if (has_packing(h).packs != has_packing(extend(h, 1 + t % 2)).packs) {
      failures.push_back({{"check", "packing_under_extension"}, {"clutter", io::to_json(h)}});
    } else {
      ++extension;
    }
    if (matching_number(h) > cover_number(h)) {
      failures.push_back({{"check", "weak_duality"}, {"clutter", io::to_json(h)}});
    } else {
      ++weak;
    }
    const MonomialIdeal ideal = random_squarefree_ideal(rng, size(rng), 5);
    const auto sym = symbolic_power(ideal, 2);
    bool ok = true;
    const auto square = power(ideal, 2);
    for (const auto& m : square.generators()) ok = ok && contains_monomial(sym, m);
    if (ok) {
      ++inclusion;
    } else {
      failures.push_back({{"check", "power_in_symbolic_power"}, {"ideal", io::to_json(ideal)}});
    }
  }
  emit(Json{{"seed", g.seed},
            {"trials", trials},
            {"passed",
             {{"packing_under_extension", extension}, {"weak_duality", weak}, {"power_in_symbolic_power", inclusion}}},
            {"failures", failures}});
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic powers, packing and max-flow min-cut checks for small clutters"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  bool json = true;
  app.add_flag("--json", json, "JSON output (default)");
  app.add_flag("--csv", g.csv, "CSV output for verify-theorem");
  app.add_option("--max-n", g.max_n, "Largest accepted vertex count")->check(CLI::Range(1, 64));
  app.add_option("--seed", g.seed, "Seed for the property subcommand");

  std::string path, as;
  unsigned k = 2;
  auto* simis_cmd = app.add_subcommand("simis", "Decide I^(k) == I^k, with a witness on failure");
  simis_cmd->add_option("input", path, "JSON file (default stdin)");
  simis_cmd->add_option("-k", k, "Power")->check(CLI::Range(1u, 64u));
  simis_cmd->add_option("--as", as, "Read input as ideal, graph or clutter")
      ->check(CLI::IsMember({"ideal", "graph", "clutter"}));

  std::string clutter_as = "clutter";
  auto* packing_cmd = app.add_subcommand("packing", "Packing property with a failing minor");
  auto* koenig_cmd = app.add_subcommand("koenig", "Cover and matching numbers");
  for (auto* c : {packing_cmd, koenig_cmd}) {
    c->add_option("input", path, "JSON file (default stdin)");
    c->add_option("--as", clutter_as, "Read input as clutter or graph")->check(CLI::IsMember({"clutter", "graph"}));
  }

  auto* classify_cmd = app.add_subcommand("classify", "Reference-graph label plus isolated vertices");
  auto* decompose_cmd = app.add_subcommand("decompose", "Minimal primes of the complementary edge ideal");
  for (auto* c : {classify_cmd, decompose_cmd}) c->add_option("input", path, "JSON graph (default stdin)");

  std::vector<Weight> alpha;
  std::optional<Weight> scan;
  std::size_t extend_by = 0;
  auto* lp_cmd = app.add_subcommand("lp", "Covering and packing optima for a 0/1 matrix");
  lp_cmd->add_option("input", path, "JSON or dense text matrix (default stdin)");
  lp_cmd->add_option("--alpha", alpha, "Weight vector")->delimiter(',');
  lp_cmd->add_option("--scan", scan, "Search alpha in {0..B}^n for a gap");
  lp_cmd->add_option("--extend", extend_by, "Append r all-ones columns first");

  std::size_t n = 4;
  std::vector<unsigned> ks{2, 3};
  Weight box = 2;
  auto* verify_cmd = app.add_subcommand("verify-theorem", "Exhaustive check over graph classes on n vertices");
  verify_cmd->add_option("--n", n, "Vertex count (3..6)");
  verify_cmd->add_option("--k", ks, "Powers to check")->delimiter(',');
  verify_cmd->add_option("--box", box, "Gap scan bound, 0 to skip");

  std::size_t trials = 100;
  auto* property_cmd = app.add_subcommand("property", "Randomized identity checks driven by --seed");
  property_cmd->add_option("--trials", trials, "Number of random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (lp_cmd->parsed() && scan && !alpha.empty()) {
    std::cerr << "lp: --alpha and --scan are exclusive\n";
    return 2;
  }

  try {
    if (simis_cmd->parsed()) return cmd_simis(path, as, k, g);
    if (packing_cmd->parsed()) return cmd_packing(path, clutter_as, g);
    if (koenig_cmd->parsed()) return cmd_koenig(path, clutter_as, g);
    if (classify_cmd->parsed()) return cmd_classify(path, g);
    if (decompose_cmd->parsed()) return cmd_decompose(path, g);
    if (lp_cmd->parsed()) return cmd_lp(path, alpha, scan, extend_by, g);
    if (verify_cmd->parsed()) return cmd_verify(n, ks, box, g);
    if (property_cmd->parsed()) return cmd_property(trials, g);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
