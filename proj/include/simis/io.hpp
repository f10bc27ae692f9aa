#pragma once

// JSON and text formats. Vertices and variables are 1-based on the wire.
//
//   monomial          [e1, ..., en]
//   ideal             {"n": n, "gens": [[...], ...]}
//   clutter / graph   {"n": 4, "edges": [[1,2],[3,4]]}
//   matrix            {"rows": m, "cols": n, "data": [[0,1,...], ...]}
//                     or dense text, one row of 0/1 characters per line

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "simis/clutter.hpp"
#include "simis/errors.hpp"
#include "simis/graph.hpp"
#include "simis/lp_duality.hpp"
#include "simis/monomial.hpp"
#include "simis/theorem.hpp"

namespace simis::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ArgumentError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::size_t require_count(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ArgumentError(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

inline std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw ArgumentError("expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ArgumentError("expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

inline Json labels_json(VertexMask m) { return Json(labels_of(m)); }

}  // namespace detail

inline Json to_json(const Monomial& m) { return Json(m.exponents()); }

inline Monomial parse_monomial(const Json& j, std::size_t n) {
  auto values = detail::int_list(j);
  if (values.size() != n) throw DimensionError("monomial length differs from n");
  std::vector<Exponent> exps;
  for (int v : values) {
    if (v < 0) throw ArgumentError("exponents must be nonnegative");
    exps.push_back(static_cast<Exponent>(v));
  }
  return Monomial(std::move(exps));
}

inline Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return Json{{"n", ideal.num_vars()}, {"gens", gens}};
}

inline MonomialIdeal parse_ideal(const Json& j) {
  const std::size_t n = detail::require_count(j, "n");
  const Json& gens = detail::require(j, "gens");
  if (!gens.is_array()) throw ArgumentError("\"gens\" must be an array");
  std::vector<Monomial> monomials;
  for (const auto& g : gens) monomials.push_back(parse_monomial(g, n));
  return minimalize(std::move(monomials), n);
}

inline std::vector<std::vector<int>> parse_edge_lists(const Json& j) {
  const Json& edges = detail::require(j, "edges");
  if (!edges.is_array()) throw ArgumentError("\"edges\" must be an array");
  std::vector<std::vector<int>> out;
  for (const auto& e : edges) out.push_back(detail::int_list(e));
  return out;
}

inline Json to_json(const Clutter& h) {
  return Json{{"n", h.num_vertices()}, {"edges", h.edge_labels()}};
}

inline Clutter parse_clutter(const Json& j) {
  const std::size_t n = detail::require_count(j, "n");
  return Clutter::from_labels(n, parse_edge_lists(j));
}

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return Json{{"n", g.num_vertices()}, {"edges", edges}};
}

inline Graph parse_graph(const Json& j) {
  const std::size_t n = detail::require_count(j, "n");
  std::vector<Graph::Edge> edges;
  for (const auto& e : parse_edge_lists(j)) {
    if (e.size() != 2) throw ArgumentError("graph edges must have exactly two vertices");
    edges.emplace_back(e[0], e[1]);
  }
  return Graph(n, std::move(edges));
}

inline Json to_json(const IncidenceMatrix& m) {
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", m.dense()}};
}

inline IncidenceMatrix parse_matrix(const Json& j) {
  const std::size_t rows = detail::require_count(j, "rows");
  const std::size_t cols = detail::require_count(j, "cols");
  const Json& data = detail::require(j, "data");
  if (!data.is_array() || data.size() != rows) throw DimensionError("\"data\" must have \"rows\" rows");
  std::vector<std::vector<int>> dense;
  for (const auto& row : data) dense.push_back(detail::int_list(row));
  return IncidenceMatrix::from_dense(cols, dense);
}

/// Dense text: one row per line, characters '0'/'1' (spaces ignored).
/// Blank lines are skipped; an input with no rows needs `cols` from the caller.
inline IncidenceMatrix parse_dense_matrix(std::istream& in, std::optional<std::size_t> cols = std::nullopt) {
  std::vector<std::vector<int>> dense;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<int> row;
    for (char c : line) {
      if (c == '0' || c == '1') {
        row.push_back(c - '0');
      } else if (c != ' ' && c != '\t' && c != '\r') {
        throw ArgumentError(std::string("unexpected character '") + c + "' in dense matrix");
      }
    }
    if (!row.empty()) dense.push_back(std::move(row));
  }
  std::size_t width = cols.value_or(dense.empty() ? 0 : dense.front().size());
  return IncidenceMatrix::from_dense(width, dense);
}

inline Json to_json(const PrimeSupport& p) { return Json(p.variables()); }

inline Json to_json(const std::vector<PrimeSupport>& primes) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(to_json(p));
  return out;
}

inline Json to_json(const SimisReport& r) {
  Json out{{"k", r.k}, {"equal", r.equal}};
  if (r.witness) {
    out["witness"] = to_json(*r.witness);
    out["witness_text"] = to_string(*r.witness);
  }
  return out;
}

inline Json to_json(const PackingReport& r) {
  Json out{{"packs", r.packs}};
  if (r.failing_minor) {
    const auto& f = *r.failing_minor;
    out["failing_minor"] = Json{{"deleted", detail::labels_json(f.deleted)},
                                {"contracted", detail::labels_json(f.contracted)},
                                {"cover_number", f.cover_number},
                                {"matching_number", f.matching_number}};
  }
  return out;
}

inline Json to_json(const GraphClass& c) {
  return Json{{"label", to_string(c.label)}, {"isolated_count", c.isolated_count}};
}

inline Json to_json(const LpReport& r) {
  return Json{{"phi", r.phi}, {"psi", r.psi}, {"gap", r.gap()}, {"x", r.x_opt}, {"y", r.y_opt}};
}

inline Json to_json(const TheoremRow& row, const std::vector<unsigned>& k_list) {
  Json simis = Json::object();
  for (std::size_t i = 0; i < k_list.size(); ++i) simis[std::to_string(k_list[i])] = static_cast<bool>(row.simis[i]);
  Json out{{"graph", to_json(row.graph)},
           {"class", to_json(row.graph_class)},
           {"simis", simis},
           {"packs", row.packs},
           {"structural_mfmc", row.structural_mfmc}};
  if (row.gap) {
    out["gap_alpha"] = row.gap->alpha;
    out["gap_report"] = to_json(row.gap->report);
  } else {
    out["gap_alpha"] = nullptr;
  }
  out["all_agree"] = row.all_agree;
  return out;
}

inline Json to_json(const TheoremReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row, r.options.k_list));
  return Json{{"n", r.options.n},
              {"k_list", r.options.k_list},
              {"box", r.options.box},
              {"notes",
               {"simis is checked at each k in k_list; for these clutters equality at k = 2 already decides every k",
                "structural_mfmc is the exact MFMC test; gap_alpha samples alpha in {0..box}^n only"}},
              {"classes", r.rows.size()},
              {"satisfying", r.satisfying},
              {"failing", r.failing},
              {"consistent", r.consistent},
              {"rows", rows}};
}

inline std::string graph_text(const Graph& g) {
  std::ostringstream s;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) s << ' ';
    s << g.edges()[i].first << '-' << g.edges()[i].second;
  }
  return s.str();
}

/// One header line plus one line per class.
inline std::string to_csv(const TheoremReport& r) {
  std::ostringstream s;
  s << "edges,label,isolated";
  for (unsigned k : r.options.k_list) s << ",simis_k" << k;
  s << ",packs,structural_mfmc,gap_in_box,all_agree\n";
  for (const auto& row : r.rows) {
    s << graph_text(row.graph) << ',' << to_string(row.graph_class.label) << ',' << row.graph_class.isolated_count;
    for (bool b : row.simis) s << ',' << (b ? 1 : 0);
    s << ',' << row.packs << ',' << row.structural_mfmc << ',' << row.gap.has_value() << ',' << row.all_agree
      << '\n';
  }
  return s.str();
}

}  // namespace simis::io
