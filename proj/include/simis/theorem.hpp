#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "simis/clutter.hpp"
#include "simis/errors.hpp"
#include "simis/graph.hpp"
#include "simis/lp_duality.hpp"
#include "simis/monomial.hpp"

namespace simis {

struct TheoremOptions {
  std::size_t n = 4;
  std::vector<unsigned> k_list{2, 3};
  Weight box = 2;  // 0 disables the duality-gap scan
  std::size_t max_packing_vertices = kDefaultPackingMaxVertices;
};

/// One isomorphism class of graphs G, checked through the (n-2)-uniform
/// clutter H whose edges are the complements of G's edges.
struct TheoremRow {
  Graph graph;
  GraphClass graph_class;
  std::vector<bool> simis;      // I(H)^(k) == I(H)^k, per entry of k_list
  bool packs = false;           // packing property of H
  bool structural_mfmc = false;  // exact MFMC test on the incidence matrix
  std::optional<GapWitness> gap;  // first duality gap inside the box
  bool all_agree = false;

  bool expected() const { return graph_class.label != GraphLabel::Other; }
};

struct TheoremReport {
  TheoremOptions options;
  std::vector<TheoremRow> rows;
  std::size_t satisfying = 0;
  std::size_t failing = 0;
  bool consistent = true;
};

/// Every condition must match the graph classification. A gap inside the
/// box is required for failing classes and forbidden for satisfying ones.
inline TheoremRow check_graph(const Graph& g, const TheoremOptions& options) {
  TheoremRow row;
  row.graph = g;
  row.graph_class = classify_graph(g);
  const Clutter h = clutter_of_graph(g);
  const MonomialIdeal ideal = edge_ideal(h);
  for (unsigned k : options.k_list) row.simis.push_back(is_simis(ideal, k).equal);
  row.packs = has_packing(h, options.max_packing_vertices).packs;
  const IncidenceMatrix m = incidence_matrix(h);
  row.structural_mfmc = structural_mfmc_check(m);
  if (options.box > 0) row.gap = duality_gap_search(m, options.box);

  const bool want = row.expected();
  row.all_agree = row.packs == want && row.structural_mfmc == want &&
                  std::all_of(row.simis.begin(), row.simis.end(), [want](bool s) { return s == want; });
  if (options.box > 0) row.all_agree = row.all_agree && (row.gap.has_value() != want);
  return row;
}

inline constexpr std::size_t kMinTheoremVertices = 3;
inline constexpr std::size_t kMaxTheoremVertices = 6;

/// Exhaustive check over all graph classes with at least one edge on n
/// vertices. Agreement at k = 2 and 3 stands in for "all k"; MFMC is read
/// off the structural test and sampled by the box scan.
inline TheoremReport verify_theorem(const TheoremOptions& options) {
  if (options.n < kMinTheoremVertices || options.n > kMaxTheoremVertices) {
    throw ArgumentError("verify_theorem: n must be in 3..6");
  }
  if (options.k_list.empty()) throw ArgumentError("verify_theorem: k_list is empty");
  TheoremReport report;
  report.options = options;
  for (const Graph& g : enumerate_graphs_upto_iso(options.n, true)) {
    TheoremRow row = check_graph(g, options);
    (row.expected() ? report.satisfying : report.failing) += 1;
    report.consistent = report.consistent && row.all_agree;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace simis
