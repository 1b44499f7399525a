#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p3cay/errors.hpp"

namespace p3cay {

/// Simple undirected graph. Adjacency lists are sorted, symmetric, loop-free.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  /// Empty, or one label per vertex.
  std::vector<std::string> labels;

  /// Deduplicates, rejects loops and out-of-range endpoints (OutOfRange).
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int edge_count() const;
  /// All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edge_list() const;
  /// Degree shared by all vertices, or nullopt.
  std::optional<int> regular_valency() const;
};

/// BFS distances from root; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, int root);

/// Vertices grouped by distance from root: element d lists the sphere at
/// distance d, sorted. Unreachable vertices are not represented.
std::vector<std::vector<int>> distance_partition(const Graph& g, int root);

bool is_connected(const Graph& g);

/// Max distance over all pairs; nullopt when disconnected or n == 0.
std::optional<int> diameter(const Graph& g);

/// Two-coloring respecting all edges, as the side-0 vertex set; nullopt when
/// not bipartite. Deterministic: BFS from the smallest vertex of each component.
std::optional<std::vector<int>> bipartite_side(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// All maximal cliques, each sorted, the list sorted. Bron-Kerbosch with pivoting.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

struct CliqueGraphResult {
  Graph graph;                           // vertex c = cliques[c]
  std::vector<std::vector<int>> cliques; // as returned by maximal_cliques
};

/// Vertices are the maximal cliques, adjacent when they share at least one vertex.
CliqueGraphResult clique_graph(const Graph& g);

struct LineGraphResult {
  Graph graph;                            // vertex e = edges[e]
  std::vector<std::pair<int, int>> edges; // sorted (u, v), u < v
};

/// Vertices are the edges, adjacent when they share an endpoint.
LineGraphResult line_graph(const Graph& g);

struct QuotientResult {
  Graph graph;              // vertex B = blocks[B]
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;
  /// Edges of g joining two vertices of the same block.
  std::vector<std::pair<int, int>> intra_block_edges;
};

/// Quotient by a partition of the vertex set; blocks are adjacent when some
/// edge joins them. Throws BadPartition unless blocks exactly partition.
QuotientResult quotient_graph(const Graph& g, const std::vector<std::vector<int>>& blocks);

struct CoverCheck {
  bool ok = false;
  /// When !ok, one witness: either an intra-block edge, or a (vertex, block)
  /// pair with neighbor count != 1 in an adjacent block.
  std::string reason;
  std::vector<int> witness;
};

/// Whether g covers its quotient in the strong sense: blocks are independent
/// sets and every vertex has exactly one neighbor in each adjacent block.
CoverCheck is_normal_cover(const Graph& g, const QuotientResult& q);

/// All s-arcs: walks (v_0..v_s) with consecutive vertices adjacent and
/// v_{i+1} != v_{i-1}. s = 0 gives the vertices. Flattened, stride s+1,
/// lexicographic order. Throws OutOfRange for s < 0.
std::vector<int> s_arcs(const Graph& g, int s);
std::uint64_t count_s_arcs(const Graph& g, int s);

/// JSON document {"n", "edges", "labels"?}; byte-deterministic.
std::string to_json(const Graph& g);
/// Graphviz source; byte-deterministic.
std::string to_dot(const Graph& g, const std::string& name = "g");

}  // namespace p3cay
