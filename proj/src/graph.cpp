#include "p3cay/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include <json.hpp>

#include "p3cay/kernels.hpp"

namespace p3cay {

using ordered_json = nlohmann::ordered_json;

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw OutOfRange("graph order cannot be negative");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw OutOfRange("edge endpoint out of range");
    if (u == v) throw OutOfRange("loops are not supported");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n || v < 0 || v >= n) return false;
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adj) twice += nbrs.size();
  return static_cast<int>(twice / 2);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_count());
  for (int u = 0; u < n; ++u) {
    for (int v : adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::optional<int> Graph::regular_valency() const {
  if (n == 0) return std::nullopt;
  int d = degree(0);
  for (int v = 1; v < n; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<int> distances_from(const Graph& g, int root) {
  if (root < 0 || root >= g.n) throw OutOfRange("BFS root out of range");
  std::vector<int> dist(g.n, -1);
  dist[root] = 0;
  std::vector<int> frontier{root};
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    std::vector<int> next;
    for (int u : frontier) {
      for (int w : g.adj[u]) {
        if (dist[w] < 0) {
          dist[w] = d;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

std::vector<std::vector<int>> distance_partition(const Graph& g, int root) {
  std::vector<int> dist = distances_from(g, root);
  int ecc = 0;
  for (int d : dist) ecc = std::max(ecc, d);
  std::vector<std::vector<int>> spheres(ecc + 1);
  for (int v = 0; v < g.n; ++v) {
    if (dist[v] >= 0) spheres[dist[v]].push_back(v);
  }
  return spheres;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  std::vector<int> dist = distances_from(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::optional<int> diameter(const Graph& g) {
  if (g.n == 0) return std::nullopt;
  std::vector<int> m = kernels::distance_matrix(g);
  int diam = 0;
  for (int d : m) {
    if (d < 0) return std::nullopt;
    diam = std::max(diam, d);
  }
  return diam;
}

std::optional<std::vector<int>> bipartite_side(const Graph& g) {
  std::vector<int> color(g.n, -1);
  for (int root = 0; root < g.n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<int> frontier{root};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int u : frontier) {
        for (int w : g.adj[u]) {
          if (color[w] < 0) {
            color[w] = 1 - color[u];
            next.push_back(w);
          } else if (color[w] == color[u]) {
            return std::nullopt;
          }
        }
      }
      frontier = std::move(next);
    }
  }
  std::vector<int> side;
  for (int v = 0; v < g.n; ++v) {
    if (color[v] == 0) side.push_back(v);
  }
  return side;
}

// From a root on a shortest cycle, the first non-tree edge the BFS meets
// closes that cycle exactly, and every candidate closes some closed walk,
// never shorter than the girth. The minimum over all roots is therefore exact.
std::optional<int> girth(const Graph& g) {
  int best = -1;
  std::vector<int> dist(g.n);
  std::vector<int> parent(g.n);
  for (int root = 0; root < g.n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[root] = 0;
    std::vector<int> frontier{root};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int u : frontier) {
        for (int w : g.adj[u]) {
          if (w == parent[u]) continue;
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            parent[w] = u;
            next.push_back(w);
          } else {
            int candidate = dist[u] + dist[w] + 1;
            if (best < 0 || candidate < best) best = candidate;
          }
        }
      }
      frontier = std::move(next);
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot: the candidate with the most neighbors inside p, first such on ties.
  int pivot = -1;
  std::size_t best = 0;
  for (const std::vector<int>* side : {&p, &x}) {
    for (int u : *side) {
      std::size_t cnt = intersect_sorted(p, g.adj[u]).size();
      if (pivot < 0 || cnt > best) {
        pivot = u;
        best = cnt;
      }
    }
  }
  std::vector<int> candidates;
  std::set_difference(p.begin(), p.end(), g.adj[pivot].begin(), g.adj[pivot].end(),
                      std::back_inserter(candidates));
  for (int v : candidates) {
    r.push_back(v);
    bron_kerbosch(g, r, intersect_sorted(p, g.adj[v]), intersect_sorted(x, g.adj[v]), out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    auto pos = std::lower_bound(x.begin(), x.end(), v);
    x.insert(pos, v);
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  if (g.n == 0) return {};
  std::vector<int> all(g.n);
  for (int v = 0; v < g.n; ++v) all[v] = v;
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  bron_kerbosch(g, r, std::move(all), {}, out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

CliqueGraphResult clique_graph(const Graph& g) {
  CliqueGraphResult res;
  res.cliques = maximal_cliques(g);
  std::vector<std::vector<int>> through(g.n);
  for (std::size_t c = 0; c < res.cliques.size(); ++c) {
    for (int v : res.cliques[c]) through[v].push_back(static_cast<int>(c));
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.n; ++v) {
    for (std::size_t i = 0; i < through[v].size(); ++i) {
      for (std::size_t j = i + 1; j < through[v].size(); ++j) {
        edges.emplace_back(through[v][i], through[v][j]);
      }
    }
  }
  res.graph = Graph::from_edges(static_cast<int>(res.cliques.size()), edges);
  return res;
}

LineGraphResult line_graph(const Graph& g) {
  LineGraphResult res;
  res.edges = g.edge_list();
  std::vector<std::vector<int>> incident(g.n);
  for (std::size_t e = 0; e < res.edges.size(); ++e) {
    incident[res.edges[e].first].push_back(static_cast<int>(e));
    incident[res.edges[e].second].push_back(static_cast<int>(e));
  }
  std::vector<std::pair<int, int>> ledges;
  for (int v = 0; v < g.n; ++v) {
    for (std::size_t i = 0; i < incident[v].size(); ++i) {
      for (std::size_t j = i + 1; j < incident[v].size(); ++j) {
        ledges.emplace_back(incident[v][i], incident[v][j]);
      }
    }
  }
  res.graph = Graph::from_edges(static_cast<int>(res.edges.size()), ledges);
  if (!g.labels.empty()) {
    res.graph.labels.reserve(res.edges.size());
    for (const auto& [u, v] : res.edges) {
      res.graph.labels.push_back(g.labels[u] + "--" + g.labels[v]);
    }
  }
  return res;
}

QuotientResult quotient_graph(const Graph& g, const std::vector<std::vector<int>>& blocks) {
  QuotientResult res;
  res.blocks = blocks;
  res.block_of.assign(g.n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw BadPartition("empty block");
    for (int v : blocks[b]) {
      if (v < 0 || v >= g.n) throw BadPartition("block member out of range");
      if (res.block_of[v] >= 0) {
        throw BadPartition("vertex " + std::to_string(v) + " lies in two blocks");
      }
      res.block_of[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < g.n; ++v) {
    if (res.block_of[v] < 0) {
      throw BadPartition("vertex " + std::to_string(v) + " lies in no block");
    }
  }
  std::set<std::pair<int, int>> qedges;
  for (const auto& [u, v] : g.edge_list()) {
    int bu = res.block_of[u];
    int bv = res.block_of[v];
    if (bu == bv) {
      res.intra_block_edges.emplace_back(u, v);
    } else {
      qedges.insert({std::min(bu, bv), std::max(bu, bv)});
    }
  }
  res.graph = Graph::from_edges(static_cast<int>(blocks.size()),
                                {qedges.begin(), qedges.end()});
  if (!g.labels.empty()) {
    for (const auto& block : res.blocks) {
      res.graph.labels.push_back(g.labels[*std::min_element(block.begin(), block.end())]);
    }
  }
  return res;
}

CoverCheck is_normal_cover(const Graph& g, const QuotientResult& q) {
  CoverCheck check;
  if (!q.intra_block_edges.empty()) {
    auto [u, v] = q.intra_block_edges.front();
    check.reason = "a block contains an edge";
    check.witness = {u, v};
    return check;
  }
  for (int u = 0; u < g.n; ++u) {
    for (int b : q.graph.adj[q.block_of[u]]) {
      int count = 0;
      for (int w : g.adj[u]) {
        if (q.block_of[w] == b) ++count;
      }
      if (count != 1) {
        check.reason = "vertex has " + std::to_string(count) + " neighbors in an adjacent block";
        check.witness = {u, b, count};
        return check;
      }
    }
  }
  check.ok = true;
  return check;
}

std::vector<int> s_arcs(const Graph& g, int s) {
  if (s < 0) throw OutOfRange("arc length cannot be negative");
  std::vector<int> arcs;
  if (s == 0) {
    arcs.resize(g.n);
    for (int v = 0; v < g.n; ++v) arcs[v] = v;
    return arcs;
  }
  // Grow length by one per pass; extending in vertex order keeps the list
  // lexicographically sorted.
  for (int u = 0; u < g.n; ++u) {
    for (int v : g.adj[u]) {
      arcs.push_back(u);
      arcs.push_back(v);
    }
  }
  int len = 1;
  while (len < s) {
    const int stride = len + 1;
    std::vector<int> longer;
    for (std::size_t a = 0; a + stride <= arcs.size(); a += stride) {
      const int* walk = arcs.data() + a;
      int last = walk[len];
      int prev = walk[len - 1];
      for (int w : g.adj[last]) {
        if (w == prev) continue;
        longer.insert(longer.end(), walk, walk + stride);
        longer.push_back(w);
      }
    }
    arcs = std::move(longer);
    ++len;
  }
  return arcs;
}

std::uint64_t count_s_arcs(const Graph& g, int s) {
  if (s < 0) throw OutOfRange("arc length cannot be negative");
  if (s == 0) return static_cast<std::uint64_t>(g.n);
  // f[directed edge (u,v)] = number of s-arcs ending in u, v.
  std::vector<std::pair<int, int>> darts;
  for (int u = 0; u < g.n; ++u) {
    for (int v : g.adj[u]) darts.emplace_back(u, v);
  }
  std::vector<std::uint64_t> f(darts.size(), 1);
  for (int len = 1; len < s; ++len) {
    std::vector<std::uint64_t> nf(darts.size(), 0);
    std::vector<std::vector<std::pair<int, std::uint64_t>>> by_head(g.n);
    for (std::size_t d = 0; d < darts.size(); ++d) {
      by_head[darts[d].second].push_back({darts[d].first, f[d]});
    }
    for (std::size_t d = 0; d < darts.size(); ++d) {
      auto [v, w] = darts[d];
      std::uint64_t total = 0;
      for (const auto& [u, cnt] : by_head[v]) {
        if (u != w) total += cnt;
      }
      nf[d] = total;
    }
    f = std::move(nf);
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : f) total += c;
  return total;
}

std::string to_json(const Graph& g) {
  ordered_json doc;
  doc["n"] = g.n;
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edge_list()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (!g.labels.empty()) doc["labels"] = g.labels;
  return doc.dump(1) + "\n";
}

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}
}  // namespace

std::string to_dot(const Graph& g, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (int v = 0; v < g.n; ++v) {
    out += "  " + std::to_string(v);
    if (!g.labels.empty()) out += " [label=\"" + dot_escape(g.labels[v]) + "\"]";
    out += ";\n";
  }
  for (const auto& [u, v] : g.edge_list()) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace p3cay
