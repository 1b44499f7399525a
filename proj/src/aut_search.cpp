#include "p3cay/aut_search.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "p3cay/kernels.hpp"

namespace p3cay {

ColoredPartition ColoredPartition::unit(int n) {
  ColoredPartition part;
  if (n > 0) {
    part.cells.emplace_back(n);
    for (int v = 0; v < n; ++v) part.cells[0][v] = v;
  }
  return part;
}

bool ColoredPartition::discrete() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const std::vector<int>& c) { return c.size() == 1; });
}

void ColoredPartition::validate(int n) const {
  std::vector<char> seen(n, 0);
  for (const auto& cell : cells) {
    if (cell.empty()) throw BadPartition("empty cell");
    for (int v : cell) {
      if (v < 0 || v >= n) throw BadPartition("cell member out of range");
      if (seen[v]) throw BadPartition("vertex " + std::to_string(v) + " lies in two cells");
      seen[v] = 1;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[v]) throw BadPartition("vertex " + std::to_string(v) + " lies in no cell");
  }
}

namespace {

struct Refined {
  std::vector<std::vector<int>> cells;
  std::uint64_t trace = 14695981039346656037ull;
};

void mix(std::uint64_t& h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}

// Splits cells by neighbor counts against every cell until equitable.
// Fragments are ordered by ascending count, so the split sequence, recorded
// into the trace, depends only on the isomorphism type of (graph, partition).
void refine_in_place(const Graph& g, Refined& part) {
  const int n = g.n;
  std::vector<int> counts(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t sp = 0; sp < part.cells.size() && !changed; ++sp) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int u : part.cells[sp]) {
        for (int w : g.adj[u]) ++counts[w];
      }
      for (std::size_t ci = 0; ci < part.cells.size(); ++ci) {
        const std::vector<int>& cell = part.cells[ci];
        if (cell.size() <= 1) continue;
        const int c0 = counts[cell[0]];
        if (std::all_of(cell.begin(), cell.end(), [&](int v) { return counts[v] == c0; })) {
          continue;
        }
        std::map<int, std::vector<int>> fragments;
        for (int v : cell) fragments[counts[v]].push_back(v);
        mix(part.trace, sp);
        mix(part.trace, ci);
        mix(part.trace, fragments.size());
        std::vector<std::vector<int>> pieces;
        pieces.reserve(fragments.size());
        for (auto& [value, piece] : fragments) {
          mix(part.trace, static_cast<std::uint64_t>(value));
          mix(part.trace, piece.size());
          pieces.push_back(std::move(piece));
        }
        part.cells[ci] = std::move(pieces[0]);
        part.cells.insert(part.cells.begin() + static_cast<long>(ci) + 1,
                          std::make_move_iterator(pieces.begin() + 1),
                          std::make_move_iterator(pieces.end()));
        changed = true;
        break;
      }
    }
  }
}

bool same_shape(const Refined& a, const Refined& b) {
  if (a.trace != b.trace || a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    if (a.cells[i].size() != b.cells[i].size()) return false;
  }
  return true;
}

// Index of the first smallest cell of size > 1; -1 when discrete.
int target_cell(const Refined& part) {
  int best = -1;
  std::size_t best_size = 0;
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    std::size_t sz = part.cells[i].size();
    if (sz > 1 && (best < 0 || sz < best_size)) {
      best = static_cast<int>(i);
      best_size = sz;
    }
  }
  return best;
}

struct Searcher {
  const Graph& g;
  std::vector<Permutation> gens;

  Refined individualized(const Refined& base, int cell, int v) {
    Refined next;
    next.trace = base.trace;
    next.cells.reserve(base.cells.size() + 1);
    for (std::size_t i = 0; i < base.cells.size(); ++i) {
      if (static_cast<int>(i) != cell) {
        next.cells.push_back(base.cells[i]);
        continue;
      }
      next.cells.push_back({v});
      std::vector<int> rest;
      rest.reserve(base.cells[i].size() - 1);
      for (int w : base.cells[i]) {
        if (w != v) rest.push_back(w);
      }
      next.cells.push_back(std::move(rest));
    }
    mix(next.trace, 0x1d1ull);
    refine_in_place(g, next);
    return next;
  }

  std::vector<int> orbit_of(int b) const {
    std::vector<char> seen(g.n, 0);
    seen[b] = 1;
    std::vector<int> frontier{b};
    std::vector<int> orb{b};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier) {
        for (const Permutation& q : gens) {
          int y = q(x);
          if (!seen[y]) {
            seen[y] = 1;
            orb.push_back(y);
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    return orb;
  }

  std::optional<Permutation> leaf_candidate(const Refined& d, const Refined& r) const {
    std::vector<int> img(g.n);
    for (std::size_t i = 0; i < d.cells.size(); ++i) img[d.cells[i][0]] = r.cells[i][0];
    Permutation cand(std::move(img));
    if (kernels::first_broken_edge(g, cand) >= 0) return std::nullopt;
    return cand;
  }

  std::optional<Permutation> find_one(const Refined& d, const Refined& r) {
    if (!same_shape(d, r)) return std::nullopt;
    const int c = target_cell(d);
    if (c < 0) return leaf_candidate(d, r);
    const int b = d.cells[c][0];
    Refined db = individualized(d, c, b);
    for (int v : r.cells[c]) {
      if (auto found = find_one(db, individualized(r, c, v))) return found;
    }
    return std::nullopt;
  }

  // Walks the chain that pins the first vertex of each target cell in turn.
  // Every generator appended below fixes all vertices pinned above this
  // level, so the orbit of b under the collected generators is exactly the
  // orbit under the stabilizer this level is counting.
  std::uint64_t stab_search(const Refined& d) {
    const int c = target_cell(d);
    if (c < 0) return 1;
    const int b = d.cells[c][0];
    Refined db = individualized(d, c, b);
    const std::uint64_t sub = stab_search(db);

    std::vector<int> orb = orbit_of(b);
    for (std::size_t idx = 1; idx < d.cells[c].size(); ++idx) {
      const int v = d.cells[c][idx];
      if (std::find(orb.begin(), orb.end(), v) != orb.end()) continue;
      if (auto found = find_one(db, individualized(d, c, v))) {
        gens.push_back(*found);
        orb = orbit_of(b);
      }
    }
    return static_cast<std::uint64_t>(orb.size()) * sub;
  }
};

}  // namespace

ColoredPartition refine(const Graph& g, const ColoredPartition& start) {
  start.validate(g.n);
  Refined part;
  part.cells = start.cells;
  refine_in_place(g, part);
  ColoredPartition out;
  out.cells = std::move(part.cells);
  return out;
}

PermGroup automorphism_group(const Graph& g, std::size_t vertex_bound) {
  if (static_cast<std::size_t>(g.n) > vertex_bound) {
    throw BoundExceeded("graph order " + std::to_string(g.n) +
                        " exceeds the automorphism search bound " + std::to_string(vertex_bound));
  }
  if (g.n == 0) return PermGroup::trivial(0);
  Refined root;
  root.cells = ColoredPartition::unit(g.n).cells;
  refine_in_place(g, root);
  Searcher searcher{g, {}};
  const std::uint64_t order = searcher.stab_search(root);
  if (searcher.gens.empty()) {
    internal_check(order == 1, "chain order is not 1 for a generator-free search");
    return PermGroup::trivial(g.n);
  }
  return PermGroup::from_generators_with_order(std::move(searcher.gens), order);
}

PermGroup vertex_stabilizer_in_aut(const Graph& g, int v, std::size_t vertex_bound) {
  if (v < 0 || v >= g.n) throw OutOfRange("stabilized vertex out of range");
  return stabilizer(automorphism_group(g, vertex_bound), v);
}

}  // namespace p3cay
