#include "p3cay/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <string>
#include <unordered_map>
#include <utility>

namespace p3cay::kernels {

namespace {

std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};

void bfs_row(const Graph& g, int src, int* row) {
  for (int v = 0; v < g.n; ++v) row[v] = -1;
  row[src] = 0;
  std::vector<int> frontier{src};
  std::vector<int> next;
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (int u : frontier) {
      for (int w : g.adj[u]) {
        if (row[w] < 0) {
          row[w] = d;
          next.push_back(w);
        }
      }
    }
    std::swap(frontier, next);
  }
}

constexpr int kMaxArity = 4;
constexpr int kCoordBits = 16;

std::uint64_t encode_tuple(const int* t, int arity) {
  std::uint64_t key = 0;
  for (int c = 0; c < arity; ++c) {
    key |= static_cast<std::uint64_t>(static_cast<std::uint32_t>(t[c])) << (kCoordBits * c);
  }
  return key;
}

void check_tuple_args(std::span<const int> flat, int arity, const std::vector<Permutation>& gens) {
  if (arity < 1 || arity > kMaxArity) throw OutOfRange("tuple arity must be in 1..4");
  if (flat.size() % arity != 0) throw OutOfRange("flat tuple array length not a multiple of arity");
  for (const Permutation& g : gens) {
    if (g.degree() >= (1 << kCoordBits)) throw OutOfRange("degree too large for tuple encoding");
  }
}

struct TupleIndex {
  std::unordered_map<std::uint64_t, int> of_key;

  TupleIndex(std::span<const int> flat, int arity) {
    const int count = static_cast<int>(flat.size()) / arity;
    of_key.reserve(count * 2);
    for (int i = 0; i < count; ++i) {
      if (!of_key.emplace(encode_tuple(flat.data() + static_cast<std::size_t>(i) * arity, arity), i)
               .second) {
        throw OutOfRange("duplicate tuple in orbit input");
      }
    }
  }

  int find(const int* t, int arity) const {
    auto it = of_key.find(encode_tuple(t, arity));
    return it == of_key.end() ? -1 : it->second;
  }
};

// succ[i * |gens| + m] = item index of the image of item i under generator m.
// A missing image is reported through `fail`, the smallest flat position
// (item * |gens| + m) that escaped the set, or -1.
void fill_successors_serial(std::span<const int> flat, int arity,
                            const std::vector<Permutation>& gens, const TupleIndex& index,
                            std::vector<int>& succ, long long& fail) {
  const int count = static_cast<int>(flat.size()) / arity;
  const int ng = static_cast<int>(gens.size());
  long long first_fail = LLONG_MAX;
  for (int i = 0; i < count; ++i) {
    int img[kMaxArity];
    for (int m = 0; m < ng; ++m) {
      const int* t = flat.data() + static_cast<std::size_t>(i) * arity;
      for (int c = 0; c < arity; ++c) img[c] = gens[m](t[c]);
      int s = index.find(img, arity);
      succ[static_cast<std::size_t>(i) * ng + m] = s;
      if (s < 0) first_fail = std::min(first_fail, static_cast<long long>(i) * ng + m);
    }
  }
  fail = first_fail == LLONG_MAX ? -1 : first_fail;
}

void fill_successors_par(std::span<const int> flat, int arity, const std::vector<Permutation>& gens,
                         const TupleIndex& index, std::vector<int>& succ, long long& fail) {
  const int count = static_cast<int>(flat.size()) / arity;
  const int ng = static_cast<int>(gens.size());
  long long first_fail = LLONG_MAX;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : first_fail)
#endif
  for (int i = 0; i < count; ++i) {
    int img[kMaxArity];
    for (int m = 0; m < ng; ++m) {
      const int* t = flat.data() + static_cast<std::size_t>(i) * arity;
      for (int c = 0; c < arity; ++c) img[c] = gens[m](t[c]);
      int s = index.find(img, arity);
      succ[static_cast<std::size_t>(i) * ng + m] = s;
      if (s < 0) first_fail = std::min(first_fail, static_cast<long long>(i) * ng + m);
    }
  }
  fail = first_fail == LLONG_MAX ? -1 : first_fail;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

TupleOrbits orbits_from_successors(int count, int ng, const std::vector<int>& succ,
                                   long long fail) {
  if (fail >= 0) {
    throw NotInvariant("tuple set not closed under generator action (item " +
                       std::to_string(fail / ng) + ", generator " + std::to_string(fail % ng) +
                       ")");
  }
  UnionFind uf(count);
  for (int i = 0; i < count; ++i) {
    for (int m = 0; m < ng; ++m) uf.unite(i, succ[static_cast<std::size_t>(i) * ng + m]);
  }
  TupleOrbits result;
  result.orbit_of.assign(count, -1);
  std::vector<int> orbit_id(count, -1);
  for (int i = 0; i < count; ++i) {
    int root = uf.find(i);
    if (orbit_id[root] < 0) {
      orbit_id[root] = static_cast<int>(result.orbits.size());
      result.orbits.emplace_back();
    }
    result.orbit_of[i] = orbit_id[root];
    result.orbits[orbit_id[root]].push_back(i);
  }
  return result;
}

std::uint64_t hash_images(const std::vector<int>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
    h *= 1099511628211ull;
  }
  return h;
}

void compose_raw(const std::vector<int>& f, const std::vector<int>& g, std::vector<int>& out) {
  const std::size_t n = f.size();
  out.resize(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = g[f[x]];
}

// Breadth-first closure; each round composes the whole frontier with every
// generator (the part worth parallelizing), then deduplicates serially in
// buffer order so both versions emit elements in the same order.
std::vector<Permutation> closure_impl(const std::vector<Permutation>& gens, std::size_t bound,
                                      bool parallel) {
  if (gens.empty()) throw OutOfRange("group closure needs at least one generator");
  const int degree = gens[0].degree();
  for (const Permutation& g : gens) {
    if (g.degree() != degree) throw OutOfRange("generators have mixed degrees");
  }
  const int ng = static_cast<int>(gens.size());

  std::vector<Permutation> elements;
  elements.push_back(Permutation::identity(degree));
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  auto known = [&](const std::vector<int>& raw) {
    auto it = buckets.find(hash_images(raw));
    if (it == buckets.end()) return false;
    for (int idx : it->second) {
      if (elements[idx].images() == raw) return true;
    }
    return false;
  };
  buckets[hash_images(elements[0].images())].push_back(0);

  std::vector<int> frontier{0};
  std::vector<std::vector<int>> buffer;
  while (!frontier.empty()) {
    const std::size_t rounds = frontier.size() * ng;
    buffer.assign(rounds, {});
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (long long q = 0; q < static_cast<long long>(rounds); ++q) {
        compose_raw(elements[frontier[q / ng]].images(), gens[q % ng].images(), buffer[q]);
      }
    } else {
      for (std::size_t q = 0; q < rounds; ++q) {
        compose_raw(elements[frontier[q / ng]].images(), gens[q % ng].images(), buffer[q]);
      }
    }
    std::vector<int> next;
    for (std::vector<int>& raw : buffer) {
      if (known(raw)) continue;
      if (elements.size() >= bound) {
        throw BoundExceeded("group closure exceeded bound " + std::to_string(bound));
      }
      int idx = static_cast<int>(elements.size());
      buckets[hash_images(raw)].push_back(idx);
      elements.push_back(Permutation(std::move(raw)));
      next.push_back(idx);
    }
    frontier = std::move(next);
  }
  return elements;
}

}  // namespace

bool parallel_enabled() { return g_parallel.load(); }
void set_parallel(bool on) { g_parallel.store(on); }

namespace serial {

std::vector<int> distance_matrix(const Graph& g) {
  std::vector<int> m(static_cast<std::size_t>(g.n) * g.n, -1);
  for (int v = 0; v < g.n; ++v) bfs_row(g, v, m.data() + static_cast<std::size_t>(v) * g.n);
  return m;
}

TupleOrbits tuple_orbits(std::span<const int> flat, int arity,
                         const std::vector<Permutation>& gens) {
  check_tuple_args(flat, arity, gens);
  const int count = static_cast<int>(flat.size()) / arity;
  TupleIndex index(flat, arity);
  std::vector<int> succ(static_cast<std::size_t>(count) * gens.size());
  long long fail = -1;
  fill_successors_serial(flat, arity, gens, index, succ, fail);
  return orbits_from_successors(count, static_cast<int>(gens.size()), succ, fail);
}

int first_broken_edge(const Graph& g, const Permutation& perm) {
  if (perm.degree() != g.n) throw OutOfRange("permutation degree does not match graph order");
  const auto edges = g.edge_list();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!g.has_edge(perm(edges[e].first), perm(edges[e].second))) return static_cast<int>(e);
  }
  return -1;
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, std::size_t bound) {
  return closure_impl(gens, bound, false);
}

}  // namespace serial

namespace par {

std::vector<int> distance_matrix(const Graph& g) {
  std::vector<int> m(static_cast<std::size_t>(g.n) * g.n, -1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int v = 0; v < g.n; ++v) bfs_row(g, v, m.data() + static_cast<std::size_t>(v) * g.n);
  return m;
}

TupleOrbits tuple_orbits(std::span<const int> flat, int arity,
                         const std::vector<Permutation>& gens) {
  check_tuple_args(flat, arity, gens);
  const int count = static_cast<int>(flat.size()) / arity;
  TupleIndex index(flat, arity);
  std::vector<int> succ(static_cast<std::size_t>(count) * gens.size());
  long long fail = -1;
  fill_successors_par(flat, arity, gens, index, succ, fail);
  return orbits_from_successors(count, static_cast<int>(gens.size()), succ, fail);
}

int first_broken_edge(const Graph& g, const Permutation& perm) {
  if (perm.degree() != g.n) throw OutOfRange("permutation degree does not match graph order");
  const auto edges = g.edge_list();
  const long long ne = static_cast<long long>(edges.size());
  long long broken = LLONG_MAX;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : broken)
#endif
  for (long long e = 0; e < ne; ++e) {
    if (!g.has_edge(perm(edges[e].first), perm(edges[e].second))) {
      broken = std::min(broken, e);
    }
  }
  return broken == LLONG_MAX ? -1 : static_cast<int>(broken);
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, std::size_t bound) {
  return closure_impl(gens, bound, true);
}

}  // namespace par

std::vector<int> distance_matrix(const Graph& g) {
  return parallel_enabled() ? par::distance_matrix(g) : serial::distance_matrix(g);
}

TupleOrbits tuple_orbits(std::span<const int> flat, int arity,
                         const std::vector<Permutation>& gens) {
  return parallel_enabled() ? par::tuple_orbits(flat, arity, gens)
                            : serial::tuple_orbits(flat, arity, gens);
}

int first_broken_edge(const Graph& g, const Permutation& perm) {
  return parallel_enabled() ? par::first_broken_edge(g, perm)
                            : serial::first_broken_edge(g, perm);
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, std::size_t bound) {
  return parallel_enabled() ? par::generate_group(gens, bound)
                            : serial::generate_group(gens, bound);
}

}  // namespace p3cay::kernels
