#include "p3cay/symmetry.hpp"

#include <algorithm>
#include <string>

#include "p3cay/kernels.hpp"

namespace p3cay {

using ordered_json = nlohmann::ordered_json;

namespace {

void require_automorphisms(const Graph& g, const PermGroup& group) {
  for (std::size_t i = 0; i < group.generators().size(); ++i) {
    int broken = kernels::first_broken_edge(g, group.generators()[i]);
    if (broken >= 0) {
      throw NotAutomorphismGroup("generator " + std::to_string(i) + " breaks edge " +
                                 std::to_string(broken));
    }
  }
}

ordered_json pair_json(const std::pair<int, int>& pr) { return ordered_json{pr.first, pr.second}; }

std::vector<std::pair<int, int>> pairs_at_distance(const std::vector<int>& dm, int n, int d) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (dm[static_cast<std::size_t>(u) * n + v] == d) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

ordered_json arc_json(const int* arc, int len) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < len; ++i) a.push_back(arc[i]);
  return a;
}

}  // namespace

std::vector<std::vector<int>> point_orbits(const PermGroup& group) {
  std::vector<char> seen(group.degree(), 0);
  std::vector<std::vector<int>> orbits;
  for (int v = 0; v < group.degree(); ++v) {
    if (seen[v]) continue;
    std::vector<int> orb = orbit(group, v);
    for (int x : orb) seen[x] = 1;
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

Permutation edge_action(const Graph& g, const Permutation& vertex_perm) {
  const auto edges = g.edge_list();
  auto index_of = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{u, v});
    if (it == edges.end() || *it != std::pair{u, v}) {
      throw NotGraphAutomorphism("edge image (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") is not an edge");
    }
    return static_cast<int>(it - edges.begin());
  };
  std::vector<int> img(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    img[e] = index_of(vertex_perm(edges[e].first), vertex_perm(edges[e].second));
  }
  return Permutation(std::move(img));
}

PermGroup edge_action_group(const Graph& g, const PermGroup& group) {
  std::vector<Permutation> gens;
  gens.reserve(group.generators().size());
  for (const Permutation& q : group.generators()) gens.push_back(edge_action(g, q));
  return PermGroup::generated_by(std::move(gens));
}

CheckResult check_t_distance_transitive(const Graph& g, const PermGroup& group, int t) {
  require_automorphisms(g, group);
  if (!is_connected(g)) throw OutOfRange("distance transitivity needs a connected graph");
  const std::vector<int> dm = kernels::distance_matrix(g);
  int diam = 0;
  for (int d : dm) diam = std::max(diam, d);
  if (t < 1 || t > diam) {
    throw OutOfRange("t = " + std::to_string(t) + " outside 1..diameter = " +
                     std::to_string(diam));
  }

  CheckResult res;
  res.name = "t_distance_transitive";
  res.expected = ordered_json{{"vertex_orbits", 1}, {"orbits_per_distance", 1}};
  ordered_json counts = ordered_json::object();
  const std::size_t vertex_orbits = point_orbits(group).size();
  bool pass = vertex_orbits == 1;
  res.actual["vertex_orbits"] = vertex_orbits;
  for (int d = 1; d <= t; ++d) {
    auto orbits = orbits_on_ordered_pairs(group, pairs_at_distance(dm, g.n, d));
    counts["distance_" + std::to_string(d)] = orbits.size();
    if (orbits.size() != 1) {
      pass = false;
      if (res.witness.is_null()) {
        res.witness = ordered_json{{"distance", d},
                                   {"pair_one", pair_json(orbits[0][0])},
                                   {"pair_two", pair_json(orbits[1][0])}};
      }
    }
  }
  res.actual["orbit_counts"] = std::move(counts);
  res.pass = pass;
  return res;
}

CheckResult check_distance_transitive(const Graph& g, const PermGroup& group) {
  std::optional<int> diam = diameter(g);
  if (!diam || *diam < 1) throw OutOfRange("diameter undefined or zero");
  CheckResult res = check_t_distance_transitive(g, group, *diam);
  res.name = "distance_transitive";
  res.actual["diameter"] = *diam;
  return res;
}

CheckResult check_s_arc_transitive(const Graph& g, const PermGroup& group, int s) {
  require_automorphisms(g, group);
  if (s < 1) throw OutOfRange("arc transitivity needs s >= 1");
  const std::vector<int> arcs = s_arcs(g, s);
  if (arcs.empty()) throw NoSArcs("graph has no " + std::to_string(s) + "-arcs");
  kernels::TupleOrbits to = kernels::tuple_orbits(arcs, s + 1, group.generators());

  CheckResult res;
  res.name = std::to_string(s) + "_arc_transitive";
  res.expected = ordered_json{{"arc_orbits", 1}};
  res.actual = ordered_json{{"arc_orbits", to.orbits.size()},
                            {"arc_count", arcs.size() / (s + 1)}};
  res.pass = to.orbits.size() == 1;
  if (!res.pass) {
    const int stride = s + 1;
    res.witness = ordered_json{
        {"arc_one", arc_json(arcs.data() + static_cast<std::size_t>(to.orbits[0][0]) * stride, stride)},
        {"arc_two", arc_json(arcs.data() + static_cast<std::size_t>(to.orbits[1][0]) * stride, stride)}};
  }
  return res;
}

CheckResult check_s_arc_regular(const Graph& g, const PermGroup& group, int s) {
  CheckResult base = check_s_arc_transitive(g, group, s);
  const std::uint64_t arc_count = count_s_arcs(g, s);

  CheckResult res;
  res.name = std::to_string(s) + "_arc_regular";
  res.expected = ordered_json{{"arc_orbits", 1}, {"group_order_equals_arc_count", true}};
  res.actual = ordered_json{{"arc_orbits", base.actual["arc_orbits"]},
                            {"arc_count", arc_count},
                            {"group_order", group.order()}};
  res.pass = base.pass && group.order() == arc_count;
  res.witness = base.witness;
  return res;
}

CheckResult check_semisymmetric(const Graph& g, const PermGroup& group) {
  require_automorphisms(g, group);
  CheckResult res;
  res.name = "semisymmetric";
  res.expected =
      ordered_json{{"regular", true}, {"edge_orbits", 1}, {"vertex_transitive", false}};

  const std::optional<int> valency = g.regular_valency();
  const auto vertex_orbits = point_orbits(group);
  const auto edge_orbits = point_orbits(edge_action_group(g, group));
  res.actual = ordered_json{{"regular", valency.has_value()},
                            {"edge_orbits", edge_orbits.size()},
                            {"vertex_orbits", vertex_orbits.size()}};
  if (valency) res.actual["valency"] = *valency;
  res.pass = valency.has_value() && edge_orbits.size() == 1 && vertex_orbits.size() >= 2;

  if (edge_orbits.size() > 1) {
    const auto edges = g.edge_list();
    res.witness = ordered_json{{"edge_one", pair_json(edges[edge_orbits[0][0]])},
                               {"edge_two", pair_json(edges[edge_orbits[1][0]])}};
  } else if (vertex_orbits.size() < 2) {
    res.witness = ordered_json{{"note", "group is vertex-transitive"}};
  }
  return res;
}

CheckResult check_normal_cayley(const CayleyContext& ctx, const PermGroup& aut) {
  require_automorphisms(ctx.gamma, aut);
  CheckResult res;
  res.name = "normal_cayley";
  res.expected = ordered_json{{"translations_normal", true},
                              {"aut_order", ctx.normalizer.order()},
                              {"vertex_transitive", true},
                              {"identity_stabilizer_matches", true}};

  const bool normal = is_normal(ctx.translations, aut);
  const bool transitive = point_orbits(aut).size() == 1;
  const bool stab_matches = stabilizer(aut, 0).elements() == ctx.aut_gs.elements();
  res.actual = ordered_json{{"translations_normal", normal},
                            {"aut_order", aut.order()},
                            {"vertex_transitive", transitive},
                            {"identity_stabilizer_matches", stab_matches}};
  res.pass = normal && aut.order() == ctx.normalizer.order() && transitive && stab_matches;
  return res;
}

}  // namespace p3cay
