#include "p3cay/report.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "p3cay/aut_search.hpp"
#include "p3cay/cayley.hpp"
#include "p3cay/coset.hpp"
#include "p3cay/graph.hpp"
#include "p3cay/group.hpp"
#include "p3cay/kernels.hpp"
#include "p3cay/perm.hpp"

namespace p3cay {

using nlohmann::ordered_json;

namespace {

constexpr const char* kTimeoutPrefix = "timed out";

std::string elem_label(const GroupElement& g) {
  return std::to_string(g.i) + "." + std::to_string(g.j) + "." + std::to_string(g.k);
}

std::string vertex_label(const Graph& g, int v) {
  return g.labels.empty() ? std::to_string(v) : g.labels[v];
}

ordered_json arc_labels(const Graph& g, const int* arc, int len) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < len; ++i) out.push_back(vertex_label(g, arc[i]));
  return out;
}

/// Blocks of the center quotient: the <c>-cosets, one per (i, j).
std::vector<std::vector<int>> center_blocks(const GroupParams& params) {
  const int p = params.p;
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(p) * p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      std::vector<int> block;
      block.reserve(p);
      for (int k = 0; k < p; ++k) block.push_back(to_index(GroupElement{i, j, k}, params));
      blocks.push_back(std::move(block));
    }
  }
  return blocks;
}

/// Runs check bodies on worker threads under a soft timeout. Results are
/// committed on the calling thread only; a body that outlives its budget can
/// never touch recorded state afterwards because every body owns (copies of)
/// everything it reads.
class Runner {
 public:
  explicit Runner(const SuiteConfig& cfg) : cfg_(cfg) {}

  bool selected(const std::string& name) const {
    if (cfg_.check_filter.empty()) return true;
    for (const std::string& prefix : cfg_.check_filter) {
      if (name.rfind(prefix, 0) == 0) return true;
    }
    return false;
  }

  void check(const std::string& name, std::function<CheckResult()> body,
             bool informational = false) {
    if (!selected(name)) return;
    run_timed<int>(
        name, informational, true,
        [body = std::move(body)] { return std::pair<CheckResult, int>(body(), 0); });
  }

  /// Constructions always run (downstream checks need the value); the entry
  /// is recorded when selected, and always on failure or timeout so a broken
  /// build cannot hide behind a filter.
  template <typename T>
  std::shared_ptr<const T> build(
      const std::string& name,
      std::function<std::pair<CheckResult, std::shared_ptr<const T>>()> body) {
    auto out = run_timed<std::shared_ptr<const T>>(name, false, selected(name), std::move(body));
    return out ? *out : nullptr;
  }

  void skip(const std::string& name, const std::string& reason, bool informational = false) {
    if (!selected(name)) return;
    TimedCheck tc;
    tc.result.name = name;
    tc.informational = informational;
    tc.skipped = true;
    tc.skip_reason = reason;
    checks_.push_back(std::move(tc));
  }

  std::vector<TimedCheck> take() { return std::move(checks_); }

 private:
  template <typename R>
  std::optional<R> run_timed(const std::string& name, bool informational, bool record,
                             std::function<std::pair<CheckResult, R>()> body) {
    using Outcome = std::pair<CheckResult, R>;
    auto promise = std::make_shared<std::promise<Outcome>>();
    std::future<Outcome> fut = promise->get_future();
    std::thread([promise, body = std::move(body)] {
      try {
        promise->set_value(body());
      } catch (...) {
        promise->set_exception(std::current_exception());
      }
    }).detach();

    const auto start = std::chrono::steady_clock::now();
    TimedCheck tc;
    tc.result.name = name;
    tc.informational = informational;
    std::optional<R> out;
    bool record_now = record;
    if (fut.wait_for(std::chrono::duration<double>(cfg_.check_timeout_seconds)) ==
        std::future_status::ready) {
      tc.time_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      try {
        Outcome o = fut.get();
        tc.result = std::move(o.first);
        tc.result.name = name;
        out = std::move(o.second);
      } catch (const std::exception& e) {
        tc.result = CheckResult{};
        tc.result.name = name;
        tc.result.pass = false;
        tc.result.witness = ordered_json{{"error", e.what()}};
      }
      if (!tc.result.pass) record_now = true;
    } else {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%s after %.0f s", kTimeoutPrefix,
                    cfg_.check_timeout_seconds);
      tc.skipped = true;
      tc.skip_reason = buf;
      record_now = true;
    }
    if (record_now) checks_.push_back(std::move(tc));
    return out;
  }

  const SuiteConfig& cfg_;
  std::vector<TimedCheck> checks_;
};

}  // namespace

VerificationReport run_suite(const SuiteConfig& config) {
  const GroupParams params =
      config.t == 0 ? make_group_params(config.p) : make_group_params(config.p, config.t);
  VerificationReport rep;
  rep.p = params.p;
  rep.t = params.t;

  Runner r(config);
  const int p = params.p;
  const int n = p * p * p;
  const std::uint64_t aut_gs_order = 2ull * (p - 1) * (p - 1);
  const std::uint64_t normalizer_order = static_cast<std::uint64_t>(n) * aut_gs_order;
  const int v_ac = to_index(GroupElement{1, 0, 1}, params);
  const int v_ba2c = to_index(GroupElement{2, 1, p - 1}, params);

  auto dep_check = [&r](bool deps_ok, const std::string& name, std::function<CheckResult()> body,
                        bool informational = false) {
    if (!deps_ok) {
      r.skip(name, "dependency unavailable", informational);
    } else {
      r.check(name, std::move(body), informational);
    }
  };

  // ---- group layer -------------------------------------------------------

  r.check("group.relations", [params] {
    CheckResult c;
    const GroupElement a{1, 0, 0};
    const GroupElement b{0, 1, 0};
    const GroupElement z = commutator(a, b, params);
    const bool comm_ok = z == GroupElement{0, 0, 1};
    const bool nontrivial = a != kIdentity && b != kIdentity && z != kIdentity;
    const bool orders_ok = power(a, params.p, params) == kIdentity &&
                           power(b, params.p, params) == kIdentity &&
                           power(z, params.p, params) == kIdentity;
    bool central = true;
    for (const GroupElement& g : all_elements(params)) {
      if (commutator(z, g, params) != kIdentity) {
        central = false;
        break;
      }
    }
    c.expected = ordered_json{{"commutator_ab_is_c", true},
                              {"generators_have_order_p", true},
                              {"c_central", true}};
    c.actual = ordered_json{{"commutator_ab_is_c", comm_ok},
                            {"generators_have_order_p", orders_ok && nontrivial},
                            {"c_central", central}};
    c.pass = comm_ok && nontrivial && orders_ok && central;
    return c;
  });

  r.check("group.associativity", [params, n] {
    CheckResult c;
    const std::vector<GroupElement> elems = all_elements(params);
    std::uint64_t checked = 0;
    std::optional<std::array<GroupElement, 3>> bad;
    auto test = [&](const GroupElement& x, const GroupElement& y, const GroupElement& z) {
      ++checked;
      const GroupElement lhs = multiply(multiply(x, y, params), z, params);
      const GroupElement rhs = multiply(x, multiply(y, z, params), params);
      if (lhs != rhs && !bad) bad = std::array<GroupElement, 3>{x, y, z};
    };
    std::string mode;
    if (params.p == 3) {
      mode = "exhaustive";
      for (const GroupElement& x : elems)
        for (const GroupElement& y : elems)
          for (const GroupElement& z : elems) test(x, y, z);
    } else {
      mode = "sampled";
      std::mt19937 rng(0x5eedu);
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int s = 0; s < 200000; ++s) test(elems[pick(rng)], elems[pick(rng)], elems[pick(rng)]);
    }
    c.expected = ordered_json{{"violations", 0}};
    c.actual = ordered_json{
        {"mode", mode}, {"triples_checked", checked}, {"violations", bad ? 1 : 0}};
    if (bad) {
      c.witness = ordered_json{{"x", elem_label((*bad)[0])},
                               {"y", elem_label((*bad)[1])},
                               {"z", elem_label((*bad)[2])}};
    }
    c.pass = !bad;
    return c;
  });

  r.check("group.connection_set", [params, p, n] {
    CheckResult c;
    const std::vector<GroupElement> s = connection_set(params);
    const bool size_ok = s.size() == static_cast<std::size_t>(2 * (p - 1));
    bool identity_free = true;
    bool inverse_closed = true;
    for (const GroupElement& x : s) {
      if (x == kIdentity) identity_free = false;
      if (std::find(s.begin(), s.end(), inverse(x, params)) == s.end()) inverse_closed = false;
    }
    const bool generates = generated_subgroup(s, params).size() == static_cast<std::size_t>(n);
    c.expected = ordered_json{{"size", 2 * (p - 1)},
                              {"identity_free", true},
                              {"inverse_closed", true},
                              {"generates_group", true}};
    c.actual = ordered_json{{"size", s.size()},
                            {"identity_free", identity_free},
                            {"inverse_closed", inverse_closed},
                            {"generates_group", generates}};
    c.pass = size_ok && identity_free && inverse_closed && generates;
    return c;
  });

  r.check("group.automorphism_count", [params, aut_gs_order] {
    CheckResult c;
    const std::vector<GroupAutomorphism> auts = aut_preserving_connection_set(params);
    const std::vector<GroupElement> s = connection_set(params);
    bool all_preserve = true;
    for (const GroupAutomorphism& phi : auts) {
      if (!phi.preserves(s, params)) all_preserve = false;
    }
    c.expected = ordered_json{{"count", aut_gs_order}, {"all_preserve_connection_set", true}};
    c.actual = ordered_json{{"count", auts.size()}, {"all_preserve_connection_set", all_preserve}};
    c.pass = auts.size() == aut_gs_order && all_preserve;
    return c;
  });

  r.check("group.automorphism_generators", [params, p, aut_gs_order] {
    CheckResult c;
    const CanonicalAutomorphisms canon = canonical_automorphisms(params);
    const GroupAutomorphism id = GroupAutomorphism::identity(params);
    auto exact_order = [&](const GroupAutomorphism& g) {
      GroupAutomorphism acc = g;
      int o = 1;
      while (!(acc == id) && o <= 2 * p) {
        acc = compose(acc, g, params);
        ++o;
      }
      return o;
    };
    const bool orders_ok = exact_order(canon.scale_a) == p - 1 &&
                           exact_order(canon.scale_b) == p - 1 &&
                           exact_order(canon.swap_ab) == 2;
    const bool scales_commute = compose(canon.scale_a, canon.scale_b, params) ==
                                compose(canon.scale_b, canon.scale_a, params);
    const bool swap_conjugates =
        compose(compose(inverse(canon.swap_ab, params), canon.scale_a, params), canon.swap_ab,
                params) == canon.scale_b;

    std::set<GroupAutomorphism> closure{id};
    std::vector<GroupAutomorphism> frontier{id};
    const std::array<GroupAutomorphism, 3> gens{canon.scale_a, canon.scale_b, canon.swap_ab};
    while (!frontier.empty()) {
      std::vector<GroupAutomorphism> next;
      for (const GroupAutomorphism& f : frontier) {
        for (const GroupAutomorphism& g : gens) {
          GroupAutomorphism h = compose(f, g, params);
          if (closure.insert(h).second) next.push_back(std::move(h));
        }
      }
      frontier = std::move(next);
    }
    const std::vector<GroupAutomorphism> listed = aut_preserving_connection_set(params);
    const bool closure_matches =
        std::vector<GroupAutomorphism>(closure.begin(), closure.end()) == listed;

    c.expected = ordered_json{{"scale_orders", p - 1},
                              {"swap_order", 2},
                              {"scales_commute", true},
                              {"swap_exchanges_scales", true},
                              {"generate_all", true}};
    c.actual = ordered_json{{"scale_orders_ok", orders_ok},
                            {"swap_order_ok", exact_order(canon.swap_ab) == 2},
                            {"scales_commute", scales_commute},
                            {"swap_exchanges_scales", swap_conjugates},
                            {"closure_size", closure.size()},
                            {"generate_all", closure_matches}};
    c.pass = orders_ok && scales_commute && swap_conjugates && closure_matches &&
             closure.size() == aut_gs_order;
    return c;
  });

  r.check("group.order_p2_subgroups", [params, p] {
    CheckResult c;
    const std::vector<std::vector<GroupElement>> listed = order_p2_subgroups(params);
    const std::vector<GroupElement> elems = all_elements(params);
    const std::size_t p2 = static_cast<std::size_t>(p) * p;
    std::set<std::vector<GroupElement>> brute;
    for (std::size_t x = 0; x < elems.size(); ++x) {
      for (std::size_t y = x + 1; y < elems.size(); ++y) {
        try {
          std::vector<GroupElement> sub = generated_subgroup({elems[x], elems[y]}, params, p2);
          if (sub.size() == p2) brute.insert(std::move(sub));
        } catch (const BoundExceeded&) {
          // The pair generates something larger; not an order p^2 subgroup.
        }
      }
    }
    const std::set<std::vector<GroupElement>> listed_set(listed.begin(), listed.end());
    c.expected = ordered_json{{"count", p + 1}, {"matches_exhaustive_search", true}};
    c.actual = ordered_json{{"count", listed.size()},
                            {"exhaustive_count", brute.size()},
                            {"matches_exhaustive_search", brute == listed_set}};
    c.pass = listed.size() == static_cast<std::size_t>(p + 1) && brute == listed_set;
    return c;
  });

  // ---- Cayley graph and its known automorphisms --------------------------

  auto ctx = r.build<CayleyContext>(
      "cayley.build", [params, n, p, aut_gs_order, normalizer_order] {
        auto built = std::make_shared<const CayleyContext>(build_cayley(params));
        CheckResult c;
        c.expected = ordered_json{{"vertices", n},
                                  {"valency", 2 * (p - 1)},
                                  {"translation_group_order", n},
                                  {"connection_aut_order", aut_gs_order},
                                  {"normalizer_order", normalizer_order}};
        const std::optional<int> val = built->gamma.regular_valency();
        c.actual = ordered_json{{"vertices", built->gamma.n},
                                {"valency", val ? *val : -1},
                                {"translation_group_order", built->translations.order()},
                                {"connection_aut_order", built->aut_gs.order()},
                                {"normalizer_order", built->normalizer.order()}};
        c.pass = c.expected == c.actual;
        return std::pair<CheckResult, std::shared_ptr<const CayleyContext>>(c, built);
      });

  dep_check(ctx != nullptr, "cayley.translations_normal", [ctx] {
    CheckResult c;
    const bool normal = is_normal(ctx->translations, ctx->normalizer);
    bool trivial_meet = true;
    for (const Permutation& q : ctx->aut_gs.elements()) {
      if (!q.is_identity() && ctx->translations.contains(q)) trivial_meet = false;
    }
    c.expected = ordered_json{{"translations_normal", true}, {"intersection_trivial", true}};
    c.actual = ordered_json{{"translations_normal", normal}, {"intersection_trivial", trivial_meet}};
    c.pass = normal && trivial_meet;
    return c;
  });

  dep_check(ctx != nullptr, "gamma.structure", [ctx, n, p] {
    CheckResult c;
    const Graph& g = ctx->gamma;
    const std::optional<int> val = g.regular_valency();
    c.expected = ordered_json{{"vertices", n},
                              {"edges", static_cast<std::uint64_t>(n) * (p - 1)},
                              {"valency", 2 * (p - 1)},
                              {"connected", true},
                              {"labelled", true}};
    c.actual = ordered_json{{"vertices", g.n},
                            {"edges", g.edge_count()},
                            {"valency", val ? *val : -1},
                            {"connected", is_connected(g)},
                            {"labelled", g.labels.size() == static_cast<std::size_t>(g.n)}};
    c.pass = c.expected == c.actual;
    return c;
  });

  dep_check(ctx != nullptr, "gamma.girth", [ctx, params] {
    CheckResult c;
    const Graph& g = ctx->gamma;
    const std::optional<int> gv = girth(g);
    const int va = to_index(GroupElement{1, 0, 0}, params);
    const int va2 = to_index(GroupElement{2, 0, 0}, params);
    const bool triangle = g.has_edge(0, va) && g.has_edge(0, va2) && g.has_edge(va, va2);
    c.expected = ordered_json{{"girth", 3}};
    c.actual = ordered_json{{"girth", gv ? *gv : -1}, {"powers_of_a_triangle", triangle}};
    if (triangle) {
      c.witness = ordered_json{{"triangle", ordered_json::array({vertex_label(g, 0),
                                                                 vertex_label(g, va),
                                                                 vertex_label(g, va2)})}};
    }
    c.pass = gv && *gv == 3 && triangle;
    return c;
  });

  dep_check(ctx != nullptr, "gamma.spheres", [ctx, params, p] {
    CheckResult c;
    const Graph& g = ctx->gamma;
    const std::vector<std::vector<int>> spheres = distance_partition(g, 0);

    std::vector<int> expect1;
    for (const GroupElement& x : connection_set(params)) expect1.push_back(to_index(x, params));
    std::sort(expect1.begin(), expect1.end());

    // Distance two: a^i b^j and b^j a^i = a^i b^j c^{-ij}, i and j nonzero.
    std::vector<int> expect2;
    for (int i = 1; i < p; ++i) {
      for (int j = 1; j < p; ++j) {
        expect2.push_back(to_index(GroupElement{i, j, 0}, params));
        expect2.push_back(to_index(GroupElement{i, j, (p - (i * j) % p) % p}, params));
      }
    }
    std::sort(expect2.begin(), expect2.end());

    const bool have_two = spheres.size() > 2;
    const bool s1_ok = have_two && spheres[1] == expect1;
    const bool s2_ok = have_two && spheres[2] == expect2;
    ordered_json sizes = ordered_json::array();
    for (const std::vector<int>& sp : spheres) sizes.push_back(sp.size());
    c.expected = ordered_json{{"sphere1_size", 2 * (p - 1)},
                              {"sphere2_size", 2 * (p - 1) * (p - 1)},
                              {"sphere1_is_connection_set", true},
                              {"sphere2_matches_normal_forms", true}};
    c.actual = ordered_json{{"sphere_sizes", sizes},
                            {"sphere1_is_connection_set", s1_ok},
                            {"sphere2_matches_normal_forms", s2_ok}};
    if (have_two && !s2_ok) {
      for (std::size_t i = 0; i < std::max(spheres[2].size(), expect2.size()); ++i) {
        const int got = i < spheres[2].size() ? spheres[2][i] : -1;
        const int want = i < expect2.size() ? expect2[i] : -1;
        if (got != want) {
          c.witness = ordered_json{{"first_difference_index", i},
                                   {"computed", got},
                                   {"predicted", want}};
          break;
        }
      }
    }
    c.pass = s1_ok && s2_ok;
    return c;
  });

  dep_check(ctx != nullptr, "gamma.sphere3_witnesses", [ctx, v_ac, v_ba2c] {
    CheckResult c;
    const std::vector<int> dist = distances_from(ctx->gamma, 0);
    c.expected = ordered_json{{"distance_ac", 3}, {"distance_ba2c", 3}};
    c.actual = ordered_json{{"ac", vertex_label(ctx->gamma, v_ac)},
                            {"distance_ac", dist[v_ac]},
                            {"ba2c", vertex_label(ctx->gamma, v_ba2c)},
                            {"distance_ba2c", dist[v_ba2c]}};
    c.pass = dist[v_ac] == 3 && dist[v_ba2c] == 3;
    return c;
  });

  dep_check(
      ctx != nullptr, "gamma.diameter",
      [ctx] {
        CheckResult c;
        const std::optional<int> d = diameter(ctx->gamma);
        c.actual = ordered_json{{"diameter", d ? *d : -1}};
        c.pass = d.has_value();
        return c;
      },
      /*informational=*/true);

  // ---- action of the known normalizer ------------------------------------

  dep_check(ctx != nullptr, "normalizer.no_normal_p2_subgroup", [ctx, params, p] {
    CheckResult c;
    const std::vector<std::vector<GroupElement>> subs = order_p2_subgroups(params);
    int normal_count = 0;
    for (std::size_t idx = 0; idx < subs.size(); ++idx) {
      std::vector<Permutation> perms;
      perms.reserve(subs[idx].size());
      for (const GroupElement& h : subs[idx]) perms.push_back(right_translation(h, params));
      const PermGroup hp = PermGroup::from_elements(std::move(perms));
      if (is_normal(hp, ctx->normalizer)) {
        ++normal_count;
        if (c.witness.is_null()) {
          c.witness = ordered_json{{"subgroup_index", idx},
                                   {"sample_member", elem_label(subs[idx][1])}};
        }
      }
    }
    c.expected = ordered_json{{"subgroups", p + 1}, {"normal_in_normalizer", 0}};
    c.actual = ordered_json{{"subgroups", subs.size()}, {"normal_in_normalizer", normal_count}};
    c.pass = subs.size() == static_cast<std::size_t>(p + 1) && normal_count == 0;
    return c;
  });

  dep_check(ctx != nullptr, "normalizer.preserves_adjacency", [ctx] {
    CheckResult c;
    int broken_gen = -1;
    int broken_edge = -1;
    const std::vector<Permutation>& gens = ctx->normalizer.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int e = kernels::first_broken_edge(ctx->gamma, gens[i]);
      if (e >= 0) {
        broken_gen = static_cast<int>(i);
        broken_edge = e;
        break;
      }
    }
    c.expected = ordered_json{{"broken_edges", 0}};
    c.actual = ordered_json{{"generators", gens.size()}, {"broken_edges", broken_gen < 0 ? 0 : 1}};
    if (broken_gen >= 0) {
      c.witness = ordered_json{{"generator", broken_gen}, {"edge_index", broken_edge}};
    }
    c.pass = broken_gen < 0;
    return c;
  });

  dep_check(ctx != nullptr, "normalizer.two_distance_transitive", [ctx] {
    return check_t_distance_transitive(ctx->gamma, ctx->normalizer, 2);
  });

  dep_check(ctx != nullptr, "normalizer.distance3_split", [ctx, n, v_ac, v_ba2c] {
    CheckResult c;
    const std::vector<int> dm = kernels::distance_matrix(ctx->gamma);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (dm[static_cast<std::size_t>(u) * n + v] == 3) pairs.emplace_back(u, v);
      }
    }
    if (pairs.empty()) {
      c.actual = ordered_json{{"distance3_pairs", 0}};
      c.pass = false;
      return c;
    }
    const auto orbs = orbits_on_ordered_pairs(ctx->normalizer, pairs);
    auto orbit_index = [&orbs](const std::pair<int, int>& w) {
      for (std::size_t i = 0; i < orbs.size(); ++i) {
        if (std::binary_search(orbs[i].begin(), orbs[i].end(), w)) return static_cast<int>(i);
      }
      return -1;
    };
    const int o1 = orbit_index({0, v_ac});
    const int o2 = orbit_index({0, v_ba2c});
    c.expected = ordered_json{{"witness_pairs_in_distinct_orbits", true}};
    c.actual = ordered_json{{"distance3_pairs", pairs.size()},
                            {"orbit_count", orbs.size()},
                            {"orbit_of_ac", o1},
                            {"orbit_of_ba2c", o2}};
    c.witness = ordered_json{{"pair_one", ordered_json::array({vertex_label(ctx->gamma, 0),
                                                               vertex_label(ctx->gamma, v_ac)})},
                             {"pair_two", ordered_json::array({vertex_label(ctx->gamma, 0),
                                                               vertex_label(ctx->gamma, v_ba2c)})}};
    c.pass = o1 >= 0 && o2 >= 0 && o1 != o2;
    return c;
  });

  dep_check(ctx != nullptr, "normalizer.sphere3_orbit_of_ac", [ctx, params, p, v_ac, v_ba2c] {
    CheckResult c;
    const std::vector<int> orb = orbit(ctx->aut_gs, v_ac);
    std::vector<int> expect;
    for (int x = 1; x < p; ++x) {
      for (int y = 1; y < p; ++y) {
        expect.push_back(to_index(GroupElement{x, 0, y}, params));
        expect.push_back(to_index(GroupElement{0, x, y}, params));
      }
    }
    std::sort(expect.begin(), expect.end());
    const bool match = orb == expect;
    const bool excludes = !std::binary_search(orb.begin(), orb.end(), v_ba2c);
    c.expected = ordered_json{{"orbit_size", 2 * (p - 1) * (p - 1)},
                              {"orbit_is_predicted_set", true},
                              {"excludes_ba2c", true}};
    c.actual = ordered_json{{"orbit_size", orb.size()},
                            {"orbit_is_predicted_set", match},
                            {"excludes_ba2c", excludes}};
    c.pass = match && excludes;
    return c;
  });

  dep_check(ctx != nullptr, "normalizer.not_two_arc_transitive", [ctx] {
    CheckResult c;
    const CheckResult inner = check_s_arc_transitive(ctx->gamma, ctx->normalizer, 2);
    const std::vector<int> arcs = s_arcs(ctx->gamma, 2);
    const auto to = kernels::tuple_orbits(arcs, 3, ctx->normalizer.generators());
    const int* triangle_rep = nullptr;
    const int* geodesic_rep = nullptr;
    for (const std::vector<int>& orb : to.orbits) {
      const int* rep = arcs.data() + static_cast<std::size_t>(orb.front()) * 3;
      const int d = distances_from(ctx->gamma, rep[0])[rep[2]];
      if (d == 1 && !triangle_rep) triangle_rep = rep;
      if (d == 2 && !geodesic_rep) geodesic_rep = rep;
    }
    c.expected = ordered_json{{"two_arc_transitive", false},
                              {"triangle_and_geodesic_orbits", true}};
    c.actual = ordered_json{{"two_arc_transitive", inner.pass},
                            {"two_arc_orbits", to.orbits.size()}};
    if (triangle_rep && geodesic_rep) {
      c.witness = ordered_json{{"arc_with_adjacent_ends", arc_labels(ctx->gamma, triangle_rep, 3)},
                               {"arc_with_distant_ends", arc_labels(ctx->gamma, geodesic_rep, 3)}};
    }
    c.pass = !inner.pass && triangle_rep && geodesic_rep;
    return c;
  });

  // ---- the full automorphism group, where searched ------------------------

  const bool search_allowed = !config.skip_aut_search && (p <= 5 || config.force_aut_search);
  const std::string gate_reason =
      config.skip_aut_search ? "automorphism search disabled by configuration"
                             : "automorphism search at p = 7 runs only with force_aut_search";

  std::shared_ptr<const PermGroup> aut;
  if (!ctx) {
    r.skip("aut.search", "dependency unavailable");
  } else if (!search_allowed) {
    r.skip("aut.search", gate_reason);
  } else {
    aut = r.build<PermGroup>("aut.search", [ctx, normalizer_order] {
      auto g = std::make_shared<const PermGroup>(automorphism_group(ctx->gamma));
      CheckResult c;
      c.expected = ordered_json{{"order", normalizer_order}};
      c.actual = ordered_json{{"order", g->order()}};
      c.pass = g->order() == normalizer_order;
      return std::pair<CheckResult, std::shared_ptr<const PermGroup>>(c, g);
    });
  }
  auto aut_dep = [&](const std::string& name, std::function<CheckResult()> body) {
    if (aut) {
      r.check(name, std::move(body));
    } else {
      r.skip(name, ctx && !search_allowed ? gate_reason : "dependency unavailable");
    }
  };

  aut_dep("aut.equals_normalizer", [ctx, aut] {
    CheckResult c;
    bool norm_in_aut = true;
    for (const Permutation& g : ctx->normalizer.generators()) {
      if (!aut->contains(g)) norm_in_aut = false;
    }
    bool aut_in_norm = true;
    for (const Permutation& g : aut->generators()) {
      if (!ctx->normalizer.contains(g)) aut_in_norm = false;
    }
    c.expected = ordered_json{{"same_order", true},
                              {"normalizer_inside_aut", true},
                              {"aut_inside_normalizer", true}};
    c.actual = ordered_json{{"aut_order", aut->order()},
                            {"normalizer_order", ctx->normalizer.order()},
                            {"normalizer_inside_aut", norm_in_aut},
                            {"aut_inside_normalizer", aut_in_norm}};
    c.pass = aut->order() == ctx->normalizer.order() && norm_in_aut && aut_in_norm;
    return c;
  });

  aut_dep("aut.normal_cayley", [ctx, aut] { return check_normal_cayley(*ctx, *aut); });

  aut_dep("aut.two_distance_transitive",
          [ctx, aut] { return check_t_distance_transitive(ctx->gamma, *aut, 2); });

  aut_dep("aut.not_distance_transitive", [ctx, aut] {
    CheckResult c;
    const CheckResult inner = check_distance_transitive(ctx->gamma, *aut);
    c.expected = ordered_json{{"distance_transitive", false}};
    c.actual = ordered_json{{"distance_transitive", inner.pass}, {"detail", inner.actual}};
    c.pass = !inner.pass;
    return c;
  });

  aut_dep("aut.not_two_arc_transitive", [ctx, aut] {
    CheckResult c;
    const CheckResult inner = check_s_arc_transitive(ctx->gamma, *aut, 2);
    c.expected = ordered_json{{"two_arc_transitive", false}};
    c.actual = ordered_json{{"two_arc_transitive", inner.pass}};
    c.witness = inner.witness;
    c.pass = !inner.pass;
    return c;
  });

  // ---- clique graph against the coset construction -----------------------

  std::shared_ptr<const CliqueCosetIdentification> ident;
  if (!ctx) {
    r.skip("sigma.build_and_identify", "dependency unavailable");
  } else {
    ident = r.build<CliqueCosetIdentification>("sigma.build_and_identify", [ctx] {
      auto id = std::make_shared<const CliqueCosetIdentification>(
          identify_clique_and_coset_graphs(*ctx));
      return std::pair<CheckResult, std::shared_ptr<const CliqueCosetIdentification>>(id->check,
                                                                                      id);
    });
  }

  dep_check(ident != nullptr, "sigma.structure", [ident, p, n] {
    CheckResult c;
    const Graph& sg = ident->cosets.graph;
    const std::optional<int> val = sg.regular_valency();
    const std::optional<std::vector<int>> side = bipartite_side(sg);
    std::vector<int> family_a(static_cast<std::size_t>(p) * p);
    for (int i = 0; i < p * p; ++i) family_a[i] = i;
    c.expected = ordered_json{{"vertices", 2 * p * p},
                              {"valency", p},
                              {"edges", n},
                              {"connected", true},
                              {"bipartite_by_family", true}};
    c.actual = ordered_json{{"vertices", sg.n},
                            {"valency", val ? *val : -1},
                            {"edges", sg.edge_count()},
                            {"connected", is_connected(sg)},
                            {"bipartite_by_family", side && *side == family_a}};
    c.pass = c.expected == c.actual;
    return c;
  });

  dep_check(ident != nullptr, "sigma.girth", [ident] {
    CheckResult c;
    const std::optional<int> gv = girth(ident->cosets.graph);
    c.expected = ordered_json{{"even", true}, {"at_least", 4}};
    c.actual = ordered_json{{"girth", gv ? *gv : -1}};
    c.pass = gv && *gv >= 4 && *gv % 2 == 0;
    return c;
  });

  dep_check(ctx != nullptr && ident != nullptr, "sigma.line_graph_is_gamma", [ctx, ident] {
    return line_graph_isomorphism(*ctx, ident->cosets).check;
  });

  std::shared_ptr<const PermGroup> induced_n;
  if (!ctx || !ident) {
    r.skip("sigma.normalizer_action", "dependency unavailable");
  } else {
    induced_n = r.build<PermGroup>("sigma.normalizer_action", [ctx, ident] {
      auto gp = std::make_shared<const PermGroup>(
          induced_group_on_sigma(ident->cosets, ctx->normalizer));
      CheckResult c;
      const std::vector<Permutation>& elems = ctx->normalizer.elements();
      bool hom_ok = true;
      for (std::size_t s = 0; s < 8; ++s) {
        const Permutation& e1 = elems[(s * 131 + 7) % elems.size()];
        const Permutation& e2 = elems[(s * 257 + 13) % elems.size()];
        const Permutation lhs = induced_action_on_sigma(ident->cosets, compose(e1, e2));
        const Permutation rhs = compose(induced_action_on_sigma(ident->cosets, e1),
                                        induced_action_on_sigma(ident->cosets, e2));
        if (!(lhs == rhs)) hom_ok = false;
      }
      // Order equality makes the action faithful: the image of a finite group
      // has full order exactly when the kernel is trivial.
      c.expected = ordered_json{{"induced_order", ctx->normalizer.order()},
                                {"homomorphism_samples_ok", true}};
      c.actual = ordered_json{{"induced_order", gp->order()}, {"homomorphism_samples_ok", hom_ok}};
      c.pass = gp->order() == ctx->normalizer.order() && hom_ok;
      return std::pair<CheckResult, std::shared_ptr<const PermGroup>>(c, gp);
    });
  }

  dep_check(ctx != nullptr && ident != nullptr, "sigma.translations_semisymmetric",
            [ctx, ident, p] {
              CheckResult c;
              const Graph& sg = ident->cosets.graph;
              const PermGroup tr = induced_group_on_sigma(ident->cosets, ctx->translations);
              const CheckResult inner = check_semisymmetric(sg, tr);
              const std::vector<std::vector<int>> orbs = point_orbits(tr);
              std::vector<int> family_a(static_cast<std::size_t>(p) * p);
              std::vector<int> family_b(static_cast<std::size_t>(p) * p);
              for (int i = 0; i < p * p; ++i) {
                family_a[i] = i;
                family_b[i] = p * p + i;
              }
              const bool families = orbs.size() == 2 && orbs[0] == family_a && orbs[1] == family_b;
              c.expected = ordered_json{{"semisymmetric", true}, {"vertex_orbits_are_families", true}};
              c.actual = ordered_json{{"semisymmetric", inner.pass},
                                      {"vertex_orbits", orbs.size()},
                                      {"vertex_orbits_are_families", families},
                                      {"detail", inner.actual}};
              c.pass = inner.pass && families;
              return c;
            });

  dep_check(ctx != nullptr && ident != nullptr, "sigma.translations_edge_regular", [ctx, ident, n] {
    CheckResult c;
    const Graph& sg = ident->cosets.graph;
    const PermGroup tr = induced_group_on_sigma(ident->cosets, ctx->translations);
    const PermGroup eg = edge_action_group(sg, tr);
    std::vector<int> all_edges(sg.edge_count());
    for (std::size_t i = 0; i < all_edges.size(); ++i) all_edges[i] = static_cast<int>(i);
    const ActionRegularity reg = action_regularity(eg, all_edges);
    const char* reg_name = reg == ActionRegularity::regular          ? "regular"
                           : reg == ActionRegularity::semiregular_only ? "semiregular_only"
                           : reg == ActionRegularity::transitive_only  ? "transitive_only"
                                                                       : "neither";
    c.expected = ordered_json{{"edge_action", "regular"}, {"edge_group_order", n}};
    c.actual = ordered_json{{"edge_action", reg_name}, {"edge_group_order", eg.order()}};
    c.pass = reg == ActionRegularity::regular && eg.order() == static_cast<std::uint64_t>(n);
    return c;
  });

  dep_check(ident != nullptr && induced_n != nullptr, "sigma.normalizer_arc_transitive",
            [ident, induced_n] {
              return check_s_arc_transitive(ident->cosets.graph, *induced_n, 1);
            });

  dep_check(ident != nullptr, "sigma.three_arc_count", [ident, normalizer_order] {
    CheckResult c;
    const std::uint64_t cnt = count_s_arcs(ident->cosets.graph, 3);
    c.expected = ordered_json{{"three_arcs", normalizer_order}};
    c.actual = ordered_json{{"three_arcs", cnt}};
    c.pass = cnt == normalizer_order;
    return c;
  });

  dep_check(ident != nullptr && induced_n != nullptr, "sigma.three_arc_regular",
            [ident, induced_n] {
              return check_s_arc_regular(ident->cosets.graph, *induced_n, 3);
            });

  std::shared_ptr<const PermGroup> sigma_aut;
  if (!ident) {
    r.skip("sigma.aut_search", "dependency unavailable");
  } else if (!search_allowed) {
    r.skip("sigma.aut_search", gate_reason);
  } else {
    sigma_aut = r.build<PermGroup>("sigma.aut_search", [ident, normalizer_order] {
      auto g = std::make_shared<const PermGroup>(automorphism_group(ident->cosets.graph));
      CheckResult c;
      c.expected = ordered_json{{"order", normalizer_order}};
      c.actual = ordered_json{{"order", g->order()}};
      c.pass = g->order() == normalizer_order;
      return std::pair<CheckResult, std::shared_ptr<const PermGroup>>(c, g);
    });
  }
  auto sigma_aut_dep = [&](const std::string& name, std::function<CheckResult()> body) {
    if (sigma_aut) {
      r.check(name, std::move(body));
    } else {
      r.skip(name, ident && !search_allowed ? gate_reason : "dependency unavailable");
    }
  };

  sigma_aut_dep("sigma.aut_three_arc_regular", [ident, sigma_aut] {
    return check_s_arc_regular(ident->cosets.graph, *sigma_aut, 3);
  });

  sigma_aut_dep("sigma.aut_matches_gamma", [ident, induced_n, sigma_aut, aut, normalizer_order] {
    CheckResult c;
    bool induced_inside = induced_n != nullptr;
    if (induced_n) {
      for (const Permutation& g : induced_n->generators()) {
        if (!sigma_aut->contains(g)) induced_inside = false;
      }
    }
    c.expected = ordered_json{{"order", normalizer_order}, {"induced_action_inside", true}};
    c.actual = ordered_json{{"order", sigma_aut->order()},
                            {"induced_action_inside", induced_inside}};
    if (aut) c.actual["gamma_aut_order"] = aut->order();
    c.pass = sigma_aut->order() == normalizer_order && induced_inside &&
             (!aut || aut->order() == sigma_aut->order());
    return c;
  });

  // ---- quotient by the center ---------------------------------------------

  std::shared_ptr<const QuotientResult> quot;
  if (!ctx) {
    r.skip("quotient.build", "dependency unavailable");
  } else {
    quot = r.build<QuotientResult>("quotient.build", [ctx, params, p] {
      const std::vector<std::vector<int>> blocks = center_blocks(params);
      auto q = std::make_shared<const QuotientResult>(quotient_graph(ctx->gamma, blocks));
      const PermGroup zc =
          PermGroup::generated_by({right_translation(GroupElement{0, 0, 1}, params)});
      const bool orbits_match = point_orbits(zc) == blocks;
      bool sizes_ok = true;
      for (const std::vector<int>& b : q->blocks) {
        if (b.size() != static_cast<std::size_t>(p)) sizes_ok = false;
      }
      const std::optional<int> val = q->graph.regular_valency();
      CheckResult c;
      c.expected = ordered_json{{"blocks", p * p},
                                {"block_size_p", true},
                                {"blocks_are_center_orbits", true},
                                {"valency", 2 * (p - 1)},
                                {"connected", true}};
      c.actual = ordered_json{{"blocks", q->graph.n},
                              {"block_size_p", sizes_ok},
                              {"blocks_are_center_orbits", orbits_match},
                              {"valency", val ? *val : -1},
                              {"connected", is_connected(q->graph)}};
      c.pass = c.expected == c.actual;
      return std::pair<CheckResult, std::shared_ptr<const QuotientResult>>(c, q);
    });
  }

  dep_check(ctx != nullptr && quot != nullptr, "quotient.normal_cover", [ctx, quot] {
    CheckResult c;
    const CoverCheck cc = is_normal_cover(ctx->gamma, *quot);
    c.expected = ordered_json{{"covers", true}};
    c.actual = ordered_json{{"covers", cc.ok}};
    if (!cc.ok) c.witness = ordered_json{{"reason", cc.reason}, {"where", cc.witness}};
    c.pass = cc.ok;
    return c;
  });

  dep_check(ctx != nullptr, "quotient.center_semiregular", [ctx, params, p, n] {
    CheckResult c;
    const PermGroup zc =
        PermGroup::generated_by({right_translation(GroupElement{0, 0, 1}, params)});
    std::vector<int> all_pts(n);
    for (int v = 0; v < n; ++v) all_pts[v] = v;
    const ActionRegularity reg = action_regularity(zc, all_pts);
    c.expected = ordered_json{{"order", p}, {"semiregular", true}, {"transitive", false}};
    c.actual = ordered_json{{"order", zc.order()},
                            {"semiregular", reg == ActionRegularity::semiregular_only ||
                                                reg == ActionRegularity::regular},
                            {"transitive", reg == ActionRegularity::regular ||
                                               reg == ActionRegularity::transitive_only}};
    c.pass = zc.order() == static_cast<std::uint64_t>(p) &&
             reg == ActionRegularity::semiregular_only;
    return c;
  });

  dep_check(ctx != nullptr, "quotient.clique_blocks_not_cover", [ctx, params, p, n] {
    CheckResult c;
    // Partition into <a>-cosets: the vertex sets of one clique family.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < n; ++v) {
      if (seen[v]) continue;
      std::vector<int> block;
      const GroupElement g = from_index(v, params);
      for (int m = 0; m < p; ++m) {
        const int w =
            to_index(multiply(power(GroupElement{1, 0, 0}, m, params), g, params), params);
        block.push_back(w);
        seen[w] = 1;
      }
      std::sort(block.begin(), block.end());
      blocks.push_back(std::move(block));
    }
    const QuotientResult q = quotient_graph(ctx->gamma, blocks);
    const CoverCheck cc = is_normal_cover(ctx->gamma, q);
    c.expected = ordered_json{{"covers", false}};
    c.actual = ordered_json{{"blocks", q.graph.n},
                            {"covers", cc.ok},
                            {"intra_block_edges", q.intra_block_edges.size()}};
    if (!cc.ok) c.witness = ordered_json{{"reason", cc.reason}, {"where", cc.witness}};
    c.pass = !cc.ok;
    return c;
  });

  {
    const std::string name = "quotient.translation_image_normality";
    if (!ctx || !quot) {
      r.skip(name, "dependency unavailable", /*informational=*/true);
    } else if (p > 5) {
      r.skip(name, "quotient automorphism search runs at p <= 5 only", /*informational=*/true);
    } else {
      r.check(
          name,
          [ctx, quot, params, p] {
            CheckResult c;
            auto block_perm = [&](const GroupElement& g) {
              const Permutation vp = right_translation(g, params);
              std::vector<int> img(quot->blocks.size());
              for (std::size_t b = 0; b < quot->blocks.size(); ++b) {
                const int tgt = quot->block_of[vp(quot->blocks[b][0])];
                for (int v : quot->blocks[b]) {
                  internal_check(quot->block_of[vp(v)] == tgt,
                                 "translation does not permute the blocks");
                }
                img[b] = tgt;
              }
              return Permutation(std::move(img));
            };
            const PermGroup timg = PermGroup::generated_by(
                {block_perm(GroupElement{1, 0, 0}), block_perm(GroupElement{0, 1, 0})});
            const PermGroup qaut = automorphism_group(quot->graph);
            const bool transitive =
                orbit(timg, 0).size() == static_cast<std::size_t>(p) * p;
            const bool normal = is_normal(timg, qaut);
            c.expected = ordered_json{{"induced_order", p * p}, {"block_transitive", true}};
            c.actual = ordered_json{{"induced_order", timg.order()},
                                    {"block_transitive", transitive},
                                    {"quotient_aut_order", qaut.order()},
                                    {"normal_in_quotient_aut", normal}};
            c.pass = timg.order() == static_cast<std::uint64_t>(p) * p && transitive;
            return c;
          },
          /*informational=*/true);
    }
  }

  // ---- cross-cutting property checks --------------------------------------

  dep_check(ctx != nullptr, "props.orbit_stabilizer",
            [ctx, aut, induced_n, sigma_aut] {
              CheckResult c;
              std::vector<std::pair<std::string, const PermGroup*>> groups;
              groups.emplace_back("translations", &ctx->translations);
              groups.emplace_back("connection_auts", &ctx->aut_gs);
              groups.emplace_back("normalizer", &ctx->normalizer);
              if (aut) groups.emplace_back("gamma_aut", aut.get());
              if (induced_n) groups.emplace_back("sigma_normalizer_action", induced_n.get());
              if (sigma_aut) groups.emplace_back("sigma_aut", sigma_aut.get());
              bool all_ok = true;
              ordered_json detail = ordered_json::array();
              for (const auto& [gname, gp] : groups) {
                const std::vector<Permutation>& elems = gp->elements();
                const int deg = gp->degree();
                std::vector<std::uint64_t> fixers(static_cast<std::size_t>(deg), 0);
                for (const Permutation& e : elems) {
                  for (int x = 0; x < deg; ++x) {
                    if (e(x) == x) ++fixers[x];
                  }
                }
                std::vector<std::uint64_t> orbit_size(static_cast<std::size_t>(deg), 0);
                for (const std::vector<int>& orb : point_orbits(*gp)) {
                  for (int x : orb) orbit_size[x] = orb.size();
                }
                bool ok = true;
                for (int x = 0; x < deg; ++x) {
                  if (orbit_size[x] * fixers[x] != gp->order()) ok = false;
                }
                all_ok = all_ok && ok;
                detail.push_back(ordered_json{
                    {"group", gname}, {"order", gp->order()}, {"identity_holds", ok}});
              }
              c.expected = ordered_json{{"orbit_times_stabilizer_is_order", true}};
              c.actual = ordered_json{{"groups", detail}};
              c.pass = all_ok;
              return c;
            });

  dep_check(ctx != nullptr && ident != nullptr && induced_n != nullptr,
            "props.transitivity_profile", [ctx, ident, induced_n, n] {
              CheckResult c;
              const std::vector<int> dm = kernels::distance_matrix(ctx->gamma);
              const std::optional<int> diam = diameter(ctx->gamma);
              ordered_json gamma_counts = ordered_json::array();
              std::vector<std::size_t> counts;
              for (int d = 1; diam && d <= *diam; ++d) {
                std::vector<std::pair<int, int>> pairs;
                for (int u = 0; u < n; ++u) {
                  for (int v = 0; v < n; ++v) {
                    if (dm[static_cast<std::size_t>(u) * n + v] == d) pairs.emplace_back(u, v);
                  }
                }
                const std::size_t cnt = orbits_on_ordered_pairs(ctx->normalizer, pairs).size();
                counts.push_back(cnt);
                gamma_counts.push_back(cnt);
              }
              ordered_json sigma_flags = ordered_json::array();
              bool sigma_all = true;
              for (int s = 1; s <= 3; ++s) {
                const bool f =
                    check_s_arc_transitive(ident->cosets.graph, *induced_n, s).pass;
                sigma_flags.push_back(f);
                sigma_all = sigma_all && f;
              }
              const bool gamma_profile = counts.size() >= 3 && counts[0] == 1 &&
                                         counts[1] == 1 && counts[2] >= 2;
              c.expected = ordered_json{
                  {"gamma_pair_orbits_by_distance", "1, 1, then at least 2"},
                  {"sigma_arc_transitive_up_to_3", true}};
              c.actual = ordered_json{{"gamma_pair_orbits_by_distance", gamma_counts},
                                      {"sigma_arc_transitive_flags", sigma_flags}};
              c.pass = gamma_profile && sigma_all;
              return c;
            });

  dep_check(ctx != nullptr && ident != nullptr && quot != nullptr,
            "props.rebuild_deterministic", [ctx, ident, quot, params] {
              CheckResult c;
              const Graph gamma2 = build_cayley_graph(params);
              const CosetGraph sigma2 = build_coset_graph(params);
              const QuotientResult quot2 =
                  quotient_graph(gamma2, center_blocks(params));
              const bool gamma_same = to_json(ctx->gamma) == to_json(gamma2) &&
                                      to_dot(ctx->gamma, "gamma") == to_dot(gamma2, "gamma");
              const bool sigma_same =
                  to_json(ident->cosets.graph) == to_json(sigma2.graph);
              const bool quot_same = to_json(quot->graph) == to_json(quot2.graph);
              c.expected = ordered_json{
                  {"gamma_bytes_stable", true}, {"sigma_bytes_stable", true},
                  {"quotient_bytes_stable", true}};
              c.actual = ordered_json{{"gamma_bytes_stable", gamma_same},
                                      {"sigma_bytes_stable", sigma_same},
                                      {"quotient_bytes_stable", quot_same}};
              c.pass = gamma_same && sigma_same && quot_same;
              return c;
            });

  dep_check(ctx != nullptr, "props.kernel_equivalence", [ctx, v_ac, n] {
    CheckResult c;
    const Graph& g = ctx->gamma;
    const bool dm_eq = kernels::serial::distance_matrix(g) == kernels::par::distance_matrix(g);

    const std::vector<int> arcs = s_arcs(g, 2);
    const auto to_s = kernels::serial::tuple_orbits(arcs, 3, ctx->normalizer.generators());
    const auto to_p = kernels::par::tuple_orbits(arcs, 3, ctx->normalizer.generators());
    const bool orbits_eq = to_s.orbits == to_p.orbits && to_s.orbit_of == to_p.orbit_of;

    bool broken_eq = true;
    for (const Permutation& gen : ctx->normalizer.generators()) {
      if (kernels::serial::first_broken_edge(g, gen) != kernels::par::first_broken_edge(g, gen)) {
        broken_eq = false;
      }
    }
    std::vector<int> swapped(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) swapped[v] = v;
    std::swap(swapped[0], swapped[v_ac]);
    const Permutation not_aut(std::move(swapped));
    const int b_s = kernels::serial::first_broken_edge(g, not_aut);
    const int b_p = kernels::par::first_broken_edge(g, not_aut);
    broken_eq = broken_eq && b_s == b_p && b_s >= 0;

    const std::vector<Permutation> cl_s =
        kernels::serial::generate_group(ctx->normalizer.generators(), closure_bound());
    const std::vector<Permutation> cl_p =
        kernels::par::generate_group(ctx->normalizer.generators(), closure_bound());
    const bool closure_eq = cl_s == cl_p;

    c.expected = ordered_json{{"distance_matrix_equal", true},
                              {"tuple_orbits_equal", true},
                              {"first_broken_edge_equal", true},
                              {"closure_sequence_equal", true}};
    c.actual = ordered_json{{"distance_matrix_equal", dm_eq},
                            {"tuple_orbits_equal", orbits_eq},
                            {"first_broken_edge_equal", broken_eq},
                            {"closure_sequence_equal", closure_eq},
                            {"closure_size", cl_s.size()}};
    c.pass = dm_eq && orbits_eq && broken_eq && closure_eq;
    return c;
  });

  rep.checks = r.take();
  rep.overall_pass = true;
  for (const TimedCheck& tc : rep.checks) {
    if (tc.informational) continue;
    if (tc.skipped) {
      if (tc.skip_reason.rfind(kTimeoutPrefix, 0) == 0) rep.overall_pass = false;
      continue;
    }
    if (!tc.result.pass) rep.overall_pass = false;
  }
  return rep;
}

ordered_json VerificationReport::to_json() const {
  ordered_json doc;
  doc["schema_version"] = schema_version;
  doc["tool_version"] = tool_version;
  doc["p"] = p;
  doc["t"] = t;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t informational = 0;
  for (const TimedCheck& tc : checks) {
    if (tc.skipped) {
      ++skipped;
    } else if (tc.informational) {
      ++informational;
    } else if (tc.result.pass) {
      ++passed;
    } else {
      ++failed;
    }
  }
  doc["overall_pass"] = overall_pass;
  doc["summary"] = ordered_json{{"checks", checks.size()},
                                {"passed", passed},
                                {"failed", failed},
                                {"skipped", skipped},
                                {"informational", informational}};
  ordered_json arr = ordered_json::array();
  for (const TimedCheck& tc : checks) {
    ordered_json e;
    e["name"] = tc.result.name;
    e["status"] = tc.skipped ? "skip" : (tc.result.pass ? "pass" : "fail");
    if (tc.informational) e["informational"] = true;
    if (!tc.result.expected.is_null()) e["expected"] = tc.result.expected;
    if (!tc.result.actual.is_null()) e["actual"] = tc.result.actual;
    if (!tc.result.witness.is_null()) e["witness"] = tc.result.witness;
    if (tc.skipped) e["skip_reason"] = tc.skip_reason;
    e["time_ms"] = tc.time_ms;
    arr.push_back(std::move(e));
  }
  doc["checks"] = std::move(arr);
  return doc;
}

ordered_json VerificationReport::to_json_without_timing() const {
  ordered_json doc = to_json();
  for (ordered_json& e : doc["checks"]) e["time_ms"] = 0.0;
  return doc;
}

std::string export_graph(int p, ExportGraph which, ExportFormat format) {
  const GroupParams params = make_group_params(p);
  Graph g;
  std::string name;
  switch (which) {
    case ExportGraph::gamma:
      g = build_cayley_graph(params);
      name = "gamma";
      break;
    case ExportGraph::sigma:
      g = build_coset_graph(params).graph;
      name = "sigma";
      break;
    case ExportGraph::quotient:
      g = quotient_graph(build_cayley_graph(params), center_blocks(params)).graph;
      name = "quotient";
      break;
  }
  return format == ExportFormat::json ? to_json(g) : to_dot(g, name);
}

}  // namespace p3cay
