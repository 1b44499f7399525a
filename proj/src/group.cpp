#include "p3cay/group.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace p3cay {

namespace {

int mod(long long x, int p) {
  long long r = x % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

}  // namespace

bool is_odd_prime(int n) {
  if (n < 3 || n % 2 == 0) return false;
  for (int d = 3; static_cast<long long>(d) * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_primitive_root(int t, int p) {
  if (t <= 0 || t >= p) return false;
  // t generates (Z/pZ)^* iff its powers pass through p-1 distinct values.
  int seen = 0;
  long long x = 1;
  do {
    x = (x * t) % p;
    ++seen;
  } while (x != 1 && seen <= p);
  return seen == p - 1;
}

int smallest_primitive_root(int p) {
  for (int t = 2; t < p; ++t) {
    if (is_primitive_root(t, p)) return t;
  }
  throw ConfigError("no primitive root found mod " + std::to_string(p));
}

GroupParams make_group_params(int p) {
  if (!is_odd_prime(p)) {
    throw ConfigError("p must be an odd prime, got " + std::to_string(p));
  }
  return GroupParams{p, smallest_primitive_root(p)};
}

GroupParams make_group_params(int p, int t) {
  if (!is_odd_prime(p)) {
    throw ConfigError("p must be an odd prime, got " + std::to_string(p));
  }
  if (!is_primitive_root(t, p)) {
    throw ConfigError("t = " + std::to_string(t) + " is not a primitive root mod " +
                      std::to_string(p));
  }
  return GroupParams{p, t};
}

int to_index(const GroupElement& g, const GroupParams& params) {
  const int p = params.p;
  if (g.i < 0 || g.i >= p || g.j < 0 || g.j >= p || g.k < 0 || g.k >= p) {
    throw OutOfRange("element coordinates not reduced mod p");
  }
  return (g.i * p + g.j) * p + g.k;
}

GroupElement from_index(int v, const GroupParams& params) {
  const int p = params.p;
  if (v < 0 || v >= p * p * p) {
    throw OutOfRange("element index " + std::to_string(v) + " out of range");
  }
  return GroupElement{v / (p * p), (v / p) % p, v % p};
}

// Collecting a^i2 past b^j1 costs one factor c^-1 per swapped pair, which is
// where the -i2*j1 in the third coordinate comes from.
GroupElement multiply(const GroupElement& g1, const GroupElement& g2, const GroupParams& params) {
  const int p = params.p;
  return GroupElement{
      mod(g1.i + g2.i, p),
      mod(g1.j + g2.j, p),
      mod(static_cast<long long>(g1.k) + g2.k - static_cast<long long>(g2.i) * g1.j, p),
  };
}

GroupElement inverse(const GroupElement& g, const GroupParams& params) {
  const int p = params.p;
  return GroupElement{mod(-g.i, p), mod(-g.j, p),
                      mod(-static_cast<long long>(g.k) - static_cast<long long>(g.i) * g.j, p)};
}

GroupElement commutator(const GroupElement& g, const GroupElement& h, const GroupParams& params) {
  GroupElement r = multiply(inverse(g, params), inverse(h, params), params);
  r = multiply(r, g, params);
  return multiply(r, h, params);
}

GroupElement power(const GroupElement& g, int e, const GroupParams& params) {
  if (e < 0) throw OutOfRange("power expects a non-negative exponent");
  GroupElement r = kIdentity;
  for (int n = 0; n < e; ++n) r = multiply(r, g, params);
  return r;
}

std::vector<GroupElement> all_elements(const GroupParams& params) {
  const int n = params.p * params.p * params.p;
  std::vector<GroupElement> out;
  out.reserve(n);
  for (int v = 0; v < n; ++v) out.push_back(from_index(v, params));
  return out;
}

std::vector<GroupElement> connection_set(const GroupParams& params) {
  std::vector<GroupElement> s;
  for (int e = 1; e < params.p; ++e) {
    s.push_back(GroupElement{e, 0, 0});
    s.push_back(GroupElement{0, e, 0});
  }
  std::sort(s.begin(), s.end(), [&](const GroupElement& x, const GroupElement& y) {
    return to_index(x, params) < to_index(y, params);
  });
  return s;
}

std::vector<GroupElement> generated_subgroup(const std::vector<GroupElement>& gens,
                                             const GroupParams& params, std::size_t bound) {
  const int n = params.p * params.p * params.p;
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::size_t count = 1;
  std::vector<GroupElement> frontier{kIdentity};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const GroupElement& g : frontier) {
      for (const GroupElement& s : gens) {
        GroupElement h = multiply(g, s, params);
        int v = to_index(h, params);
        if (!seen[v]) {
          seen[v] = 1;
          if (++count > bound) {
            throw BoundExceeded("subgroup closure exceeded bound " + std::to_string(bound));
          }
          next.push_back(h);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<GroupElement> out;
  out.reserve(count);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) out.push_back(from_index(v, params));
  }
  return out;
}

GroupAutomorphism GroupAutomorphism::identity(const GroupParams& params) {
  return from_images(GroupElement{1, 0, 0}, GroupElement{0, 1, 0}, params);
}

GroupAutomorphism GroupAutomorphism::from_images(const GroupElement& img_a,
                                                 const GroupElement& img_b,
                                                 const GroupParams& params) {
  auto phi = try_from_images(img_a, img_b, params);
  if (!phi) throw InternalInvariant("generator images do not define an automorphism");
  return *phi;
}

std::optional<GroupAutomorphism> GroupAutomorphism::try_from_images(const GroupElement& img_a,
                                                                    const GroupElement& img_b,
                                                                    const GroupParams& params) {
  const int p = params.p;
  const GroupElement x = img_a;
  const GroupElement y = img_b;
  const GroupElement z = commutator(x, y, params);

  // The defining relations must hold for the images. By von Dyck's theorem the
  // assignment a -> x, b -> y then extends to an endomorphism with c -> z.
  if (power(x, p, params) != kIdentity) return std::nullopt;
  if (power(y, p, params) != kIdentity) return std::nullopt;
  if (power(z, p, params) != kIdentity) return std::nullopt;
  if (commutator(z, x, params) != kIdentity) return std::nullopt;
  if (commutator(z, y, params) != kIdentity) return std::nullopt;

  // Surjective (hence bijective, the group is finite) iff x and y generate.
  std::size_t order = generated_subgroup({x, y}, params, static_cast<std::size_t>(p) * p * p).size();
  if (order != static_cast<std::size_t>(p) * p * p) return std::nullopt;

  GroupAutomorphism phi(x, y, z);

  // Spot check of the homomorphism law on a deterministic sample.
  const int n = p * p * p;
  for (int step = 0; step < 16; ++step) {
    GroupElement g = from_index((step * 37 + 11) % n, params);
    GroupElement h = from_index((step * 53 + 29) % n, params);
    GroupElement lhs = phi.apply(multiply(g, h, params), params);
    GroupElement rhs = multiply(phi.apply(g, params), phi.apply(h, params), params);
    if (lhs != rhs) return std::nullopt;
  }
  return phi;
}

GroupElement GroupAutomorphism::apply(const GroupElement& g, const GroupParams& params) const {
  GroupElement r = power(img_a_, g.i, params);
  r = multiply(r, power(img_b_, g.j, params), params);
  return multiply(r, power(img_c_, g.k, params), params);
}

std::vector<int> GroupAutomorphism::index_table(const GroupParams& params) const {
  const int p = params.p;
  const int n = p * p * p;
  // Power tables keep the full map at p^3 multiplications instead of p^4.
  std::vector<GroupElement> pa(p), pb(p), pc(p);
  for (int e = 0; e < p; ++e) {
    pa[e] = power(img_a_, e, params);
    pb[e] = power(img_b_, e, params);
    pc[e] = power(img_c_, e, params);
  }
  std::vector<int> table(n);
  for (int v = 0; v < n; ++v) {
    GroupElement g = from_index(v, params);
    GroupElement img = multiply(multiply(pa[g.i], pb[g.j], params), pc[g.k], params);
    table[v] = to_index(img, params);
  }
  return table;
}

bool GroupAutomorphism::preserves(const std::vector<GroupElement>& set,
                                  const GroupParams& params) const {
  std::set<GroupElement> members(set.begin(), set.end());
  for (const GroupElement& g : set) {
    if (!members.contains(apply(g, params))) return false;
  }
  return true;
}

GroupAutomorphism compose(const GroupAutomorphism& first, const GroupAutomorphism& second,
                          const GroupParams& params) {
  return GroupAutomorphism::from_images(second.apply(first.image_a(), params),
                                        second.apply(first.image_b(), params), params);
}

GroupAutomorphism inverse(const GroupAutomorphism& phi, const GroupParams& params) {
  std::vector<int> table = phi.index_table(params);
  std::vector<int> inv(table.size());
  for (std::size_t v = 0; v < table.size(); ++v) inv[table[v]] = static_cast<int>(v);
  GroupElement a{1, 0, 0};
  GroupElement b{0, 1, 0};
  return GroupAutomorphism::from_images(from_index(inv[to_index(a, params)], params),
                                        from_index(inv[to_index(b, params)], params), params);
}

CanonicalAutomorphisms canonical_automorphisms(const GroupParams& params) {
  const int t = params.t;
  return CanonicalAutomorphisms{
      GroupAutomorphism::from_images(GroupElement{t, 0, 0}, GroupElement{0, 1, 0}, params),
      GroupAutomorphism::from_images(GroupElement{1, 0, 0}, GroupElement{0, t, 0}, params),
      GroupAutomorphism::from_images(GroupElement{0, 1, 0}, GroupElement{1, 0, 0}, params),
  };
}

std::vector<GroupAutomorphism> aut_preserving_connection_set(const GroupParams& params) {
  const std::vector<GroupElement> s = connection_set(params);
  std::vector<GroupAutomorphism> found;
  for (const GroupElement& x : s) {
    for (const GroupElement& y : s) {
      auto phi = GroupAutomorphism::try_from_images(x, y, params);
      if (phi && phi->preserves(s, params)) found.push_back(*phi);
    }
  }
  std::sort(found.begin(), found.end());

  // Closure under composition, checked on generator images alone. The image
  // of c is determined by those of a and b, so the pair identifies the map.
  auto member = [&](const GroupElement& ia, const GroupElement& ib) {
    auto it = std::lower_bound(found.begin(), found.end(), std::pair{ia, ib},
                               [](const GroupAutomorphism& phi, const std::pair<GroupElement, GroupElement>& key) {
                                 return std::pair{phi.image_a(), phi.image_b()} < key;
                               });
    return it != found.end() && it->image_a() == ia && it->image_b() == ib;
  };
  for (const GroupAutomorphism& f : found) {
    for (const GroupAutomorphism& g : found) {
      if (!member(g.apply(f.image_a(), params), g.apply(f.image_b(), params))) {
        throw InternalInvariant("automorphism set not closed under composition");
      }
    }
  }
  return found;
}

std::vector<std::vector<GroupElement>> order_p2_subgroups(const GroupParams& params) {
  const int p = params.p;
  const std::size_t expected = static_cast<std::size_t>(p) * p;
  std::vector<std::vector<GroupElement>> subs;

  auto add = [&](const GroupElement& g, const GroupElement& h) {
    std::vector<GroupElement> sub = generated_subgroup({g, h}, params, expected);
    internal_check(sub.size() == expected, "order-p^2 subgroup has wrong size");
    subs.push_back(std::move(sub));
  };

  add(GroupElement{0, 1, 0}, GroupElement{0, 0, 1});
  for (int i = 0; i < p; ++i) {
    add(GroupElement{1, i, 0}, GroupElement{0, 0, 1});
  }

  for (std::size_t u = 0; u < subs.size(); ++u) {
    for (std::size_t v = u + 1; v < subs.size(); ++v) {
      internal_check(subs[u] != subs[v], "order-p^2 subgroups not distinct");
    }
  }
  return subs;
}

}  // namespace p3cay
