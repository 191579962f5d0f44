#pragma once

// Brute-force ground truth on small permutation groups: the full subgroup
// lattice, its Möbius function, literal counts of generating tuples, and the
// checks tying them together.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "reemobius/arith.hpp"
#include "reemobius/permutation.hpp"
#include "reemobius/target.hpp"

namespace reemobius::oracle {

using ElementSet = boost::dynamic_bitset<>;

inline constexpr std::size_t kDefaultBound = 600;

/// Subgroup generated by the given element indices.
inline ElementSet generate(const FiniteGroup& G,
                           const std::vector<std::uint32_t>& gens) {
  ElementSet s(G.order());
  s.set(0);
  std::vector<std::uint32_t> queue{0};
  for (std::size_t next = 0; next < queue.size(); ++next) {
    const std::uint32_t x = queue[next];
    for (std::uint32_t g : gens) {
      const std::uint32_t y = G.mul(x, g);
      if (!s.test(y)) {
        s.set(y);
        queue.push_back(y);
      }
    }
  }
  return s;
}

struct SubgroupLattice {
  std::size_t group_order = 1;
  std::vector<ElementSet> nodes;  // ascending by order; front trivial, back G
  std::vector<std::vector<std::size_t>> above;  // proper supergroups per node
  std::vector<long long> mu;                    // empty until lattice_mobius

  std::size_t size() const noexcept { return nodes.size(); }
  std::size_t full() const noexcept { return nodes.size() - 1; }
  std::size_t order_of(std::size_t i) const { return nodes[i].count(); }
  bool leq(std::size_t a, std::size_t b) const {
    return nodes[a].is_subset_of(nodes[b]);
  }

  std::size_t find(const ElementSet& s) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] == s) return i;
    }
    return npos;
  }

  std::vector<std::size_t> maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      if (above[i].size() == 1) out.push_back(i);
    }
    return out;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// All subgroups: seeded with the cyclic subgroups, then closed under
/// joining with cyclic subgroups until nothing new appears.
inline SubgroupLattice enumerate_subgroups(const FiniteGroup& G,
                                           std::size_t bound = kDefaultBound) {
  if (G.order() > bound) {
    throw std::length_error("enumerate_subgroups: group order " +
                            std::to_string(G.order()) + " exceeds bound " +
                            std::to_string(bound));
  }
  const std::size_t N = G.order();
  std::set<ElementSet> found;
  std::vector<ElementSet> cyclic;
  std::vector<std::uint32_t> cyclic_gen;
  for (std::uint32_t g = 0; g < N; ++g) {
    ElementSet c = generate(G, {g});
    if (found.insert(c).second) {
      cyclic.push_back(c);
      cyclic_gen.push_back(g);
    }
  }
  // Each subgroup is kept with a short generating list so joins stay cheap.
  std::vector<std::pair<ElementSet, std::vector<std::uint32_t>>> work;
  for (std::size_t c = 0; c < cyclic.size(); ++c) {
    work.push_back({cyclic[c], {cyclic_gen[c]}});
  }
  for (std::size_t next = 0; next < work.size(); ++next) {
    const ElementSet current = work[next].first;
    const std::vector<std::uint32_t> gens = work[next].second;
    for (std::size_t c = 0; c < cyclic.size(); ++c) {
      if (cyclic[c].is_subset_of(current)) continue;
      std::vector<std::uint32_t> joined_gens = gens;
      joined_gens.push_back(cyclic_gen[c]);
      ElementSet joined = generate(G, joined_gens);
      if (found.insert(joined).second) {
        work.push_back({std::move(joined), std::move(joined_gens)});
      }
    }
  }

  SubgroupLattice lat;
  lat.group_order = N;
  lat.nodes.assign(found.begin(), found.end());
  std::stable_sort(lat.nodes.begin(), lat.nodes.end(),
                   [](const ElementSet& a, const ElementSet& b) {
                     return a.count() < b.count();
                   });
  lat.above.resize(lat.nodes.size());
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < lat.nodes.size(); ++j) {
      if (lat.nodes[j].count() > lat.nodes[i].count() &&
          lat.nodes[i].is_subset_of(lat.nodes[j])) {
        lat.above[i].push_back(j);
      }
    }
  }
  return lat;
}

/// mu(G) = 1 and mu(H) = −Σ_{K ⊋ H} mu(K).
inline SubgroupLattice lattice_mobius(SubgroupLattice lat) {
  lat.mu.assign(lat.nodes.size(), 0);
  for (std::size_t i = lat.nodes.size(); i-- > 0;) {
    if (i == lat.full()) {
      lat.mu[i] = 1;
      continue;
    }
    long long s = 0;
    for (std::size_t j : lat.above[i]) s += lat.mu[j];
    lat.mu[i] = -s;
  }
  return lat;
}

/// Elements of `node` of order exactly `order` (0 means all elements).
inline Natural count_of_order(const FiniteGroup& G, const ElementSet& node,
                              unsigned order) {
  if (order == 0) return Natural(node.count());
  std::uint64_t c = 0;
  for (auto i = node.find_first(); i != ElementSet::npos;
       i = node.find_next(i)) {
    if (G.element_order(static_cast<std::uint32_t>(i)) == order) ++c;
  }
  return c;
}

inline Natural node_sigma(const FiniteGroup& G, const ElementSet& node,
                          TargetGroup target) {
  Natural s = 1;
  for (unsigned o : target_orders(target)) s *= count_of_order(G, node, o);
  return s;
}

/// Literal count of tuples with the target's element orders that generate G.
inline Natural brute_force_phi(const FiniteGroup& G, TargetGroup target,
                               std::size_t bound = kDefaultBound) {
  if (G.order() > bound) {
    throw std::length_error("brute_force_phi: group order exceeds bound");
  }
  const std::vector<unsigned> orders = target_orders(target);
  if (orders.size() > 3) {
    throw std::invalid_argument("brute_force_phi: arity above 3");
  }
  const std::uint32_t N = static_cast<std::uint32_t>(G.order());
  std::vector<std::vector<std::uint32_t>> choices(orders.size());
  for (std::size_t k = 0; k < orders.size(); ++k) {
    for (std::uint32_t x = 0; x < N; ++x) {
      if (orders[k] == 0 || G.element_order(x) == orders[k]) {
        choices[k].push_back(x);
      }
    }
  }

  // Reused scratch space for the closure test.
  std::vector<std::uint32_t> stamp(N, 0);
  std::uint32_t epoch = 0;
  std::vector<std::uint32_t> queue;
  queue.reserve(N);
  auto generates = [&](const std::vector<std::uint32_t>& gens) {
    ++epoch;
    queue.clear();
    queue.push_back(0);
    stamp[0] = epoch;
    for (std::size_t next = 0; next < queue.size(); ++next) {
      for (std::uint32_t g : gens) {
        const std::uint32_t y = G.mul(queue[next], g);
        if (stamp[y] != epoch) {
          stamp[y] = epoch;
          queue.push_back(y);
        }
      }
    }
    return queue.size() == N;
  };

  std::uint64_t count = 0;
  std::vector<std::uint32_t> tuple(orders.size());
  std::vector<std::size_t> pos(orders.size(), 0);
  for (const auto& c : choices) {
    if (c.empty()) return 0;
  }
  for (;;) {
    for (std::size_t k = 0; k < orders.size(); ++k) tuple[k] = choices[k][pos[k]];
    if (generates(tuple)) ++count;
    std::size_t k = orders.size();
    while (k > 0) {
      --k;
      if (++pos[k] < choices[k].size()) break;
      pos[k] = 0;
      if (k == 0) return count;
    }
  }
}

/// Σ mu(H) σ(H) over the lattice.
inline Integer lattice_inversion_sum(const FiniteGroup& G,
                                     const SubgroupLattice& lat,
                                     TargetGroup target) {
  if (lat.mu.size() != lat.nodes.size()) {
    throw std::invalid_argument("lattice_inversion_sum: mu not computed");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.mu[i] == 0) continue;
    s += Integer(lat.mu[i]) * node_sigma(G, lat.nodes[i], target).value();
  }
  return s;
}

struct InversionCheck {
  Integer inversion_sum;
  Natural brute_force;
  bool agree = false;
};

inline InversionCheck verify_hall_inversion(const FiniteGroup& G,
                                            const SubgroupLattice& lat,
                                            TargetGroup target,
                                            std::size_t bound = kDefaultBound) {
  InversionCheck c;
  c.inversion_sum = lattice_inversion_sum(G, lat, target);
  c.brute_force = brute_force_phi(G, target, bound);
  c.agree = c.inversion_sum == c.brute_force.value();
  return c;
}

inline InversionCheck verify_hall_inversion(const FiniteGroup& G,
                                            TargetGroup target,
                                            std::size_t bound = kDefaultBound) {
  return verify_hall_inversion(
      G, lattice_mobius(enumerate_subgroups(G, bound)), target, bound);
}

/// Every node with mu != 0 is G or an intersection of maximal subgroups.
inline bool verify_maximal_intersection(const SubgroupLattice& lat) {
  if (lat.mu.size() != lat.nodes.size()) {
    throw std::invalid_argument("verify_maximal_intersection: mu not computed");
  }
  const std::vector<std::size_t> maxes = lat.maximal();
  std::set<ElementSet> meets;
  std::vector<ElementSet> work;
  for (std::size_t m : maxes) {
    if (meets.insert(lat.nodes[m]).second) work.push_back(lat.nodes[m]);
  }
  for (std::size_t next = 0; next < work.size(); ++next) {
    const ElementSet current = work[next];
    for (std::size_t m : maxes) {
      ElementSet meet = current & lat.nodes[m];
      if (meets.insert(meet).second) work.push_back(std::move(meet));
    }
  }
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.mu[i] != 0 && i != lat.full() && !meets.contains(lat.nodes[i])) {
      return false;
    }
  }
  return true;
}

/// g H g^{-1} as an element set.
inline ElementSet conjugate(const FiniteGroup& G, const ElementSet& node,
                            std::uint32_t g) {
  ElementSet out(G.order());
  const std::uint32_t gi = G.inv(g);
  for (auto i = node.find_first(); i != ElementSet::npos;
       i = node.find_next(i)) {
    out.set(G.mul(G.mul(g, static_cast<std::uint32_t>(i)), gi));
  }
  return out;
}

}  // namespace reemobius::oracle
