#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "psig/errors.hpp"
#include "psig/group.hpp"

namespace psig {

inline constexpr std::uint64_t kIsomorphismOrderCap = 64;

namespace detail {

/// Index-space view of a small group: multiplication table plus element
/// orders.  Degree and concrete point sets are abstracted away.
struct MultTable {
  std::size_t n = 0;
  std::vector<std::vector<std::uint8_t>> product;  // product[i][j] = index of e_i * e_j
  std::vector<std::uint64_t> order;                // element orders
  std::size_t identity = 0;

  explicit MultTable(const PermGroup& g) : n(g.order()) {
    const auto& els = g.elements();
    auto index_of = [&](const Permutation& p) {
      return static_cast<std::uint8_t>(
          std::lower_bound(els.begin(), els.end(), p) - els.begin());
    };
    product.assign(n, std::vector<std::uint8_t>(n));
    order.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      order[i] = els[i].order();
      if (els[i].is_identity()) identity = i;
      for (std::size_t j = 0; j < n; ++j)
        product[i][j] = index_of(compose(els[i], els[j]));
    }
  }

  /// Greedy generating sequence: append any element outside the closure
  /// of the ones picked so far.
  std::vector<std::size_t> generating_sequence() const {
    std::vector<std::size_t> gens;
    std::vector<bool> in_closure(n, false);
    auto close = [&]() {
      std::vector<std::size_t> frontier;
      std::fill(in_closure.begin(), in_closure.end(), false);
      in_closure[identity] = true;
      frontier.push_back(identity);
      while (!frontier.empty()) {
        std::size_t x = frontier.back();
        frontier.pop_back();
        for (std::size_t g : gens) {
          std::size_t y = product[x][g];
          if (!in_closure[y]) {
            in_closure[y] = true;
            frontier.push_back(y);
          }
        }
      }
    };
    close();
    for (std::size_t i = 0; i < n; ++i) {
      if (in_closure[i]) continue;
      gens.push_back(i);
      close();
    }
    return gens;
  }
};

/// Checks whether mapping the chosen generators of A to `images` in B
/// extends to an isomorphism of the generated subgroups.  Follows the
/// Cayley graph of <gens>, assigning images edge by edge; any revisited
/// element must agree, which verifies every defining relation.
inline bool extends_to_isomorphism(const MultTable& a, const MultTable& b,
                                   const std::vector<std::size_t>& gens,
                                   const std::vector<std::size_t>& images,
                                   std::size_t* subgroup_size = nullptr) {
  std::vector<int> image_of(a.n, -1);
  std::vector<bool> image_used(b.n, false);
  image_of[a.identity] = static_cast<int>(b.identity);
  image_used[b.identity] = true;
  std::vector<std::size_t> frontier{a.identity};
  std::size_t visited = 1;
  while (!frontier.empty()) {
    std::size_t x = frontier.back();
    frontier.pop_back();
    for (std::size_t t = 0; t < gens.size(); ++t) {
      std::size_t y = a.product[x][gens[t]];
      std::size_t image =
          b.product[static_cast<std::size_t>(image_of[x])][images[t]];
      if (image_of[y] < 0) {
        if (image_used[image]) return false;  // not injective
        image_of[y] = static_cast<int>(image);
        image_used[image] = true;
        frontier.push_back(y);
        ++visited;
      } else if (image_of[y] != static_cast<int>(image)) {
        return false;  // relation broken
      }
    }
  }
  if (subgroup_size) *subgroup_size = visited;
  return true;
}

inline bool search_isomorphism(const MultTable& a, const MultTable& b,
                               const std::vector<std::size_t>& gens,
                               std::vector<std::size_t>& images, std::size_t depth) {
  if (depth == gens.size()) {
    std::size_t covered = 0;
    return extends_to_isomorphism(a, b, gens, images, &covered) && covered == a.n;
  }
  for (std::size_t candidate = 0; candidate < b.n; ++candidate) {
    if (b.order[candidate] != a.order[gens[depth]]) continue;
    images[depth] = candidate;
    std::vector<std::size_t> prefix_gens(gens.begin(), gens.begin() + depth + 1);
    std::vector<std::size_t> prefix_images(images.begin(), images.begin() + depth + 1);
    if (!extends_to_isomorphism(a, b, prefix_gens, prefix_images)) continue;
    if (search_isomorphism(a, b, gens, images, depth + 1)) return true;
  }
  return false;
}

}  // namespace detail

/// Invariant prefilter (order, order profile, abelianness, center size,
/// derived-series orders) followed by a backtracking generator-image
/// search.  Capped at order 64; only catalog-scale groups are in scope.
inline bool is_isomorphic(const PermGroup& g, const PermGroup& h) {
  if (g.order() > kIsomorphismOrderCap || h.order() > kIsomorphismOrderCap)
    throw OrderCapExceeded("is_isomorphic: order cap is " +
                           std::to_string(kIsomorphismOrderCap));
  if (g.order() != h.order()) return false;
  if (order_profile(g) != order_profile(h)) return false;
  if (is_abelian(g) != is_abelian(h)) return false;
  if (center(g).order() != center(h).order()) return false;
  auto series_orders = [](const PermGroup& grp) {
    std::vector<std::uint64_t> orders;
    for (const PermGroup& term : derived_series(grp)) orders.push_back(term.order());
    return orders;
  };
  if (series_orders(g) != series_orders(h)) return false;

  detail::MultTable a(g);
  detail::MultTable b(h);
  std::vector<std::size_t> gens = a.generating_sequence();
  if (gens.empty()) return true;  // both trivial
  std::vector<std::size_t> images(gens.size());
  return detail::search_isomorphism(a, b, gens, images, 0);
}

}  // namespace psig
