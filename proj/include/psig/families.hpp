#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "psig/group.hpp"
#include "psig/isomorphism.hpp"

namespace psig {

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace detail

/// C_n as the single n-cycle on n points.
inline PermGroup cyclic(std::uint64_t n, std::size_t cap = kDefaultEnumerationCap) {
  if (n == 0) throw std::invalid_argument("cyclic: n must be positive");
  if (n > cap) throw CapExceeded("cyclic: order exceeds enumeration cap");
  std::vector<std::uint32_t> images(n);
  for (std::uint64_t i = 0; i < n; ++i)
    images[i] = static_cast<std::uint32_t>((i + 1) % n);
  return PermGroup::generated({Permutation(std::move(images))},
                              "C" + std::to_string(n), cap);
}

/// G x H acting on the disjoint union of the two domains.
inline PermGroup direct_product(const PermGroup& g, const PermGroup& h,
                                std::size_t cap = kDefaultEnumerationCap) {
  if (g.order() > cap / h.order())
    throw CapExceeded("direct_product: order exceeds enumeration cap");
  std::uint32_t degree = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (const Permutation& p : g.generators()) {
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t i = 0; i < g.degree(); ++i) images[i] = p(i);
    for (std::uint32_t i = 0; i < h.degree(); ++i) images[g.degree() + i] = g.degree() + i;
    gens.push_back(Permutation(std::move(images)));
  }
  for (const Permutation& p : h.generators()) {
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t i = 0; i < g.degree(); ++i) images[i] = i;
    for (std::uint32_t i = 0; i < h.degree(); ++i) images[g.degree() + i] = g.degree() + p(i);
    gens.push_back(Permutation(std::move(images)));
  }
  std::string label = g.label().empty() || h.label().empty()
                          ? ""
                          : g.label() + "x" + h.label();
  PermGroup product = PermGroup::generated(std::move(gens), std::move(label), cap);
  if (product.order() != g.order() * h.order())
    throw std::logic_error("direct_product: unexpected order");
  return product;
}

/// Direct product of cyclic groups of the given orders (each >= 2).
/// An empty list yields the trivial group.
inline PermGroup abelian(const std::vector<std::uint64_t>& factors,
                         std::size_t cap = kDefaultEnumerationCap) {
  for (std::uint64_t f : factors)
    if (f < 2) throw std::invalid_argument("abelian: factors must be >= 2");
  PermGroup result = cyclic(factors.empty() ? 1 : factors.front(), cap);
  for (std::size_t i = 1; i < factors.size(); ++i)
    result = direct_product(result, cyclic(factors[i], cap), cap);
  return result;
}

/// Dihedral group of order two_n on n points (rotation + reflection).
/// dihedral(4) degenerates to C2 x C2.
inline PermGroup dihedral(std::uint64_t two_n, std::size_t cap = kDefaultEnumerationCap) {
  if (two_n < 4 || two_n % 2 != 0)
    throw std::invalid_argument("dihedral: order must be even and >= 4");
  std::string label = "D" + std::to_string(two_n);
  if (two_n == 4) return abelian({2, 2}, cap).with_label(label);
  std::uint64_t n = two_n / 2;
  if (two_n > cap) throw CapExceeded("dihedral: order exceeds enumeration cap");
  std::vector<std::uint32_t> rotation(n), reflection(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    rotation[i] = static_cast<std::uint32_t>((i + 1) % n);
    reflection[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  PermGroup result = PermGroup::generated(
      {Permutation(std::move(rotation)), Permutation(std::move(reflection))}, label, cap);
  if (result.order() != two_n) throw std::logic_error("dihedral: unexpected order");
  return result;
}

/// Dicyclic group of order four_n = 4n via the regular representation of
/// <a, b | a^{2n} = 1, b^2 = a^n, b a b^-1 = a^-1>.  The 2-power cases
/// are the generalized quaternion groups.
inline PermGroup dicyclic(std::uint64_t four_n, std::size_t cap = kDefaultEnumerationCap) {
  if (four_n < 8 || four_n % 4 != 0)
    throw std::invalid_argument("dicyclic: order must be a multiple of 4 and >= 8");
  if (four_n > cap) throw CapExceeded("dicyclic: order exceeds enumeration cap");
  std::uint64_t two_n = four_n / 2;
  std::uint64_t n = four_n / 4;
  std::uint32_t degree = static_cast<std::uint32_t>(four_n);
  auto point = [&](std::uint64_t i, std::uint64_t j) {
    return static_cast<std::uint32_t>(i + two_n * j);
  };
  std::vector<std::uint32_t> a(degree), b(degree);
  for (std::uint64_t i = 0; i < two_n; ++i) {
    a[point(i, 0)] = point((i + 1) % two_n, 0);
    a[point(i, 1)] = point((i + 1) % two_n, 1);
    b[point(i, 0)] = point((two_n - i) % two_n, 1);
    b[point(i, 1)] = point((n + two_n - i) % two_n, 0);
  }
  Permutation pa{std::move(a)};
  Permutation pb{std::move(b)};
  PermGroup result = PermGroup::generated({pa, pb}, "Dic" + std::to_string(four_n), cap);
  // Relation checks: the regular model must realize the presentation.
  Permutation a_n = Permutation::identity(degree);
  for (std::uint64_t i = 0; i < n; ++i) a_n = compose(a_n, pa);
  if (result.order() != four_n || compose(pb, pb) != a_n ||
      compose(compose(pb, pa), pb.inverse()) != pa.inverse())
    throw std::logic_error("dicyclic: presentation relations violated");
  return result;
}

/// Semidihedral group of order two_k = 2^k (k >= 4) via the regular
/// representation of <a, x | a^{2^{k-1}} = x^2 = 1, x a x^-1 = a^{2^{k-2}-1}>.
inline PermGroup semidihedral(std::uint64_t two_k, std::size_t cap = kDefaultEnumerationCap) {
  if (two_k < 16 || (two_k & (two_k - 1)) != 0)
    throw std::invalid_argument("semidihedral: order must be 2^k with k >= 4");
  if (two_k > cap) throw CapExceeded("semidihedral: order exceeds enumeration cap");
  std::uint64_t m = two_k / 2;
  std::uint64_t e = m / 2 - 1;
  std::uint32_t degree = static_cast<std::uint32_t>(two_k);
  auto point = [&](std::uint64_t i, std::uint64_t j) {
    return static_cast<std::uint32_t>(i + m * j);
  };
  std::vector<std::uint32_t> a(degree), x(degree);
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = 0; j < 2; ++j) {
      a[point(i, j)] = point((i + 1) % m, j);
      x[point(i, j)] = point(e * i % m, 1 - j);
    }
  }
  Permutation pa{std::move(a)};
  Permutation px{std::move(x)};
  PermGroup result = PermGroup::generated({pa, px}, "SD" + std::to_string(two_k), cap);
  Permutation a_e = Permutation::identity(degree);
  for (std::uint64_t i = 0; i < e; ++i) a_e = compose(a_e, pa);
  if (result.order() != two_k || !compose(px, px).is_identity() ||
      compose(compose(px, pa), px.inverse()) != a_e)
    throw std::logic_error("semidihedral: presentation relations violated");
  return result;
}

/// Natural symmetric group on n points, 1 <= n <= 6.
inline PermGroup symmetric(std::uint32_t n, std::size_t cap = kDefaultEnumerationCap) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric: n must be in 1..6");
  std::string label = "S" + std::to_string(n);
  if (n == 1) return PermGroup::generated({Permutation::identity(1)}, label, cap);
  std::vector<std::uint32_t> cycle(n);
  for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return PermGroup::generated(
      {Permutation::from_cycles(n, {{0, 1}}), Permutation(std::move(cycle))}, label, cap);
}

/// Natural alternating group on n points, 3 <= n <= 6.
inline PermGroup alternating(std::uint32_t n, std::size_t cap = kDefaultEnumerationCap) {
  if (n < 3 || n > 6) throw std::invalid_argument("alternating: n must be in 3..6");
  std::string label = "A" + std::to_string(n);
  Permutation three_cycle = Permutation::from_cycles(n, {{0, 1, 2}});
  if (n == 3) return PermGroup::generated({three_cycle}, label, cap);
  std::vector<std::uint32_t> big(n);
  if (n % 2 == 1) {
    for (std::uint32_t i = 0; i < n; ++i) big[i] = (i + 1) % n;  // n-cycle, even
  } else {
    big[0] = 0;
    for (std::uint32_t i = 1; i < n; ++i) big[i] = i % (n - 1) + 1;  // (n-1)-cycle
  }
  PermGroup result =
      PermGroup::generated({three_cycle, Permutation(std::move(big))}, label, cap);
  std::uint64_t expected = 1;
  for (std::uint32_t i = 2; i <= n; ++i) expected *= i;
  if (result.order() != expected / 2)
    throw std::logic_error("alternating: unexpected order");
  return result;
}

/// C_m x| C_k with the action x u x^-1 = u^e, acting faithfully on m + k
/// points (the base as an m-cycle, the complement rotating its own block
/// and twisting the base by multiplication with e).
inline PermGroup semidirect_cyclic(std::uint64_t m, std::uint64_t k, std::uint64_t e,
                                   std::size_t cap = kDefaultEnumerationCap) {
  if (m == 0 || k == 0)
    throw std::invalid_argument("semidirect_cyclic: m and k must be positive");
  std::uint64_t e_mod = m == 1 ? 0 : e % m;
  if (m > 1) {
    if (std::gcd(e_mod, m) != 1)
      throw std::invalid_argument("semidirect_cyclic: gcd(e, m) must be 1");
    if (detail::pow_mod(e_mod, k, m) != 1)
      throw std::invalid_argument("semidirect_cyclic: e^k must be 1 mod m");
  }
  if (m > cap / k) throw CapExceeded("semidirect_cyclic: order exceeds enumeration cap");
  std::uint32_t degree = static_cast<std::uint32_t>(m + k);
  std::vector<std::uint32_t> u(degree), x(degree);
  for (std::uint64_t i = 0; i < m; ++i) {
    u[i] = static_cast<std::uint32_t>((i + 1) % m);
    x[i] = static_cast<std::uint32_t>(m == 1 ? 0 : e_mod * i % m);
  }
  for (std::uint64_t j = 0; j < k; ++j) {
    u[m + j] = static_cast<std::uint32_t>(m + j);
    x[m + j] = static_cast<std::uint32_t>(m + (j + 1) % k);
  }
  std::string label = "C" + std::to_string(m) + ":C" + std::to_string(k) + "(e=" +
                      std::to_string(e_mod) + ")";
  PermGroup result = PermGroup::generated(
      {Permutation(std::move(u)), Permutation(std::move(x))}, std::move(label), cap);
  if (result.order() != m * k)
    throw std::logic_error("semidirect_cyclic: unexpected order");
  return result;
}

/// C_{2k} x C_2 for odd k: the equality family of the 7/11 bound.
inline PermGroup prop2_group(std::uint64_t k, std::size_t cap = kDefaultEnumerationCap) {
  if (k % 2 == 0) throw std::invalid_argument("prop2_group: k must be odd");
  return direct_product(cyclic(2 * k, cap), cyclic(2, cap), cap)
      .with_label("C" + std::to_string(2 * k) + "xC2");
}

namespace detail {

/// (C2 x C2) x| C4, the order-4 generator swapping the two base factors.
inline PermGroup c2sq_semi_c4(std::size_t cap) {
  Permutation a = Permutation::from_cycles(8, {{0, 1}});
  Permutation b = Permutation::from_cycles(8, {{2, 3}});
  Permutation c = Permutation::from_cycles(8, {{0, 2}, {1, 3}, {4, 5, 6, 7}});
  PermGroup result = PermGroup::generated({a, b, c}, "C2^2:C4", cap);
  if (result.order() != 16) throw std::logic_error("c2sq_semi_c4: unexpected order");
  return result;
}

/// Central product C4 o D8: (C4 x D8) modulo the diagonal of the two
/// central involutions.
inline PermGroup c4_central_d8(std::size_t cap) {
  PermGroup product = direct_product(cyclic(4, cap), dihedral(8, cap), cap);
  // a^2 on the C4 block, r^2 on the D8 block.
  Permutation z = Permutation::from_cycles(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
  PermGroup diagonal = subgroup_generated(product, {z});
  PermGroup result = quotient_group(product, diagonal, "C4oD8");
  if (result.order() != 16) throw std::logic_error("c4_central_d8: unexpected order");
  return result;
}

}  // namespace detail

/// Builds a family group from a constructor identifier plus parameters;
/// shared by the catalog recipes and the CLI.
inline PermGroup build_family(const std::string& family,
                              const std::vector<std::uint64_t>& params,
                              std::size_t cap = kDefaultEnumerationCap) {
  auto want = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("family " + family + ": expected " +
                                  std::to_string(count) + " parameter(s)");
  };
  if (family == "cyclic") {
    want(1);
    return cyclic(params[0], cap);
  }
  if (family == "abelian") {
    if (params.empty()) throw std::invalid_argument("abelian: needs at least one factor");
    return abelian(params, cap);
  }
  if (family == "dihedral") {
    want(1);
    return dihedral(params[0], cap);
  }
  if (family == "dicyclic") {
    want(1);
    return dicyclic(params[0], cap);
  }
  if (family == "semidihedral") {
    want(1);
    return semidihedral(params[0], cap);
  }
  if (family == "symmetric") {
    want(1);
    return symmetric(static_cast<std::uint32_t>(params[0]), cap);
  }
  if (family == "alternating") {
    want(1);
    return alternating(static_cast<std::uint32_t>(params[0]), cap);
  }
  if (family == "semidirect") {
    want(3);
    return semidirect_cyclic(params[0], params[1], params[2], cap);
  }
  if (family == "prop2") {
    want(1);
    return prop2_group(params[0], cap);
  }
  if (family == "dihedral_x_c2") {
    want(1);
    return direct_product(dihedral(params[0], cap), cyclic(2, cap), cap);
  }
  if (family == "dicyclic_x_c2") {
    want(1);
    return direct_product(dicyclic(params[0], cap), cyclic(2, cap), cap);
  }
  if (family == "c2sq_semi_c4") {
    want(0);
    return detail::c2sq_semi_c4(cap);
  }
  if (family == "c4_central_d8") {
    want(0);
    return detail::c4_central_d8(cap);
  }
  throw std::invalid_argument("unknown family: " + family);
}

struct CatalogRecipe {
  std::string family;
  std::vector<std::uint64_t> params;
};

/// One isomorphism class of each order <= 16; the built-in exhaustive
/// verification universe.
struct CatalogEntry {
  std::string name;
  CatalogRecipe recipe;
  std::uint64_t expected_order;

  PermGroup build(std::size_t cap = kDefaultEnumerationCap) const {
    PermGroup g = build_family(recipe.family, recipe.params, cap).with_label(name);
    if (g.order() != expected_order)
      throw std::logic_error("catalog entry " + name + ": unexpected order");
    return g;
  }
};

inline std::vector<CatalogEntry> small_group_catalog(std::uint64_t max_order = 16) {
  if (max_order > 16)
    throw std::invalid_argument("small_group_catalog: max_order must be <= 16");
  static const std::vector<CatalogEntry> all = {
      {"C1", {"cyclic", {1}}, 1},
      {"C2", {"cyclic", {2}}, 2},
      {"C3", {"cyclic", {3}}, 3},
      {"C4", {"cyclic", {4}}, 4},
      {"C2xC2", {"abelian", {2, 2}}, 4},
      {"C5", {"cyclic", {5}}, 5},
      {"C6", {"cyclic", {6}}, 6},
      {"S3", {"symmetric", {3}}, 6},
      {"C7", {"cyclic", {7}}, 7},
      {"C8", {"cyclic", {8}}, 8},
      {"C4xC2", {"abelian", {4, 2}}, 8},
      {"C2xC2xC2", {"abelian", {2, 2, 2}}, 8},
      {"D8", {"dihedral", {8}}, 8},
      {"Q8", {"dicyclic", {8}}, 8},
      {"C9", {"cyclic", {9}}, 9},
      {"C3xC3", {"abelian", {3, 3}}, 9},
      {"C10", {"cyclic", {10}}, 10},
      {"D10", {"dihedral", {10}}, 10},
      {"C11", {"cyclic", {11}}, 11},
      {"C12", {"cyclic", {12}}, 12},
      {"C6xC2", {"abelian", {6, 2}}, 12},
      {"D12", {"dihedral", {12}}, 12},
      {"A4", {"alternating", {4}}, 12},
      {"Dic12", {"dicyclic", {12}}, 12},
      {"C13", {"cyclic", {13}}, 13},
      {"C14", {"cyclic", {14}}, 14},
      {"D14", {"dihedral", {14}}, 14},
      {"C15", {"cyclic", {15}}, 15},
      {"C16", {"cyclic", {16}}, 16},
      {"C8xC2", {"abelian", {8, 2}}, 16},
      {"C4xC4", {"abelian", {4, 4}}, 16},
      {"C4xC2xC2", {"abelian", {4, 2, 2}}, 16},
      {"C2xC2xC2xC2", {"abelian", {2, 2, 2, 2}}, 16},
      {"D16", {"dihedral", {16}}, 16},
      {"SD16", {"semidihedral", {16}}, 16},
      {"Q16", {"dicyclic", {16}}, 16},
      {"Mod16", {"semidirect", {8, 2, 5}}, 16},
      {"D8xC2", {"dihedral_x_c2", {8}}, 16},
      {"Q8xC2", {"dicyclic_x_c2", {8}}, 16},
      {"C4:C4", {"semidirect", {4, 4, 3}}, 16},
      {"C2^2:C4", {"c2sq_semi_c4", {}}, 16},
      {"C4oD8", {"c4_central_d8", {}}, 16},
  };
  std::vector<CatalogEntry> result;
  for (const CatalogEntry& entry : all)
    if (entry.expected_order <= max_order) result.push_back(entry);
  return result;
}

}  // namespace psig
