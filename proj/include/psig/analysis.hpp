#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psig/arith.hpp"
#include "psig/errors.hpp"
#include "psig/group.hpp"
#include "psig/rational.hpp"

namespace psig {

/// psi(G): the sum of the orders of all elements of G.
inline std::uint64_t psi(const PermGroup& g) {
  std::uint64_t total = 0;
  for (const auto& [order, count] : order_profile(g)) total += order * count;
  return total;
}

/// Per-group record pairing psi(G) with the cyclic benchmark psi(C_n).
/// q and p (smallest/largest prime divisor of n) are absent for n = 1.
struct PsiReport {
  std::string label;
  std::uint64_t n = 1;
  std::uint64_t psi_value = 1;
  BigInt psi_cn = 1;
  Rational ratio;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> p;
  bool cyclic = true;
};

inline PsiReport psi_report(const PermGroup& g) {
  PsiReport report;
  report.label = g.label();
  report.n = g.order();
  report.psi_value = psi(g);
  report.psi_cn = psi_cyclic(report.n);
  report.ratio = make_rational(BigInt(static_cast<unsigned long>(report.psi_value)),
                               report.psi_cn);
  if (report.n >= 2) {
    Factorization f = factorize(report.n);
    report.q = f.smallest_prime();
    report.p = f.largest_prime();
  }
  report.cyclic = is_cyclic(g);
  return report;
}

/// psi(G) for G = P x| F with P a cyclic p-group, gcd(|P|, |F|) = 1 and
/// Z = C_F(P):  psi(P) psi(Z) + |P| (psi(F) - psi(Z)).
inline std::uint64_t psi_semidirect_formula(std::uint64_t psi_p, std::uint64_t p_order,
                                            std::uint64_t psi_f, std::uint64_t psi_z) {
  return psi_p * psi_z + p_order * (psi_f - psi_z);
}

struct Prop5Result {
  Rational bound;            // (n-1) n / q + 1
  bool holds = false;        // psi(G) <= bound
  bool strict_outer = false; // psi(G) < n^2 / q
};

/// Coarse upper bound for non-cyclic G: every element order is at most
/// n/q, so psi(G) <= (n-1) n/q + 1 < n^2/q.
inline Prop5Result prop5_bound(const PermGroup& g) {
  if (g.order() < 2) throw PreconditionFailed("prop5_bound: |G| must be >= 2");
  if (is_cyclic(g)) throw PreconditionFailed("prop5_bound: G must be non-cyclic");
  std::uint64_t n = g.order();
  std::uint64_t q = factorize(n).smallest_prime();
  BigInt big_n(static_cast<unsigned long>(n));
  Prop5Result result;
  result.bound = make_rational((big_n - 1) * big_n, BigInt(static_cast<unsigned long>(q))) + 1;
  Rational value(BigInt(static_cast<unsigned long>(psi(g))));
  result.holds = value <= result.bound;
  result.strict_outer = value < make_rational(big_n * big_n, BigInt(static_cast<unsigned long>(q)));
  return result;
}

inline bool is_central_subgroup(const PermGroup& g, const PermGroup& h) {
  for (const Permutation& s : h.generators())
    for (const Permutation& x : g.generators())
      if (compose(s, x) != compose(x, s)) return false;
  return true;
}

struct Prop210Result {
  bool inequality_holds = false;  // psi(G) <= psi(P) psi(G/P)
  bool equality = false;
  bool central = false;           // P <= Z(G)
  BigInt rhs;                     // psi(P) psi(G/P)
};

/// For a cyclic normal Sylow p-subgroup P: psi(G) <= psi(P) psi(G/P),
/// with equality exactly when P is central.
inline Prop210Result prop210_check(const PermGroup& g, std::uint64_t p) {
  PermGroup sylow = sylow_subgroup(g, p);
  if (!is_cyclic(sylow))
    throw PreconditionFailed("prop210_check: Sylow p-subgroup is not cyclic");
  if (!is_normal(g, sylow))
    throw PreconditionFailed("prop210_check: Sylow p-subgroup is not normal");
  PermGroup quotient = quotient_group(g, sylow);
  Prop210Result result;
  result.rhs = BigInt(static_cast<unsigned long>(psi(sylow))) *
               BigInt(static_cast<unsigned long>(psi(quotient)));
  BigInt lhs(static_cast<unsigned long>(psi(g)));
  result.inequality_holds = lhs <= result.rhs;
  result.equality = lhs == result.rhs;
  result.central = is_central_subgroup(g, sylow);
  return result;
}

// ---------------------------------------------------------------------------
// Structural classification for the psi >= psi(C_n)/(2(q-1)) regime.

enum class Theorem6Case {
  case1,               // Sylow p-subgroup cyclic and normal
  case2,               // Sylow q cyclic, q-nilpotent, G'' <= Z(G)
  case3,               // Sylow p cyclic, p-nilpotent, G'' <= Z(G)
  hypothesis_not_met,
  unclassified,        // hypothesis met, no case matches (possible only
                       // for non-cyclic prime-power orders)
};

inline const char* to_string(Theorem6Case c) {
  switch (c) {
    case Theorem6Case::case1: return "case1";
    case Theorem6Case::case2: return "case2";
    case Theorem6Case::case3: return "case3";
    case Theorem6Case::hypothesis_not_met: return "hypothesis_not_met";
    case Theorem6Case::unclassified: return "unclassified";
  }
  return "?";
}

struct StructureReport {
  std::string label;
  bool solvable = true;
  std::vector<std::uint64_t> derived_orders;  // |G| >= |G'| >= |G''| >= ...
  std::uint64_t center_order = 1;
  bool second_derived_central = true;  // G'' <= Z(G)
  bool sylow_p_cyclic = true;          // p = largest prime divisor
  bool sylow_p_normal = true;
  bool sylow_has_cyclic_index_p = true;
  bool q_nilpotent = true;             // q = smallest prime divisor
  Theorem6Case theorem6_case = Theorem6Case::hypothesis_not_met;
};

/// Hypothesis of the case classification: psi(G) >= psi(C_n) / (2(q-1)).
inline bool theorem6_hypothesis(std::uint64_t psi_value, std::uint64_t n) {
  std::uint64_t q = factorize(n).smallest_prime();
  Rational threshold = make_rational(psi_cyclic(n), BigInt(2 * (static_cast<unsigned long>(q) - 1)));
  return Rational(BigInt(static_cast<unsigned long>(psi_value))) >= threshold;
}

inline StructureReport structure_report(const PermGroup& g) {
  StructureReport report;
  report.label = g.label();
  std::vector<PermGroup> series = derived_series(g);
  for (const PermGroup& term : series) report.derived_orders.push_back(term.order());
  report.solvable = series.back().order() == 1;
  PermGroup z = center(g);
  report.center_order = z.order();
  PermGroup second = series.size() > 2 ? series[2]
                                       : subgroup_generated(g, {g.identity()});
  report.second_derived_central = is_central_subgroup(g, second);

  if (g.order() < 2) {
    report.theorem6_case = Theorem6Case::hypothesis_not_met;
    return report;
  }
  Factorization f = factorize(g.order());
  std::uint64_t q = f.smallest_prime();
  std::uint64_t p = f.largest_prime();
  PermGroup sylow_p = sylow_subgroup(g, p);
  report.sylow_p_cyclic = is_cyclic(sylow_p);
  report.sylow_p_normal = is_normal(g, sylow_p);
  report.sylow_has_cyclic_index_p = has_cyclic_subgroup_of_index_p(sylow_p, p);
  report.q_nilpotent = is_q_nilpotent(g, q);

  if (!theorem6_hypothesis(psi(g), g.order())) {
    report.theorem6_case = Theorem6Case::hypothesis_not_met;
    return report;
  }
  if (report.sylow_p_cyclic && report.sylow_p_normal) {
    report.theorem6_case = Theorem6Case::case1;
    return report;
  }
  PermGroup sylow_q = q == p ? sylow_p : sylow_subgroup(g, q);
  if (is_cyclic(sylow_q) && report.q_nilpotent && report.second_derived_central) {
    report.theorem6_case = Theorem6Case::case2;
    return report;
  }
  bool p_nilpotent = q == p ? report.q_nilpotent : is_q_nilpotent(g, p);
  if (report.sylow_p_cyclic && p_nilpotent && report.second_derived_central) {
    report.theorem6_case = Theorem6Case::case3;
    return report;
  }
  report.theorem6_case = Theorem6Case::unclassified;
  return report;
}

/// Structural test for membership in the equality family C_{2k} x C_2
/// with k odd: abelian of order 4k (k odd) and exponent 2k.
inline bool is_prop2_instance(const PermGroup& g) {
  std::uint64_t n = g.order();
  if (n % 4 != 0 || (n / 4) % 2 == 0) return false;
  if (!is_abelian(g)) return false;
  return max_element_order(g) * 2 == n;
}

// ---------------------------------------------------------------------------
// Cyclic maximal subgroups.

struct CyclicMaximal {
  std::uint64_t subgroup_order = 1;
  std::uint64_t index = 1;
};

namespace detail {

/// True iff the closure of `gens` is the whole parent group of order
/// `group_order`.  Aborts early: a subgroup larger than half the group
/// is the group.
inline bool closure_is_whole_group(std::uint32_t degree,
                                   const std::vector<Permutation>& gens,
                                   std::uint64_t group_order) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation current = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& g : gens) {
      Permutation next = compose(current, g);
      if (seen.insert(next).second) {
        if (seen.size() * 2 > group_order) return true;  // Lagrange
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size() == group_order;
}

/// Maximality by exhaustive adjunction: C < G is maximal iff adjoining
/// any outside element generates all of G.  Prime index is automatic.
inline bool is_maximal_subgroup(const PermGroup& g, const PermGroup& c) {
  std::uint64_t index = g.order() / c.order();
  if (index == 1) return false;
  if (is_prime(index)) return true;
  std::vector<Permutation> gens = c.generators();
  gens.push_back(g.identity());
  for (const Permutation& outside : g.elements()) {
    if (c.contains(outside)) continue;
    gens.back() = outside;
    if (!closure_is_whole_group(g.degree(), gens, g.order())) return false;
  }
  return true;
}

}  // namespace detail

/// Searches for a cyclic maximal subgroup, optionally restricted to the
/// given indices.  Candidates are the distinct cyclic subgroups <x>;
/// subgroups of an already-seen <x> cannot be maximal and are skipped.
inline std::optional<CyclicMaximal> find_cyclic_maximal(
    const PermGroup& g, const std::vector<std::uint64_t>& allowed_indices = {}) {
  if (g.order() < 2) return std::nullopt;
  auto allowed = [&](std::uint64_t index) {
    if (allowed_indices.empty()) return true;
    for (std::uint64_t a : allowed_indices)
      if (a == index) return true;
    return false;
  };
  if (is_cyclic(g)) {
    // Maximal subgroups of C_n are exactly the prime-index ones, all cyclic.
    for (const PrimePower& pp : factorize(g.order()).factors)
      if (allowed(pp.prime)) return CyclicMaximal{g.order() / pp.prime, pp.prime};
    return std::nullopt;
  }
  std::unordered_set<Permutation, PermutationHash> covered;
  for (const Permutation& x : g.elements()) {
    if (covered.contains(x)) continue;
    PermGroup candidate = cyclic_subgroup(g, x);
    for (const Permutation& y : candidate.elements()) covered.insert(y);
    std::uint64_t index = g.order() / candidate.order();
    if (!allowed(index)) continue;
    if (detail::is_maximal_subgroup(g, candidate))
      return CyclicMaximal{candidate.order(), index};
  }
  return std::nullopt;
}

}  // namespace psig
