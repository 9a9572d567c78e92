#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "psig/arith.hpp"
#include "psig/errors.hpp"
#include "psig/perm.hpp"

namespace psig {

inline constexpr std::size_t kDefaultEnumerationCap = 200'000;

namespace detail {

/// Breadth-first closure of a generating set under composition.  Finite
/// sets of bijections close into a group (inverses are powers), so one-
/// sided products suffice.  Throws CapExceeded once the closure grows
/// past `cap`.
inline std::vector<Permutation> bfs_closure(std::uint32_t degree,
                                            const std::vector<Permutation>& generators,
                                            std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation current = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& g : generators) {
      Permutation next = compose(current, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceeded("element enumeration exceeded cap of " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Permutation> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace detail

/// An explicit finite permutation group: generators plus the fully
/// enumerated, canonically ordered (lexicographic on image arrays)
/// element set.  Enumeration is forced at construction, so values are
/// immutable afterwards and safe to share across threads.
class PermGroup {
 public:
  static PermGroup generated(std::vector<Permutation> generators,
                             std::string label = "",
                             std::size_t cap = kDefaultEnumerationCap) {
    if (generators.empty())
      throw std::invalid_argument("PermGroup: generating set must be non-empty");
    std::uint32_t degree = generators.front().degree();
    for (const Permutation& g : generators)
      if (g.degree() != degree)
        throw std::invalid_argument("PermGroup: generator degrees differ");
    std::vector<Permutation> elements = detail::bfs_closure(degree, generators, cap);
    return PermGroup(degree, std::move(generators), std::move(elements), std::move(label));
  }

  /// Builds from a known element set (must be closed under composition);
  /// extracts a small generating subset greedily.  The incremental
  /// closures double as a closedness check.
  static PermGroup from_elements(std::vector<Permutation> elements,
                                 std::string label = "",
                                 std::size_t cap = kDefaultEnumerationCap) {
    if (elements.empty())
      throw std::invalid_argument("PermGroup: element set must be non-empty");
    std::uint32_t degree = elements.front().degree();
    std::sort(elements.begin(), elements.end());
    std::vector<Permutation> generators{Permutation::identity(degree)};
    std::vector<Permutation> closure = detail::bfs_closure(degree, generators, cap);
    for (const Permutation& e : elements) {
      if (std::binary_search(closure.begin(), closure.end(), e)) continue;
      generators.push_back(e);
      closure = detail::bfs_closure(degree, generators, cap);
    }
    if (closure.size() != elements.size())
      throw std::invalid_argument("PermGroup::from_elements: set is not closed");
    if (generators.size() > 1) generators.erase(generators.begin());  // drop identity
    return PermGroup(degree, std::move(generators), std::move(closure), std::move(label));
  }

  std::uint32_t degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::string& label() const { return label_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  Permutation identity() const { return Permutation::identity(degree_); }

  bool contains(const Permutation& p) const {
    return p.degree() == degree_ &&
           std::binary_search(elements_.begin(), elements_.end(), p);
  }

  bool contains_all(const PermGroup& other) const {
    if (other.degree() != degree_) return false;
    for (const Permutation& p : other.elements())
      if (!contains(p)) return false;
    return true;
  }

  PermGroup with_label(std::string label) const {
    PermGroup copy = *this;
    copy.label_ = std::move(label);
    return copy;
  }

 private:
  PermGroup(std::uint32_t degree, std::vector<Permutation> generators,
            std::vector<Permutation> elements, std::string label)
      : degree_(degree),
        generators_(std::move(generators)),
        elements_(std::move(elements)),
        label_(std::move(label)) {}

  std::uint32_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::string label_;
};

/// Multiset "element order -> count".
using OrderProfile = std::map<std::uint64_t, std::uint64_t>;

inline OrderProfile order_profile(const PermGroup& g) {
  OrderProfile profile;
  for (const Permutation& p : g.elements()) ++profile[p.order()];
  return profile;
}

inline std::uint64_t max_element_order(const PermGroup& g) {
  std::uint64_t best = 1;
  for (const Permutation& p : g.elements()) best = std::max(best, p.order());
  return best;
}

inline bool is_cyclic(const PermGroup& g) {
  for (const Permutation& p : g.elements())
    if (p.order() == g.order()) return true;
  return false;
}

inline bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  return true;
}

inline PermGroup subgroup_generated(const PermGroup& g,
                                    const std::vector<Permutation>& seed,
                                    std::string label = "") {
  for (const Permutation& p : seed)
    if (!g.contains(p))
      throw std::invalid_argument("subgroup_generated: seed element not in group");
  std::vector<Permutation> gens = seed;
  if (gens.empty()) gens.push_back(g.identity());
  return PermGroup::generated(std::move(gens), std::move(label), g.order());
}

/// The cyclic subgroup <x>; powers of x suffice, no search needed.
inline PermGroup cyclic_subgroup(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x))
    throw std::invalid_argument("cyclic_subgroup: element not in group");
  std::vector<Permutation> powers;
  Permutation current = x;
  do {
    powers.push_back(current);
    current = compose(current, x);
  } while (!(current == x));
  return PermGroup::from_elements(std::move(powers));
}

inline PermGroup centralizer(const PermGroup& g, const PermGroup& h) {
  if (!g.contains_all(h))
    throw std::invalid_argument("centralizer: subgroup not contained in group");
  std::vector<Permutation> commuting;
  for (const Permutation& x : g.elements()) {
    bool ok = true;
    for (const Permutation& s : h.generators()) {
      if (compose(x, s) != compose(s, x)) {
        ok = false;
        break;
      }
    }
    if (ok) commuting.push_back(x);
  }
  return PermGroup::from_elements(std::move(commuting));
}

inline PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  if (!g.contains_all(h))
    throw std::invalid_argument("normalizer: subgroup not contained in group");
  std::vector<Permutation> normalizing;
  for (const Permutation& x : g.elements()) {
    Permutation xinv = x.inverse();
    bool ok = true;
    for (const Permutation& s : h.generators()) {
      if (!h.contains(compose(compose(x, s), xinv))) {
        ok = false;
        break;
      }
    }
    if (ok) normalizing.push_back(x);
  }
  return PermGroup::from_elements(std::move(normalizing));
}

inline bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!g.contains_all(h))
    throw std::invalid_argument("is_normal: subgroup not contained in group");
  for (const Permutation& x : g.elements()) {
    Permutation xinv = x.inverse();
    for (const Permutation& s : h.generators())
      if (!h.contains(compose(compose(x, s), xinv))) return false;
  }
  return true;
}

inline PermGroup center(const PermGroup& g) { return centralizer(g, g); }

/// Subgroup generated by all commutators x^-1 y^-1 x y over element pairs.
inline PermGroup derived_subgroup(const PermGroup& g) {
  std::unordered_set<Permutation, PermutationHash> commutators;
  std::vector<Permutation> inverses;
  inverses.reserve(g.elements().size());
  for (const Permutation& x : g.elements()) inverses.push_back(x.inverse());
  const auto& elements = g.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      commutators.insert(compose(compose(inverses[i], inverses[j]),
                                 compose(elements[i], elements[j])));
    }
  }
  std::vector<Permutation> gens(commutators.begin(), commutators.end());
  std::sort(gens.begin(), gens.end());
  return PermGroup::generated(std::move(gens), "", g.order());
}

/// G >= G' >= G'' >= ... until stabilization; the last two entries are
/// equal exactly when the series stops without reaching the trivial group.
inline std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = derived_subgroup(series.back());
    bool stabilized = next.order() == series.back().order();
    bool trivial = next.order() == 1;
    series.push_back(std::move(next));
    if (stabilized || trivial) break;
  }
  return series;
}

inline bool is_solvable(const PermGroup& g) {
  return derived_series(g).back().order() == 1;
}

/// Exact p-part of n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

/// Sylow p-subgroup by the classical normalizer climb: start from the
/// cyclic subgroup of a p-element of maximal order; while |P| is short of
/// the p-part, adjoin a p-power-order element of N_G(P) outside P.  Such
/// an element always exists because a proper p-subgroup is proper in the
/// p-part of its normalizer.
inline PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup: p must be prime");
  if (g.order() % p != 0)
    throw std::invalid_argument("sylow_subgroup: p does not divide the group order");
  std::uint64_t target = p_part(g.order(), p);

  auto p_power_order = [&](const Permutation& x) {
    std::uint64_t o = x.order();
    while (o % p == 0) o /= p;
    return o == 1;
  };

  const Permutation* best = nullptr;
  std::uint64_t best_order = 0;
  for (const Permutation& x : g.elements()) {
    std::uint64_t o = x.order();
    if (o > best_order && o != 1 && p_power_order(x)) {
      best = &x;
      best_order = o;
    }
  }
  PermGroup sylow = best ? cyclic_subgroup(g, *best)
                         : subgroup_generated(g, {g.identity()});
  while (sylow.order() < target) {
    PermGroup norm = normalizer(g, sylow);
    const Permutation* found = nullptr;
    for (const Permutation& x : norm.elements()) {
      if (!x.is_identity() && p_power_order(x) && !sylow.contains(x)) {
        found = &x;
        break;
      }
    }
    if (!found)
      throw std::logic_error("sylow_subgroup: normalizer climb stalled");
    std::vector<Permutation> gens = sylow.generators();
    gens.push_back(*found);
    sylow = PermGroup::generated(std::move(gens), "", g.order());
  }
  return sylow;
}

/// G/N as the left-multiplication action of G's generators on the left
/// cosets of N; faithful because N is normal.
inline PermGroup quotient_group(const PermGroup& g, const PermGroup& n,
                                std::string label = "") {
  if (!g.contains_all(n))
    throw std::invalid_argument("quotient_group: subgroup not contained in group");
  if (!is_normal(g, n)) throw NotNormal("quotient_group: subgroup is not normal");

  std::unordered_map<Permutation, std::uint32_t, PermutationHash> coset_of;
  std::vector<Permutation> reps;
  for (const Permutation& x : g.elements()) {
    if (coset_of.contains(x)) continue;
    std::uint32_t index = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (const Permutation& u : n.elements()) coset_of.emplace(compose(x, u), index);
  }
  std::uint32_t index_count = static_cast<std::uint32_t>(reps.size());

  std::vector<Permutation> quotient_gens;
  for (const Permutation& s : g.generators()) {
    std::vector<std::uint32_t> images(index_count);
    for (std::uint32_t c = 0; c < index_count; ++c)
      images[c] = coset_of.at(compose(s, reps[c]));
    quotient_gens.push_back(Permutation(std::move(images)));
  }
  return PermGroup::generated(std::move(quotient_gens), std::move(label), g.order());
}

/// q-nilpotency via the normal q-complement criterion: the elements of
/// order coprime to q must number exactly the q'-part of |G| and be
/// closed under composition.
inline bool is_q_nilpotent(const PermGroup& g, std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("is_q_nilpotent: q must be prime");
  if (g.order() % q != 0)
    throw std::invalid_argument("is_q_nilpotent: q does not divide the group order");
  std::uint64_t complement_order = g.order() / p_part(g.order(), q);
  std::vector<Permutation> coprime;
  for (const Permutation& x : g.elements())
    if (x.order() % q != 0) coprime.push_back(x);
  if (coprime.size() != complement_order) return false;
  std::sort(coprime.begin(), coprime.end());
  for (const Permutation& a : coprime) {
    for (const Permutation& b : coprime) {
      if (!std::binary_search(coprime.begin(), coprime.end(), compose(a, b)))
        return false;
    }
  }
  return true;
}

/// For a p-group P: true iff P has a cyclic subgroup of index p, i.e. the
/// maximal element order reaches |P|/p.
inline bool has_cyclic_subgroup_of_index_p(const PermGroup& p_group, std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("has_cyclic_subgroup_of_index_p: p must be prime");
  if (p_part(p_group.order(), p) != p_group.order())
    throw std::invalid_argument("has_cyclic_subgroup_of_index_p: input is not a p-group");
  return max_element_order(p_group) * p >= p_group.order();
}

}  // namespace psig
