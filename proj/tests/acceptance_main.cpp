// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every comparison is exact (integers or rationals); the time
// limits are part of the criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "psig/psig.hpp"
#include "support/cayley_oracle.hpp"

using namespace psig;

namespace {

struct Criterion {
  int id;
  std::string description;
  double time_limit_seconds;
  std::function<void(std::vector<std::string>&)> run;
};

void expect(std::vector<std::string>& failures, bool condition, const std::string& what) {
  if (!condition) failures.push_back(what);
}

void expect_check(std::vector<std::string>& failures, const TheoremCheckResult& result) {
  expect(failures, result.applicable_count > 0, result.id + ": vacuous universe");
  for (const std::string& counterexample : result.counterexamples)
    failures.push_back(result.id + " counterexample: " + counterexample);
}

std::uint64_t oracle_phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

}  // namespace

int main() {
  const Corpus corpus = builtin_verification_corpus();
  const CheckOptions options;  // verification scales

  std::vector<Criterion> criteria;

  criteria.push_back({1, "exact values: psi(S3), psi(A5), psi(C2^3), psi(C4), phi(60)", 1.0,
                      [&](std::vector<std::string>& failures) {
                        expect(failures, psi(symmetric(3)) == 13, "psi(S3) != 13");
                        expect(failures, psi(alternating(5)) == 211, "psi(A5) != 211");
                        expect(failures, psi(abelian({2, 2, 2})) == 15, "psi(C2xC2xC2) != 15");
                        expect(failures, psi(cyclic(4)) == 11, "psi(C4) != 11");
                        expect(failures, psi_cyclic(4) == 11, "psi_cyclic(4) != 11");
                        expect(failures, euler_phi(60) == 16, "phi(60) != 16");
                        // psi(A5) = 211 > (1/5) n phi(n) = 192 at n = 60.
                        expect(failures,
                               make_rational(211, 1) > make_rational(60 * 16, 5),
                               "psi(A5) not above n phi(n)/5");
                        expect(failures, 60 * 16 / 5 == 192, "n phi(n)/5 != 192");
                      }});

  criteria.push_back({2, "sharp 7/11 bound with the exact equality family", 60.0,
                      [&](std::vector<std::string>& failures) {
                        TheoremCheckResult t1 = check_theorem("T1", corpus, options);
                        expect_check(failures, t1);
                        std::vector<std::string> family;
                        for (const CorpusEntry& entry : corpus.entries)
                          if (entry.group.order() >= 2 && !is_cyclic(entry.group) &&
                              is_prop2_instance(entry.group))
                            family.push_back(entry.label);
                        expect(failures, !t1.equality_witnesses.empty(),
                               "no equality witnesses found");
                        expect(failures, t1.equality_witnesses == family,
                               "witnesses differ from the C_2k x C_2 instances");
                      }});

  criteria.push_back({3, "psi(C_4k) = 11 psi(C_k) and psi(C_2k x C_2) = 7 psi(C_k), k odd <= 25",
                      5.0, [&](std::vector<std::string>& failures) {
                        expect_check(failures, check_theorem("P2", corpus, options));
                      }});

  criteria.push_back(
      {4, "strict 1/(q-1) bound; odd-order groups below 1/2", 60.0,
       [&](std::vector<std::string>& failures) {
         expect_check(failures, check_theorem("T3", corpus, options));
         TheoremCheckResult c4 = check_theorem("C4", corpus, options);
         expect_check(failures, c4);
         // The odd-order universe must include the named witnesses.
         std::map<std::string, bool> seen{{"C3xC3", false}, {"sd:7.3.2", false},
                                          {"sd:9.3.4", false}, {"sd:9.3.7", false}};
         for (const CorpusEntry& entry : corpus.entries) {
           auto it = seen.find(entry.label);
           if (it == seen.end()) continue;
           it->second = entry.group.order() % 2 == 1 && !is_cyclic(entry.group);
         }
         for (const auto& [label, present] : seen)
           expect(failures, present, "expected odd non-cyclic entry missing: " + label);
       }});

  criteria.push_back({5, "closed form equals enumerated psi(C_n) for n <= 2000", 30.0,
                      [&](std::vector<std::string>& failures) {
                        expect_check(failures, check_theorem("L2_9", corpus, options));
                      }});

  criteria.push_back({6, "phi(n) >= (q-1)n/p for n <= 10^5; gcd-count oracle to 10^4", 30.0,
                      [&](std::vector<std::string>& failures) {
                        expect_check(failures, check_theorem("L2_1", corpus, options));
                        for (std::uint64_t n = 1; n <= 10'000; ++n) {
                          if (euler_phi(n) != oracle_phi(n)) {
                            failures.push_back("phi mismatch at n = " + std::to_string(n));
                            break;
                          }
                        }
                      }});

  criteria.push_back({7, "semidirect psi formula matches enumeration on the full grid", 60.0,
                      [&](std::vector<std::string>& failures) {
                        expect_check(failures, check_theorem("L2_2", corpus, options));
                      }});

  criteria.push_back({8, "psi(G) <= psi(P) psi(G/P) with equality iff P central", 60.0,
                      [&](std::vector<std::string>& failures) {
                        expect_check(failures, check_theorem("P2_10", corpus, options));
                      }});

  criteria.push_back(
      {9, "solvability criteria and case analysis over the corpus", 120.0,
       [&](std::vector<std::string>& failures) {
         for (const std::string& id : {"T6", "C7", "C8", "C9", "T10", "T11"})
           expect_check(failures, check_theorem(id, corpus, options));
         // S3 meets the hypothesis (13 >= 21/2) and classifies.
         expect(failures, theorem6_hypothesis(13, 6), "S3 fails the 13 >= 21/2 gate");
         StructureReport s3_report = structure_report(symmetric(3));
         expect(failures, s3_report.theorem6_case == Theorem6Case::case1,
                "S3 does not classify into case 1");
         // A5 is non-solvable and misses both hypotheses.
         expect(failures, !is_solvable(alternating(5)), "A5 reported solvable");
         expect(failures, !theorem6_hypothesis(211, 60), "A5 meets the case-analysis gate");
         expect(failures,
                make_rational(211, 1) < make_rational(3 * 60 * 16, 5),
                "A5 not below (3/5) n phi(n) = 576");
       }});

  criteria.push_back({10, "partial products approach 5/2; random prime lists stay above 5/6",
                      10.0, [&](std::vector<std::string>& failures) {
                        expect_check(failures, check_theorem("P2_7", corpus, options));
                        expect_check(failures, check_theorem("L2_8", corpus, options));
                      }});

  criteria.push_back(
      {11, "catalog complete to order 8 by the Cayley oracle; counts to 16 frozen", 120.0,
       [&](std::vector<std::string>& failures) {
         constexpr std::array<std::size_t, 16> class_counts = {1, 1, 1, 2, 1, 2, 1, 5,
                                                               2, 2, 1, 5, 1, 2, 1, 14};
         std::vector<CatalogEntry> catalog = small_group_catalog(16);
         std::vector<PermGroup> groups;
         for (const CatalogEntry& entry : catalog) groups.push_back(entry.build());
         for (std::size_t i = 0; i < groups.size(); ++i)
           for (std::size_t j = i + 1; j < groups.size(); ++j)
             if (is_isomorphic(groups[i], groups[j]))
               failures.push_back("catalog entries isomorphic: " + catalog[i].name + " and " +
                                  catalog[j].name);
         std::map<std::uint64_t, std::size_t> counts;
         for (const CatalogEntry& entry : catalog) ++counts[entry.expected_order];
         for (std::uint64_t order = 1; order <= 16; ++order)
           expect(failures, counts[order] == class_counts[order - 1],
                  "catalog count wrong at order " + std::to_string(order));
         for (int order = 1; order <= 8; ++order)
           expect(failures,
                  cayley_oracle::count_group_classes(order) == class_counts[order - 1],
                  "oracle class count wrong at order " + std::to_string(order));
       }});

  bool all_passed = true;
  for (const Criterion& criterion : criteria) {
    std::vector<std::string> failures;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= criterion.time_limit_seconds)
      failures.push_back("time limit exceeded (" + std::to_string(elapsed) + "s)");
    bool passed = failures.empty();
    all_passed = all_passed && passed;
    std::printf("[%s] criterion %2d (%6.2fs < %3.0fs)  %s\n", passed ? "PASS" : "FAIL",
                criterion.id, elapsed, criterion.time_limit_seconds,
                criterion.description.c_str());
    for (const std::string& failure : failures)
      std::printf("       - %s\n", failure.c_str());
  }
  return all_passed ? 0 : 1;
}
