// psigroup: compute the element-order-sum invariant psi over explicit
// finite groups and re-verify the psi inequalities over the built-in
// corpora.  Exit codes: 0 all checks pass, 1 counterexample found,
// 2 usage or I/O error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psig/psig.hpp"

namespace {

std::vector<std::uint64_t> parse_params(const std::vector<std::string>& args) {
  std::vector<std::uint64_t> params;
  for (const std::string& arg : args) params.push_back(std::stoull(arg));
  return params;
}

psig::PermGroup resolve_group(const std::vector<std::string>& args, std::size_t cap) {
  if (args.empty()) throw std::invalid_argument("expected a catalog label or family spec");
  if (args.size() == 1) {
    for (const psig::CatalogEntry& entry : psig::small_group_catalog(16))
      if (entry.name == args[0]) return entry.build(cap);
  }
  return psig::build_family(args[0], parse_params({args.begin() + 1, args.end()}), cap);
}

void print_group_report(const psig::PermGroup& group) {
  psig::PsiReport report = psig::psi_report(group);
  std::cout << "label:    " << report.label << "\n"
            << "order:    " << report.n << "\n"
            << "degree:   " << group.degree() << "\n"
            << "cyclic:   " << (report.cyclic ? "true" : "false") << "\n"
            << "solvable: " << (psig::is_solvable(group) ? "true" : "false") << "\n"
            << "psi:      " << report.psi_value << "\n"
            << "psi(C_n): " << report.psi_cn.get_str() << "\n"
            << "ratio:    " << psig::to_string(report.ratio) << "\n";
  std::cout << "orders:   ";
  bool first = true;
  for (const auto& [order, count] : psig::order_profile(group)) {
    if (!first) std::cout << ", ";
    std::cout << order << ":" << count;
    first = false;
  }
  std::cout << "\n";
}

void print_check_result(const psig::TheoremCheckResult& result, bool verbose) {
  std::printf("[%s] %-6s applicable=%zu/%zu skipped=%zu elapsed=%.2fs  %s\n",
              result.passed() ? "PASS" : "FAIL", result.id.c_str(),
              result.applicable_count, result.universe_count, result.skipped_count,
              result.elapsed_seconds, result.universe.c_str());
  if (!result.equality_witnesses.empty()) {
    std::printf("    equality witnesses (%zu):", result.equality_witnesses.size());
    for (const std::string& w : result.equality_witnesses) std::printf(" %s", w.c_str());
    std::printf("\n");
  }
  for (const std::string& f : result.flagged)
    std::printf("    flagged: %s\n", f.c_str());
  for (const std::string& w : result.warnings)
    std::printf("    warning: %s\n", w.c_str());
  for (const std::string& c : result.counterexamples)
    std::printf("    counterexample: %s\n", c.c_str());
  if (verbose && !result.skipped_labels.empty()) {
    std::printf("    skipped:");
    for (const std::string& s : result.skipped_labels) std::printf(" %s", s.c_str());
    std::printf("\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group element-order-sum computations and theorem verification"};
  app.require_subcommand(1);
  std::size_t cap = psig::enumeration_cap_from_env();

  auto* psi_cmd = app.add_subcommand("psi", "psi(G) for a catalog label or family spec");
  std::vector<std::string> psi_args;
  psi_cmd->add_option("group", psi_args, "catalog label (e.g. S3) or family spec (e.g. dihedral 16)")
      ->required()
      ->expected(-1);

  auto* psi_cyclic_cmd = app.add_subcommand("psi-cyclic", "psi(C_n) by the closed form");
  std::uint64_t cyclic_n = 1;
  psi_cyclic_cmd->add_option("n", cyclic_n, "cyclic group order")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run theorem checks over a corpus");
  std::string theorem = "all";
  std::string corpus_path;
  std::uint64_t max_order = 0;
  bool verbose = false;
  verify_cmd->add_option("--theorem", theorem, "theorem identifier or 'all'");
  verify_cmd->add_option("--corpus", corpus_path, "JSON Lines corpus file (default: built-in)");
  verify_cmd->add_option("--max-order", max_order, "drop corpus entries above this order");
  verify_cmd->add_flag("--verbose", verbose, "list skipped entries");

  auto* table_cmd = app.add_subcommand("table", "emit the catalog psi table");
  std::string format = "csv";
  std::string out_path;
  table_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--out", out_path, "output path (default: stdout)");

  auto* family_cmd = app.add_subcommand("family", "construct a family group and report on it");
  std::vector<std::string> family_args;
  family_cmd->add_option("spec", family_args, "family name and parameters")
      ->required()
      ->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (psi_cmd->parsed()) {
      psig::PermGroup group = resolve_group(psi_args, cap);
      std::cout << "psi(" << group.label() << ") = " << psig::psi(group) << "\n";
      return 0;
    }
    if (psi_cyclic_cmd->parsed()) {
      std::cout << "psi(C_" << cyclic_n << ") = " << psig::psi_cyclic(cyclic_n).get_str()
                << "\n";
      return 0;
    }
    if (family_cmd->parsed()) {
      print_group_report(resolve_group(family_args, cap));
      return 0;
    }
    if (table_cmd->parsed()) {
      psig::Corpus corpus = psig::builtin_catalog_corpus(cap);
      psig::TableFormat table_format =
          format == "csv" ? psig::TableFormat::csv : psig::TableFormat::json;
      if (out_path.empty()) {
        psig::emit_table(corpus, table_format, std::cout);
      } else {
        std::size_t rows = psig::emit_table_to_file(corpus, table_format, out_path);
        std::cout << "wrote " << rows << " rows to " << out_path << "\n";
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      psig::Corpus corpus = corpus_path.empty() ? psig::builtin_verification_corpus(cap)
                                                : psig::load_corpus(corpus_path, cap);
      if (max_order > 0) psig::filter_max_order(corpus, max_order);
      std::vector<psig::TheoremCheckResult> results;
      if (theorem == "all") {
        results = psig::run_all(corpus);
      } else {
        results.push_back(psig::check_theorem(theorem, corpus));
      }
      bool all_passed = true;
      for (const psig::TheoremCheckResult& result : results) {
        print_check_result(result, verbose);
        all_passed = all_passed && result.passed();
      }
      return all_passed ? 0 : 1;
    }
  } catch (const psig::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const psig::UnknownTheorem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
