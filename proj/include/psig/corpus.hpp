#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "psig/analysis.hpp"
#include "psig/errors.hpp"
#include "psig/families.hpp"
#include "psig/group.hpp"

namespace psig {

struct CorpusEntry {
  std::string label;
  PermGroup group;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::string source;
};

/// Enumeration cap, overridable through PSIG_ENUM_CAP.
inline std::size_t enumeration_cap_from_env() {
  if (const char* value = std::getenv("PSIG_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(value, &end, 10);
    if (end && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return kDefaultEnumerationCap;
}

/// All isomorphism classes of order <= 16, with their plain catalog names.
inline Corpus builtin_catalog_corpus(std::size_t cap = kDefaultEnumerationCap) {
  Corpus corpus;
  corpus.source = "builtin:catalog";
  for (const CatalogEntry& entry : small_group_catalog(16))
    corpus.entries.push_back({entry.name, entry.build(cap)});
  return corpus;
}

namespace detail {

inline void add_entry(Corpus& corpus, std::string label, PermGroup group) {
  corpus.entries.push_back({label, group.with_label(label)});
}

inline std::vector<std::vector<std::uint32_t>> partitions_of(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> result;
  std::vector<std::uint32_t> current;
  auto recurse = [&](auto&& self, std::uint32_t remaining, std::uint32_t max_part) -> void {
    if (remaining == 0) {
      result.push_back(current);
      return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);
  return result;
}

/// Prime-power cyclic factor multisets of every abelian group of order n.
inline std::vector<std::vector<std::uint64_t>> abelian_factor_lists(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> lists{{}};
  for (const PrimePower& pp : factorize(n).factors) {
    std::vector<std::vector<std::uint64_t>> extended;
    for (const auto& partition : partitions_of(pp.exponent)) {
      for (const auto& base : lists) {
        std::vector<std::uint64_t> factors = base;
        for (std::uint32_t part : partition) {
          std::uint64_t power = 1;
          for (std::uint32_t i = 0; i < part; ++i) power *= pp.prime;
          factors.push_back(power);
        }
        extended.push_back(std::move(factors));
      }
    }
    lists = std::move(extended);
  }
  for (auto& factors : lists) std::sort(factors.begin(), factors.end());
  std::sort(lists.begin(), lists.end());
  return lists;
}

inline std::string joined(const std::vector<std::uint64_t>& values, char sep) {
  std::string result;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) result.push_back(sep);
    result += std::to_string(values[i]);
  }
  return result;
}

}  // namespace detail

/// The default verification universe: the catalog plus family sweeps
/// (dihedral and dicyclic up to order 64, all abelian groups of orders
/// 17..64, cyclic-by-cyclic semidirect products up to order 100, the
/// equality family up to k = 25) and the small symmetric/alternating
/// groups.  Sweep entries carry family-prefixed labels so that all
/// labels stay unique.
inline Corpus builtin_verification_corpus(std::size_t cap = kDefaultEnumerationCap) {
  Corpus corpus = builtin_catalog_corpus(cap);
  corpus.source = "builtin:verification";
  for (std::uint64_t order = 18; order <= 64; order += 2)
    detail::add_entry(corpus, "dih:" + std::to_string(order), dihedral(order, cap));
  for (std::uint64_t order = 20; order <= 64; order += 4)
    detail::add_entry(corpus, "dic:" + std::to_string(order), dicyclic(order, cap));
  for (std::uint64_t order = 17; order <= 64; ++order) {
    for (const auto& factors : detail::abelian_factor_lists(order)) {
      detail::add_entry(corpus, "ab:" + detail::joined(factors, '.'),
                        abelian(factors, cap));
    }
  }
  for (std::uint64_t k = 1; k <= 25; k += 2)
    detail::add_entry(corpus, "p2:" + std::to_string(k), prop2_group(k, cap));
  for (std::uint64_t m = 3; m <= 49; ++m) {
    Factorization f = factorize(m);
    if (f.factors.size() != 1) continue;  // prime powers only
    for (std::uint64_t k = 2; k <= 12 && m * k <= 100; ++k) {
      if (std::gcd(m, k) != 1) continue;
      for (std::uint64_t e = 1; e < m; ++e) {
        if (std::gcd(e, m) != 1 || detail::pow_mod(e, k, m) != 1) continue;
        detail::add_entry(corpus,
                          "sd:" + std::to_string(m) + "." + std::to_string(k) + "." +
                              std::to_string(e),
                          semidirect_cyclic(m, k, e, cap));
      }
    }
  }
  detail::add_entry(corpus, "S4", symmetric(4, cap));
  detail::add_entry(corpus, "S5", symmetric(5, cap));
  detail::add_entry(corpus, "S6", symmetric(6, cap));
  detail::add_entry(corpus, "A5", alternating(5, cap));
  detail::add_entry(corpus, "A6", alternating(6, cap));
  return corpus;
}

/// JSON Lines corpus: one group per line,
/// {"label": str, "degree": int, "generators": [[int image array], ...]}.
inline Corpus load_corpus(const std::filesystem::path& path,
                          std::size_t cap = kDefaultEnumerationCap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file: " + path.string());
  Corpus corpus;
  corpus.source = path.string();
  std::string line;
  std::size_t line_number = 0;
  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string where = path.filename().string() + ":" + std::to_string(line_number);
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(where + ": invalid JSON (" + e.what() + ")");
    }
    if (!record.is_object()) throw ParseError(where + ": expected an object");
    if (!record.contains("label") || !record["label"].is_string())
      throw ParseError(where + ": field 'label' must be a string");
    if (!record.contains("degree") || !record["degree"].is_number_unsigned())
      throw ParseError(where + ": field 'degree' must be a positive integer");
    if (!record.contains("generators") || !record["generators"].is_array() ||
        record["generators"].empty())
      throw ParseError(where + ": field 'generators' must be a non-empty array");
    std::string label = record["label"].get<std::string>();
    if (label.empty()) throw ParseError(where + ": label must be non-empty");
    if (std::find(labels.begin(), labels.end(), label) != labels.end())
      throw ParseError(where + ": duplicate label '" + label + "'");
    std::uint64_t degree = record["degree"].get<std::uint64_t>();
    if (degree == 0 || degree > 1u << 20)
      throw ParseError(where + ": degree out of range");
    std::vector<Permutation> generators;
    for (std::size_t gi = 0; gi < record["generators"].size(); ++gi) {
      const auto& array = record["generators"][gi];
      std::string field = where + ": generators[" + std::to_string(gi) + "]";
      if (!array.is_array() || array.size() != degree)
        throw ParseError(field + " must be an image array of length " +
                         std::to_string(degree));
      std::vector<std::uint32_t> images;
      for (const auto& value : array) {
        if (!value.is_number_unsigned() || value.get<std::uint64_t>() >= degree)
          throw ParseError(field + " has an image out of range");
        images.push_back(value.get<std::uint32_t>());
      }
      try {
        generators.push_back(Permutation(std::move(images)));
      } catch (const std::invalid_argument&) {
        throw ParseError(field + " is not a bijection");
      }
    }
    labels.push_back(label);
    corpus.entries.push_back(
        {label, PermGroup::generated(std::move(generators), label, cap)});
  }
  return corpus;
}

inline void filter_max_order(Corpus& corpus, std::uint64_t max_order) {
  std::erase_if(corpus.entries, [&](const CorpusEntry& entry) {
    return entry.group.order() > max_order;
  });
}

enum class TableFormat { csv, json };

/// One row per entry: label, order, cyclic, psi, psi_cn, exact ratio as
/// two integer columns, solvable.  Rows sorted by (order, label);
/// byte-stable across runs.
inline std::size_t emit_table(const Corpus& corpus, TableFormat format,
                              std::ostream& out) {
  struct Row {
    PsiReport report;
    bool solvable;
  };
  std::vector<Row> rows;
  for (const CorpusEntry& entry : corpus.entries)
    rows.push_back({psi_report(entry.group), is_solvable(entry.group)});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.report.n != b.report.n) return a.report.n < b.report.n;
    return a.report.label < b.report.label;
  });
  if (format == TableFormat::csv) {
    out << "label,order,cyclic,psi,psi_cn,ratio_num,ratio_den,solvable\n";
    for (const Row& row : rows) {
      out << row.report.label << ',' << row.report.n << ','
          << (row.report.cyclic ? "true" : "false") << ',' << row.report.psi_value
          << ',' << row.report.psi_cn.get_str() << ','
          << row.report.ratio.get_num().get_str() << ','
          << row.report.ratio.get_den().get_str() << ','
          << (row.solvable ? "true" : "false") << '\n';
    }
  } else {
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
      nlohmann::ordered_json object;
      object["label"] = row.report.label;
      object["order"] = row.report.n;
      object["cyclic"] = row.report.cyclic;
      object["psi"] = row.report.psi_value;
      object["psi_cn"] = row.report.psi_cn.get_str();
      object["ratio_num"] = row.report.ratio.get_num().get_str();
      object["ratio_den"] = row.report.ratio.get_den().get_str();
      object["solvable"] = row.solvable;
      table.push_back(std::move(object));
    }
    out << table.dump(2) << '\n';
  }
  return rows.size();
}

inline std::size_t emit_table_to_file(const Corpus& corpus, TableFormat format,
                                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  return emit_table(corpus, format, out);
}

}  // namespace psig
