#pragma once

// Test-only oracle: enumerates every group Cayley table of a given order
// (identity fixed as element 0) by backtracking over table cells with
// Latin-square masks and associativity propagation, then buckets the
// complete tables into isomorphism classes via a table-level backtracking
// matcher.  Deliberately independent of the library's permutation
// machinery: everything here works on raw multiplication tables.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace cayley_oracle {

using Table = std::vector<std::vector<int>>;

namespace detail {

struct Enumerator {
  int n;
  Table table;                      // -1 = unknown
  std::vector<std::uint32_t> row_used, col_used;
  std::vector<std::pair<int, int>> trail;
  std::vector<Table>* out;

  explicit Enumerator(int order, std::vector<Table>* sink)
      : n(order),
        table(order, std::vector<int>(order, -1)),
        row_used(order, 0),
        col_used(order, 0),
        out(sink) {
    for (int i = 0; i < n; ++i) {
      set_cell(0, i, i);
      if (i > 0) set_cell(i, 0, i);
    }
    trail.clear();
  }

  void set_cell(int i, int j, int v) {
    table[i][j] = v;
    row_used[i] |= 1u << v;
    col_used[j] |= 1u << v;
    trail.push_back({i, j});
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      auto [i, j] = trail.back();
      trail.pop_back();
      int v = table[i][j];
      table[i][j] = -1;
      row_used[i] &= ~(1u << v);
      col_used[j] &= ~(1u << v);
    }
  }

  // Assign i*j = v, then propagate the associativity consequences of
  // every new fact: for a fact (a, b) and any x,
  //   (a b) x = a (b x)   and   (x a) b = x (a b)
  // let facts be checked or inferred whenever two of the three inner
  // products are known.
  bool assign(int i, int j, int v) {
    std::size_t head = trail.size();
    if (!place(i, j, v)) return false;
    while (head < trail.size()) {
      auto [a, b] = trail[head++];
      int c = table[a][b];
      for (int x = 0; x < n; ++x) {
        int bx = table[b][x];
        if (bx != -1) {
          int lhs = table[c][x];
          int rhs = table[a][bx];
          if (lhs != -1 && rhs != -1) {
            if (lhs != rhs) return false;
          } else if (lhs != -1) {
            if (!place(a, bx, lhs)) return false;
          } else if (rhs != -1) {
            if (!place(c, x, rhs)) return false;
          }
        }
        int xa = table[x][a];
        if (xa != -1) {
          int lhs = table[xa][b];
          int rhs = table[x][c];
          if (lhs != -1 && rhs != -1) {
            if (lhs != rhs) return false;
          } else if (lhs != -1) {
            if (!place(x, c, lhs)) return false;
          } else if (rhs != -1) {
            if (!place(xa, b, rhs)) return false;
          }
        }
      }
    }
    return true;
  }

  bool place(int i, int j, int v) {
    if (table[i][j] != -1) return table[i][j] == v;
    if ((row_used[i] >> v & 1) || (col_used[j] >> v & 1)) return false;
    set_cell(i, j, v);
    return true;
  }

  bool fully_associative() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]]) return false;
    return true;
  }

  void search() {
    int best_i = -1, best_j = -1, best_count = n + 1;
    for (int i = 1; i < n && best_count > 1; ++i) {
      for (int j = 1; j < n; ++j) {
        if (table[i][j] != -1) continue;
        int count = 0;
        std::uint32_t used = row_used[i] | col_used[j];
        for (int v = 0; v < n; ++v)
          if (!(used >> v & 1)) ++count;
        if (count < best_count) {
          best_count = count;
          best_i = i;
          best_j = j;
          if (count == 0) break;
        }
      }
    }
    if (best_i == -1) {
      if (fully_associative()) out->push_back(table);
      return;
    }
    std::uint32_t used = row_used[best_i] | col_used[best_j];
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      std::size_t mark = trail.size();
      if (assign(best_i, best_j, v)) search();
      undo_to(mark);
    }
  }
};

inline std::vector<int> element_orders(const Table& table) {
  int n = static_cast<int>(table.size());
  std::vector<int> orders(n);
  for (int i = 0; i < n; ++i) {
    int power = i;
    int order = 1;
    while (power != 0) {
      power = table[power][i];
      ++order;
    }
    orders[i] = order;
  }
  return orders;
}

inline bool is_abelian(const Table& table) {
  int n = static_cast<int>(table.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (table[i][j] != table[j][i]) return false;
  return true;
}

// Generating sequence of the table group, greedy closure.
inline std::vector<int> generating_sequence(const Table& table) {
  int n = static_cast<int>(table.size());
  std::vector<int> gens;
  std::vector<bool> reached(n, false);
  auto close = [&]() {
    std::fill(reached.begin(), reached.end(), false);
    reached[0] = true;
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (int g : gens) {
        int y = table[x][g];
        if (!reached[y]) {
          reached[y] = true;
          frontier.push_back(y);
        }
      }
    }
  };
  close();
  for (int i = 0; i < n; ++i) {
    if (reached[i]) continue;
    gens.push_back(i);
    close();
  }
  return gens;
}

inline bool extends(const Table& a, const Table& b, const std::vector<int>& gens,
                    const std::vector<int>& images) {
  int n = static_cast<int>(a.size());
  std::vector<int> image_of(n, -1);
  std::vector<bool> used(n, false);
  image_of[0] = 0;
  used[0] = true;
  std::vector<int> frontier{0};
  int visited = 1;
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (std::size_t t = 0; t < gens.size(); ++t) {
      int y = a[x][gens[t]];
      int image = b[image_of[x]][images[t]];
      if (image_of[y] == -1) {
        if (used[image]) return false;
        image_of[y] = image;
        used[image] = true;
        frontier.push_back(y);
        ++visited;
      } else if (image_of[y] != image) {
        return false;
      }
    }
  }
  return visited == n;
}

inline bool tables_isomorphic(const Table& a, const Table& b) {
  std::vector<int> orders_a = element_orders(a);
  std::vector<int> orders_b = element_orders(b);
  std::vector<int> gens = generating_sequence(a);
  if (gens.empty()) return true;
  std::vector<int> images(gens.size());
  int n = static_cast<int>(a.size());
  auto backtrack = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) return extends(a, b, gens, images);
    for (int candidate = 1; candidate < n; ++candidate) {
      if (orders_b[candidate] != orders_a[gens[depth]]) continue;
      images[depth] = candidate;
      std::vector<int> prefix_gens(gens.begin(), gens.begin() + depth + 1);
      std::vector<int> prefix_images(images.begin(), images.begin() + depth + 1);
      // Partial consistency: the prefix must embed its generated subgroup.
      std::vector<int> image_of(n, -1);
      std::vector<bool> used(n, false);
      image_of[0] = 0;
      used[0] = true;
      std::vector<int> frontier{0};
      bool ok = true;
      while (ok && !frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (std::size_t t = 0; t < prefix_gens.size() && ok; ++t) {
          int y = a[x][prefix_gens[t]];
          int image = b[image_of[x]][prefix_images[t]];
          if (image_of[y] == -1) {
            if (used[image]) {
              ok = false;
            } else {
              image_of[y] = image;
              used[image] = true;
              frontier.push_back(y);
            }
          } else if (image_of[y] != image) {
            ok = false;
          }
        }
      }
      if (ok && self(self, depth + 1)) return true;
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

}  // namespace detail

/// Number of isomorphism classes of groups of order n, found by
/// exhaustive Cayley-table enumeration.  Intended for n <= 8.
inline std::size_t count_group_classes(int n) {
  if (n == 1) return 1;
  std::vector<Table> tables;
  detail::Enumerator enumerator(n, &tables);
  enumerator.search();

  struct ClassRep {
    Table table;
    std::vector<int> profile;
    bool abelian;
  };
  std::vector<ClassRep> classes;
  for (const Table& table : tables) {
    std::vector<int> profile = detail::element_orders(table);
    std::sort(profile.begin(), profile.end());
    bool abelian = detail::is_abelian(table);
    bool known = false;
    for (const ClassRep& rep : classes) {
      if (rep.profile != profile || rep.abelian != abelian) continue;
      if (detail::tables_isomorphic(rep.table, table)) {
        known = true;
        break;
      }
    }
    if (!known) classes.push_back({table, std::move(profile), abelian});
  }
  return classes.size();
}

/// Total number of complete Cayley tables with identity fixed (a much
/// finer count than the class count; useful as a secondary invariant).
inline std::size_t count_tables(int n) {
  if (n == 1) return 1;
  std::vector<Table> tables;
  detail::Enumerator enumerator(n, &tables);
  enumerator.search();
  return tables.size();
}

}  // namespace cayley_oracle
