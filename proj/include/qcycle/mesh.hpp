#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qcycle/permutation.hpp"

namespace qcycle {

/// Cell (col, row) of a mesh pattern of length k, 0 <= col,row <= k. It is
/// the open region strictly between the col-th and (col+1)-th chosen positions
/// and strictly between the row-th and (row+1)-th smallest chosen values, with
/// virtual boundaries 0 and n+1 on both axes.
struct Cell {
  int col = 0;
  int row = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class MeshPattern {
 public:
  MeshPattern() = default;

  /// Duplicate cells collapse; throws std::invalid_argument for cells outside
  /// the (k+1)x(k+1) grid.
  MeshPattern(Permutation word, std::vector<Cell> shaded);

  const Permutation& word() const { return word_; }
  int size() const { return word_.size(); }

  /// Sorted, without duplicates.
  const std::vector<Cell>& shaded() const { return shaded_; }
  bool is_shaded(Cell cell) const;

  friend bool operator==(const MeshPattern&, const MeshPattern&) = default;

 private:
  Permutation word_;
  std::vector<Cell> shaded_;
};

/// 1-based host positions, strictly increasing.
struct Occurrence {
  std::vector<int> positions;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Grammar:
///   pattern := builtin | word "|" cells
///   builtin := "r:" INT | "s:" INT | "p" | "r2'" | "s2'" | "lrmin" | "sfp" | "ssfp"
///   cells   := space-separated "a,b" pairs, possibly empty
/// `word` is any permutation text form. Throws std::invalid_argument.
MeshPattern parse_pattern(std::string_view text);

/// Canonical "word|cells" form with cells sorted; parse_pattern reads it back.
std::string to_string(const MeshPattern& pattern);

/// Every occurrence of `pattern` in `host`, in lexicographic position order.
std::vector<Occurrence> occurrences(const MeshPattern& pattern, const Permutation& host);

std::size_t count_occurrences(const MeshPattern& pattern, const Permutation& host);

bool avoids(const MeshPattern& pattern, const Permutation& host);
inline bool contains(const MeshPattern& pattern, const Permutation& host) {
  return !avoids(pattern, host);
}

/// 12...q with every cell shaded except (0, q). Throws for q < 1.
MeshPattern r_pattern(int q);

/// 23...q(q+1)1 with every cell shaded except (0,q+1), (q+1,0), (q+1,1) and
/// (q+1,q+1). Throws for q < 1.
MeshPattern s_pattern(int q);

/// "p", "r2'", "s2'", "lrmin", "sfp" or "ssfp".
MeshPattern named_pattern(std::string_view name);

/// Pattern whose occurrences in apply_symmetry(host, op) correspond one to one
/// with occurrences of `pattern` in host.
MeshPattern transform_pattern(const MeshPattern& pattern, Symmetry op);

}  // namespace qcycle
