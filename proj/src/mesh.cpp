#include "qcycle/mesh.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qcycle {

MeshPattern::MeshPattern(Permutation word, std::vector<Cell> shaded)
    : word_(std::move(word)), shaded_(std::move(shaded)) {
  const int k = word_.size();
  for (const Cell& cell : shaded_) {
    if (cell.col < 0 || cell.col > k || cell.row < 0 || cell.row > k) {
      throw std::invalid_argument("cell " + std::to_string(cell.col) + "," +
                                  std::to_string(cell.row) + " outside the " +
                                  std::to_string(k + 1) + "x" + std::to_string(k + 1) + " grid");
    }
  }
  std::sort(shaded_.begin(), shaded_.end());
  shaded_.erase(std::unique(shaded_.begin(), shaded_.end()), shaded_.end());
}

bool MeshPattern::is_shaded(Cell cell) const {
  return std::binary_search(shaded_.begin(), shaded_.end(), cell);
}

namespace {

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("malformed " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

Cell parse_cell(std::string_view token) {
  const std::size_t comma = token.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("malformed cell '" + std::string(token) + "'");
  }
  return {parse_int(token.substr(0, comma), "cell"), parse_int(token.substr(comma + 1), "cell")};
}

std::vector<Cell> all_cells(int k) {
  std::vector<Cell> cells;
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= k; ++b) cells.push_back({a, b});
  }
  return cells;
}

std::vector<Cell> all_cells_except(int k, std::initializer_list<Cell> excluded) {
  std::vector<Cell> cells = all_cells(k);
  std::erase_if(cells, [&](const Cell& c) {
    return std::find(excluded.begin(), excluded.end(), c) != excluded.end();
  });
  return cells;
}

}  // namespace

MeshPattern parse_pattern(std::string_view text) {
  text = trim(text);
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) {
    if (text.starts_with("r:")) return r_pattern(parse_int(text.substr(2), "pattern length"));
    if (text.starts_with("s:")) return s_pattern(parse_int(text.substr(2), "pattern length"));
    return named_pattern(text);
  }

  Permutation word = parse_permutation(text.substr(0, bar));
  std::vector<Cell> cells;
  std::istringstream tokens{std::string(text.substr(bar + 1))};
  std::string token;
  while (tokens >> token) cells.push_back(parse_cell(token));
  return MeshPattern(std::move(word), std::move(cells));
}

std::string to_string(const MeshPattern& pattern) {
  std::string out = to_string(pattern.word()) + "|";
  bool first = true;
  for (const Cell& cell : pattern.shaded()) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(cell.col) + "," + std::to_string(cell.row);
  }
  return out;
}

namespace {

// Depth-first extension over host positions; a partial selection survives
// only while it stays order-isomorphic to the pattern word. Complete
// candidates are then checked against every shaded region.
class OccurrenceSearch {
 public:
  OccurrenceSearch(const MeshPattern& pattern, const Permutation& host)
      : pattern_(pattern), host_(host), k_(pattern.size()), n_(host.size()),
        chosen_(static_cast<std::size_t>(k_)),
        word_inverse_(apply_symmetry(pattern.word(), Symmetry::inverse)) {}

  // Calls visit for each occurrence in lexicographic order; stops early when
  // visit returns false.
  void run(const std::function<bool(const std::vector<int>&)>& visit) {
    if (k_ > n_) return;
    visit_ = &visit;
    extend(0, 1);
  }

 private:
  bool extend(int depth, int first_position) {
    if (depth == k_) {
      if (!shading_respected()) return true;
      return (*visit_)(chosen_);
    }
    // Leave room for the remaining k - depth - 1 entries.
    const int last_position = n_ - (k_ - depth - 1);
    for (int position = first_position; position <= last_position; ++position) {
      if (!order_consistent(depth, host_(position))) continue;
      chosen_[depth] = position;
      if (!extend(depth + 1, position + 1)) return false;
    }
    return true;
  }

  bool order_consistent(int depth, int value) const {
    const int pattern_value = pattern_.word()(depth + 1);
    for (int m = 0; m < depth; ++m) {
      const bool host_less = host_(chosen_[m]) < value;
      const bool pattern_less = pattern_.word()(m + 1) < pattern_value;
      if (host_less != pattern_less) return false;
    }
    return true;
  }

  bool shading_respected() const {
    // Region boundaries: column a spans (position_bound(a), position_bound(a+1)),
    // row b spans (value_bound(b), value_bound(b+1)).
    const auto position_bound = [&](int a) {
      if (a == 0) return 0;
      if (a == k_ + 1) return n_ + 1;
      return chosen_[a - 1];
    };
    const auto value_bound = [&](int b) {
      if (b == 0) return 0;
      if (b == k_ + 1) return n_ + 1;
      return host_(chosen_[word_inverse_(b) - 1]);
    };
    for (const Cell& cell : pattern_.shaded()) {
      const int lo_value = value_bound(cell.row);
      const int hi_value = value_bound(cell.row + 1);
      for (int position = position_bound(cell.col) + 1; position < position_bound(cell.col + 1);
           ++position) {
        const int v = host_(position);
        if (v > lo_value && v < hi_value) return false;
      }
    }
    return true;
  }

  const MeshPattern& pattern_;
  const Permutation& host_;
  int k_;
  int n_;
  std::vector<int> chosen_;
  Permutation word_inverse_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

}  // namespace

std::vector<Occurrence> occurrences(const MeshPattern& pattern, const Permutation& host) {
  std::vector<Occurrence> result;
  OccurrenceSearch(pattern, host).run([&](const std::vector<int>& positions) {
    result.push_back({positions});
    return true;
  });
  return result;
}

std::size_t count_occurrences(const MeshPattern& pattern, const Permutation& host) {
  std::size_t count = 0;
  OccurrenceSearch(pattern, host).run([&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

bool avoids(const MeshPattern& pattern, const Permutation& host) {
  bool found = false;
  OccurrenceSearch(pattern, host).run([&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return !found;
}

MeshPattern r_pattern(int q) {
  if (q < 1) throw std::invalid_argument("r_q requires q >= 1");
  return MeshPattern(Permutation::identity(q), all_cells_except(q, {{0, q}}));
}

MeshPattern s_pattern(int q) {
  if (q < 1) throw std::invalid_argument("s_q requires q >= 1");
  std::vector<int> word;
  for (int v = 2; v <= q + 1; ++v) word.push_back(v);
  word.push_back(1);
  const int k = q + 1;
  return MeshPattern(Permutation(std::move(word)),
                     all_cells_except(k, {{0, k}, {k, 0}, {k, 1}, {k, k}}));
}

MeshPattern named_pattern(std::string_view name) {
  if (name == "p") {
    return MeshPattern(parse_permutation("132"), {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 0},
                                                  {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}});
  }
  if (name == "r2'") {
    return MeshPattern(parse_permutation("21"), all_cells_except(2, {{2, 2}}));
  }
  if (name == "s2'") {
    return MeshPattern(parse_permutation("132"),
                       {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3},
                        {2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}});
  }
  if (name == "lrmin") return MeshPattern(Permutation::identity(1), {{0, 0}});
  if (name == "sfp") return MeshPattern(Permutation::identity(1), {{1, 0}, {0, 1}});
  if (name == "ssfp") return MeshPattern(Permutation::identity(1), {{0, 0}, {1, 1}});
  throw std::invalid_argument("unknown pattern name '" + std::string(name) + "'");
}

MeshPattern transform_pattern(const MeshPattern& pattern, Symmetry op) {
  const int k = pattern.size();
  std::vector<Cell> cells;
  cells.reserve(pattern.shaded().size());
  for (const Cell& cell : pattern.shaded()) {
    switch (op) {
      case Symmetry::reverse: cells.push_back({k - cell.col, cell.row}); break;
      case Symmetry::complement: cells.push_back({cell.col, k - cell.row}); break;
      case Symmetry::inverse: cells.push_back({cell.row, cell.col}); break;
    }
  }
  return MeshPattern(apply_symmetry(pattern.word(), op), std::move(cells));
}

}  // namespace qcycle
