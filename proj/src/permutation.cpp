#include "qcycle/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcycle {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation value " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw std::invalid_argument("duplicate value " + std::to_string(v) + " in permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

Permutation make_permutation(std::vector<int> values) { return Permutation(std::move(values)); }

namespace {

int parse_int(std::string_view token) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed permutation entry '" + std::string(token) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      values.push_back(parse_int(trim(text.substr(start, comma - start))));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument(std::string("malformed permutation character '") + c + "'");
      }
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

std::string to_string(const Permutation& perm) {
  std::string out;
  const bool digits = perm.size() <= 9;
  for (int i = 1; i <= perm.size(); ++i) {
    if (!digits && i > 1) out += ',';
    out += std::to_string(perm(i));
  }
  return out;
}

CycleDecomposition cycle_decomposition(const Permutation& perm) {
  const int n = perm.size();
  CycleDecomposition result;
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  // Starting each walk at the smallest unvisited element puts the minimum first.
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !visited[x]; x = perm(x)) {
      visited[x] = true;
      cycle.push_back(x);
    }
    result.cycles.push_back(std::move(cycle));
  }
  std::reverse(result.cycles.begin(), result.cycles.end());
  return result;
}

Permutation from_cycles(const CycleDecomposition& cycles) {
  std::size_t n = 0;
  for (const auto& cycle : cycles.cycles) n += cycle.size();
  std::vector<int> values(n, 0);
  for (const auto& cycle : cycles.cycles) {
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const int from = cycle[j];
      if (from < 1 || static_cast<std::size_t>(from) > n || values[from - 1] != 0) {
        throw std::invalid_argument("cycles do not partition 1.." + std::to_string(n));
      }
      values[from - 1] = cycle[(j + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(values));
}

std::string to_string(const CycleDecomposition& cycles) {
  std::ostringstream out;
  for (const auto& cycle : cycles.cycles) {
    out << '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j > 0) out << ',';
      out << cycle[j];
    }
    out << ')';
  }
  return out.str();
}

namespace {

// Canonical cycles start at their minimum, so cyclic equality with
// (i, i+1, ..., i+q-1) reduces to cycle[j] == cycle[0] + j.
bool is_adjacent(const std::vector<int>& cycle) {
  for (std::size_t j = 1; j < cycle.size(); ++j) {
    if (cycle[j] != cycle[0] + static_cast<int>(j)) return false;
  }
  return true;
}

}  // namespace

int adjacent_q_cycle_count(const Permutation& perm, int q) {
  if (q < 1) throw std::invalid_argument("cycle length q must be positive");
  if (q > perm.size()) return 0;
  int count = 0;
  for (const auto& cycle : cycle_decomposition(perm).cycles) {
    if (static_cast<int>(cycle.size()) == q && is_adjacent(cycle)) ++count;
  }
  return count;
}

int QCycleProfile::count(int q) const {
  if (q < 1 || q > max_q()) return 0;
  return counts_[static_cast<std::size_t>(q)];
}

QCycleProfile q_cycle_profile(const Permutation& perm) {
  QCycleProfile profile(perm.size());
  for (const auto& cycle : cycle_decomposition(perm).cycles) {
    if (is_adjacent(cycle)) profile.add(static_cast<int>(cycle.size()));
  }
  return profile;
}

std::vector<int> left_to_right_minima(const Permutation& perm) {
  std::vector<int> positions;
  int minimum = perm.size() + 1;
  for (int i = 1; i <= perm.size(); ++i) {
    if (perm(i) < minimum) {
      minimum = perm(i);
      positions.push_back(i);
    }
  }
  return positions;
}

std::vector<int> strong_fixed_points(const Permutation& perm) {
  const int n = perm.size();
  // suffix_min[i] = min of perm(i..n)
  std::vector<int> suffix_min(static_cast<std::size_t>(n) + 2, n + 1);
  for (int i = n; i >= 1; --i) suffix_min[i] = std::min(perm(i), suffix_min[i + 1]);

  std::vector<int> positions;
  int prefix_max = 0;
  for (int i = 1; i <= n; ++i) {
    if (perm(i) == i && prefix_max < i && suffix_min[i + 1] > i) positions.push_back(i);
    prefix_max = std::max(prefix_max, perm(i));
  }
  return positions;
}

Symmetry parse_symmetry(std::string_view name) {
  if (name == "reverse") return Symmetry::reverse;
  if (name == "inverse") return Symmetry::inverse;
  if (name == "complement") return Symmetry::complement;
  throw std::invalid_argument("unknown symmetry '" + std::string(name) + "'");
}

std::string_view to_string(Symmetry op) {
  switch (op) {
    case Symmetry::reverse: return "reverse";
    case Symmetry::inverse: return "inverse";
    case Symmetry::complement: return "complement";
  }
  return "?";
}

Permutation apply_symmetry(const Permutation& perm, Symmetry op) {
  const int n = perm.size();
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    switch (op) {
      case Symmetry::reverse: values[i - 1] = perm(n + 1 - i); break;
      case Symmetry::complement: values[i - 1] = n + 1 - perm(i); break;
      case Symmetry::inverse: values[perm(i) - 1] = i; break;
    }
  }
  return Permutation(std::move(values));
}

Permutation direct_sum(const Permutation& alpha, const Permutation& beta) {
  std::vector<int> values(alpha.values().begin(), alpha.values().end());
  for (int v : beta.values()) values.push_back(v + alpha.size());
  return Permutation(std::move(values));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  if (n == 0) {
    visit(Permutation());
    return;
  }
  for (int first = 1; first <= n; ++first) for_each_permutation_starting_with(n, first, visit);
}

void for_each_permutation_starting_with(int n, int first,
                                        const std::function<void(const Permutation&)>& visit) {
  if (n < 1 || first < 1 || first > n) {
    throw std::invalid_argument("first entry out of range");
  }
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  values.push_back(first);
  for (int v = 1; v <= n; ++v) {
    if (v != first) values.push_back(v);
  }
  do {
    visit(Permutation(values));
  } while (std::next_permutation(values.begin() + 1, values.end()));
}

}  // namespace qcycle
