#include "qcycle/foata.hpp"

namespace qcycle {

Permutation foata_forward(const Permutation& pi) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(pi.size()));
  for (const auto& cycle : cycle_decomposition(pi).cycles) {
    word.insert(word.end(), cycle.begin(), cycle.end());
  }
  return Permutation(std::move(word));
}

Permutation foata_inverse(const Permutation& sigma) {
  CycleDecomposition cycles;
  int minimum = sigma.size() + 1;
  for (int v : sigma.values()) {
    if (v < minimum) {
      minimum = v;
      cycles.cycles.emplace_back();
    }
    cycles.cycles.back().push_back(v);
  }
  return from_cycles(cycles);
}

}  // namespace qcycle
