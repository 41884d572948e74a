#pragma once

#include "qcycle/permutation.hpp"

namespace qcycle {

// Foata's fundamental transformation. A permutation with k cycles maps to a
// permutation with k left-to-right minima.

/// Writes the canonical cycle decomposition and reads it as one word.
Permutation foata_forward(const Permutation& pi);

/// Cuts the word before each left-to-right minimum; each block is a cycle.
Permutation foata_inverse(const Permutation& sigma);

}  // namespace qcycle
