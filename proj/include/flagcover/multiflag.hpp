#pragma once

#include <cstddef>

#include "flagcover/cover3.hpp"
#include "flagcover/flags.hpp"
#include "flagcover/generating_set.hpp"

namespace flagcover {

/// Worst-case minimum generating-set size for m flags in K^d.
struct MuValue {
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t value = 0;
};

/// d if m = 1 or d = 1; md/2 for even m; md/2 + floor(2d/3) - d/2 for odd
/// m >= 3. Throws InvalidArgument for m = 0 or d = 0.
MuValue mu_formula(std::size_t m, std::size_t d);

/// Even m: union of two-flag bases over the pairs (1,2), (3,4), ...; odd
/// m >= 3: synth3 on flags 1-3 plus pairs of the rest; m = 1: a basis
/// adapted to the flag; d = 1: a single vector. Size is at most
/// mu_formula(m, d).
GeneratingSet synth_m(const FlagTuple& t, const Synth3Options& options = {});

/// ceil(md/2) vectors for a transverse pair or triple, built from the
/// reversal pairing of layers. Throws NotTransverse when `require_transverse`
/// is set and the check fails, InvalidArgument unless m is 2 or 3.
GeneratingSet transverse_synth(const FlagTuple& t, bool require_transverse = true);

}  // namespace flagcover
