#pragma once

#include "noedyn/positivity.hpp"

#include <string>
#include <vector>

namespace noedyn {

/// One realizable parameter configuration: singular orbits of lengths N
/// (ascending, length-1 entries mean a_i = 0) at the leading indices, the
/// remaining parameters filled with deterministic non-singular rationals.
struct GridConfig {
    int d;
    int l;                    // orbits of length 1
    std::vector<int> N;       // ascending
    std::vector<Rational> a;  // full parameter vector, sum = 2
};

struct GridEnumeration {
    std::vector<GridConfig> configs;
    int skipped_small_dl;   // d - l < 3 (outside the standing hypothesis)
    int skipped_unfillable; // no deterministic non-singular filler exists
};

/// All configurations with 3 <= d <= d_max, orbit lengths <= n_max and
/// d - l >= 3.
GridEnumeration enumerate_grid(int d_max, int n_max);

struct GridCheck {
    bool charpoly_ok;   // closed form == matrix characteristic polynomial
    bool lemma_ok;      // invariant-class identities (exact, eigen-equation mode)
    bool nef_ok;        // nef <=> |S| <= 1, certificate sign and support
    bool orbits_ok;     // iteration == closed form up to 50, lengths match
    std::string detail; // first failure description, or a vacuity note
    bool ok() const { return charpoly_ok && lemma_ok && nef_ok && orbits_ok; }
};

GridCheck verify_configuration(const GridConfig& cfg);

}  // namespace noedyn
