#pragma once

// Exceptional stabilizer orders of the circle action on the Grassmannian of
// 2-planes in R^{2d}, enumerated through their combinatorial witnesses.

#include "wpspec/weights.hpp"

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace wpspec {

/// A base index r together with disjoint index sets S1, S2 inside {r+1..d}.
/// sigma_m = |N_m - N_r| for m in S1 and N_m + N_r for m in S2; k is their gcd.
/// All indices are 1-based positions in the sorted weight vector.
struct StabilizerWitness {
  std::size_t r = 0;
  std::vector<std::size_t> s1;
  std::vector<std::size_t> s2;
  std::vector<std::pair<std::size_t, BigInt>> sigma;  // ascending m
  BigInt k;

  bool isotropic() const noexcept { return !s2.empty(); }
  std::size_t support_size() const noexcept { return s1.size() + s2.size(); }
  /// S1 empty and S2 a singleton: the exceptional geodesic of the line X_{r,m}.
  bool is_pair_witness() const noexcept { return s1.empty() && s2.size() == 1; }

  friend bool operator==(const StabilizerWitness& a, const StabilizerWitness& b) {
    return a.r == b.r && a.s1 == b.s1 && a.s2 == b.s2 && a.k == b.k;
  }
};

/// Ordering used for catalogs: by r, then S2, then S1.
bool witness_less(const StabilizerWitness& a, const StabilizerWitness& b);

struct WitnessCatalog {
  std::vector<StabilizerWitness> witnesses;
  bool isotropic_only = true;

  std::set<BigInt> orders() const;
};

/// Every (r, S1, S2) whose gcd exceeds 2. With isotropic_only, S2 must be
/// non-empty (the plane must be isotropic for a horizontal geodesic).
/// Cost is O(d * 3^(d-1)); d is capped at 24.
WitnessCatalog enumerate_witnesses(const WeightVector& w, bool isotropic_only);

/// Independent check of the achievable orders: for every (r, S1, S2) it finds
/// the largest common divisor by downward trial division from N_{d-1}+N_d.
std::set<BigInt> oracle_stabilizer_orders(const WeightVector& w, bool isotropic_only);

/// Real dimension 2|S1 u S2| - 2 of the family of closed geodesics sharing
/// the witness shape. Throws NonIsotropicWitness when S2 is empty.
std::size_t family_dimension(const StabilizerWitness& witness);

}  // namespace wpspec
