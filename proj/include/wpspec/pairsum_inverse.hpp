#pragma once

// Reconstruction of weights from the multiset of pairwise sums.

#include "wpspec/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace wpspec {

/// Strictly increasing positive integers realizing some pair-sum multiset.
/// Coprimality is not required; it is recorded.
struct Candidate {
  std::vector<BigInt> weights;
  bool coprime = false;
  bool strict = false;  // every weight > 1

  static Candidate from_sorted(std::vector<BigInt> weights);

  friend bool operator==(const Candidate& a, const Candidate& b) {
    return a.weights == b.weights;
  }
  friend bool operator<(const Candidate& a, const Candidate& b) {
    return a.weights < b.weights;
  }
};

enum class ReconstructionMethod { Newton, Backtracking, Both };
std::string_view to_string(ReconstructionMethod m) noexcept;

/// Solutions are sorted and duplicate-free. The constructor checks that every
/// solution reproduces the input multiset and throws std::logic_error if not.
class ReconstructionResult {
 public:
  ReconstructionResult(PairSumMultiset input, std::vector<Candidate> solutions,
                       ReconstructionMethod method);

  const PairSumMultiset& input() const noexcept { return input_; }
  const std::vector<Candidate>& solutions() const noexcept { return solutions_; }
  ReconstructionMethod method() const noexcept { return method_; }

 private:
  PairSumMultiset input_;
  std::vector<Candidate> solutions_;
  ReconstructionMethod method_;
};

/// p_k = sum_i N_i^k for k = 0..d, recovered from pair-sum power sums.
struct PowerSumLadder {
  std::size_t d = 0;
  std::vector<Rational> p;  // p[0] == d
};

/// sum over the multiset of s^k. Throws InvalidArgument for k == 0.
BigInt pairsum_power_sum(const PairSumMultiset& sums, unsigned k);

/// Both readings of the coefficient of p_k in
///   sum_{i<j} (N_i+N_j)^k = c * p_k + 1/2 sum_{m=1}^{k-1} C(k,m) p_{k-m} p_m,
/// c = d - 2^k (printed) and c = d - 2^(k-1) (the true identity).
struct IdentityReport {
  std::size_t d = 0;
  unsigned k = 0;
  BigInt lhs;
  BigInt rhs_printed;
  BigInt rhs_corrected;
  bool holds_as_printed = false;
  bool holds_with_corrected_exponent = false;
};

IdentityReport verify_appendix_identity(std::span<const BigInt> values, unsigned k);
IdentityReport verify_appendix_identity(const WeightVector& w, unsigned k);

/// True when d == 2^(k-1) for some k in 1..d, i.e. some ladder coefficient vanishes.
bool ladder_degenerate(std::size_t d) noexcept;

/// Throws PowerOfTwoD when the ladder is degenerate.
PowerSumLadder power_sum_ladder(const PairSumMultiset& sums);

/// Power sums -> elementary symmetric functions e_0..e_d (Newton's identities).
std::vector<Rational> elementary_from_power_sums(const PowerSumLadder& ladder);

/// Unique reconstruction through the power-sum ladder, Newton's identities and
/// exact integer root extraction. Throws PowerOfTwoD or NoIntegerSolution.
ReconstructionResult reconstruct_newton(const PairSumMultiset& sums);

/// Complete search: N1+N2 and N1+N3 are the two smallest sums; every choice of
/// N2+N3 among the rest fixes N1..N3 and then each further weight is forced.
ReconstructionResult reconstruct_backtracking(const PairSumMultiset& sums, bool require_coprime);

struct CollisionQuery {
  std::size_t d = 4;
  std::int64_t max_weight = 0;
  bool require_coprime = false;
  bool require_strict = false;
  /// 0 picks WPSPEC_THREADS from the environment, else hardware concurrency.
  unsigned threads = 0;
};

struct CollisionGroup {
  IntegerMultiset sums;
  std::vector<Candidate> members;  // sorted, size >= 2
};

/// Scans every increasing weight vector with N_d <= max_weight (filtered by the
/// flags) and returns the groups that share a pair-sum multiset, sorted by sums.
std::vector<CollisionGroup> find_collisions(const CollisionQuery& query);

}  // namespace wpspec
