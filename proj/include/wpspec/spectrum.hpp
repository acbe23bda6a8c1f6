#pragma once

// Weighted length spectrum of X = S^{2d-1}/S^1 and the hearability decision
// for the pairwise sums N_i + N_j.

#include "wpspec/pairsum_inverse.hpp"
#include "wpspec/stabilizers.hpp"
#include "wpspec/weights.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wpspec {

enum class GeodesicKind { Generic, Polar, Desirable, Undesirable };
std::string_view to_string(GeodesicKind kind) noexcept;

/// All closed geodesics of length 2*pi/k. A Desirable class may also carry
/// undesirable witnesses when an exceptional family happens to share its k.
struct GeodesicClass {
  BigInt k;
  GeodesicKind kind = GeodesicKind::Generic;
  std::vector<std::pair<std::size_t, std::size_t>> desirable_pairs;  // 1-based (i, j)
  bool has_undesirable = false;
  /// Unset for the polar class, whose family dimension is not modelled.
  std::optional<std::size_t> max_family_dimension;
  std::vector<StabilizerWitness> witnesses;

  /// Length in units of 2*pi.
  Rational length() const { return Rational(1) / Rational(k); }
  /// "2π/8", "π", "2π".
  std::string length_text() const;

  friend bool operator==(const GeodesicClass&, const GeodesicClass&) = default;
};

struct LengthSpectrum {
  WeightVector weights;
  std::vector<GeodesicClass> classes;  // strictly decreasing k
  bool all_odd = false;
  std::vector<std::string> diagnostics;

  const GeodesicClass* find(const BigInt& k) const;
  /// k values of the exceptional (k > 2) classes, largest first.
  std::vector<BigInt> exceptional_orders() const;
  /// k values of classes that carry at least one undesirable witness.
  std::vector<BigInt> undesirable_orders() const;

  friend bool operator==(const LengthSpectrum& a, const LengthSpectrum& b) {
    return a.weights == b.weights && a.classes == b.classes && a.all_odd == b.all_odd;
  }
};

/// Weighted projective line with weights p < q: generic geodesics, polar
/// geodesics when a weight is even, and the exceptional geodesic 2*pi/(p+q).
/// p == 1 is accepted with a diagnostic. Throws NotCoprime, OutOfRange.
LengthSpectrum line_spectrum_d2(const BigInt& p, const BigInt& q);

LengthSpectrum length_spectrum(const WeightVector& w);

struct SufficientCondition {
  bool holds = false;
  bool max_within_twice_min = false;  // N_d <= 2 N_1
  bool distinct_pair_sums = false;
  std::optional<BigInt> repeated_sum;
  std::string certificate;
};

/// N_d <= 2 N_1 and no repeated pair sum: then the pair sums are the C(d,2)
/// largest stabilizer orders.
SufficientCondition check_sufficient_condition(const WeightVector& w);

enum class SumStatus { StrictlyShortest, DominatedCoincidence, Ambiguous };
std::string_view to_string(SumStatus s) noexcept;

enum class Verdict { UniqueWeights, FinitelyManyCandidates, Unknown };
std::string_view to_string(Verdict v) noexcept;

struct PairStatus {
  std::size_t i = 0;
  std::size_t j = 0;
  BigInt sum;
  SumStatus status = SumStatus::StrictlyShortest;
};

struct HearabilityReport {
  WeightVector weights;
  std::optional<PairSumMultiset> heard_pair_sums;
  std::vector<PairStatus> per_sum_status;
  std::vector<Candidate> determined_weights;
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> notes;

  std::size_t candidate_count() const noexcept { return determined_weights.size(); }
};

HearabilityReport hear(const WeightVector& w);

}  // namespace wpspec
