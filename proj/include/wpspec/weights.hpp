#pragma once

// Exact integer foundations: weight vectors, pair-sum multisets, gcd.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wpspec {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class ErrorKind {
  DuplicateWeight,
  NotCoprime,
  NonPositive,
  StrictViolation,
  TooFewWeights,
  EmptySet,
  InvalidWeights,
  InvalidSum,
  NonTriangularCardinality,
  NonIsotropicWitness,
  OutOfRange,
  PowerOfTwoD,
  NoIntegerSolution,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Input or precondition failure. what() starts with the kind name, e.g.
/// "NotCoprime(3,6)", so diagnostics can be matched by prefix.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Multiset of integers, stored as a sorted sequence.
class IntegerMultiset {
 public:
  IntegerMultiset() = default;
  explicit IntegerMultiset(std::vector<BigInt> elements);

  const std::vector<BigInt>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  std::size_t count(const BigInt& x) const;
  bool has_repeats() const;

  friend bool operator==(const IntegerMultiset&, const IntegerMultiset&) = default;

 private:
  std::vector<BigInt> elements_;
};

/// Sorted, pairwise coprime, strictly increasing positive weights N_1 < ... < N_d.
/// Indices used elsewhere in the library are 1-based positions in this order.
class WeightVector {
 public:
  const std::vector<BigInt>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const BigInt& operator[](std::size_t i) const { return values_[i]; }
  /// 1-based access, matching the N_1..N_d labels.
  const BigInt& at1(std::size_t index) const { return values_.at(index - 1); }

  /// True when every weight exceeds one.
  bool strict() const noexcept { return strict_; }
  bool all_odd() const;

  std::string to_string() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.values_ == b.values_;
  }

 private:
  friend WeightVector validate_weights(std::span<const BigInt> raw, bool strict);
  WeightVector(std::vector<BigInt> values, bool strict)
      : values_(std::move(values)), strict_(strict) {}

  std::vector<BigInt> values_;
  bool strict_ = false;
};

/// Sorts and checks raw weights. With `strict`, weight 1 is rejected.
/// Throws Error: TooFewWeights, NonPositive, DuplicateWeight, NotCoprime,
/// StrictViolation.
WeightVector validate_weights(std::span<const BigInt> raw, bool strict = true);
WeightVector validate_weights(std::initializer_list<long> raw, bool strict = true);

/// Multiset of C(d,2) sums N_i + N_j, i < j.
class PairSumMultiset {
 public:
  /// Validates cardinality (triangular, d >= 2) and that every sum is >= 2.
  explicit PairSumMultiset(std::vector<BigInt> sums);

  const IntegerMultiset& sums() const noexcept { return sums_; }
  const std::vector<BigInt>& elements() const noexcept { return sums_.elements(); }
  std::size_t size() const noexcept { return sums_.size(); }
  std::size_t declared_d() const noexcept { return d_; }

  friend bool operator==(const PairSumMultiset& a, const PairSumMultiset& b) {
    return a.sums_ == b.sums_;
  }

 private:
  IntegerMultiset sums_;
  std::size_t d_ = 0;
};

PairSumMultiset pair_sums(const WeightVector& w);

/// Pairwise sums of an arbitrary value list (no validation).
IntegerMultiset pairwise_sums(std::span<const BigInt> values);

/// Returns d with d(d-1)/2 == n, or 0 when n is not triangular or d < 2.
std::size_t triangular_root(std::size_t n) noexcept;

/// gcd of a non-empty set of positive integers. Throws EmptySet / NonPositive.
BigInt gcd_multi(std::span<const BigInt> xs);

bool pairwise_coprime(std::span<const BigInt> values);

std::string join(std::span<const BigInt> values, std::string_view sep = ", ");

}  // namespace wpspec
