#include "wpspec/weights.hpp"

#include <algorithm>
#include <sstream>

namespace wpspec {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateWeight: return "DuplicateWeight";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::StrictViolation: return "StrictViolation";
    case ErrorKind::TooFewWeights: return "TooFewWeights";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::InvalidSum: return "InvalidSum";
    case ErrorKind::NonTriangularCardinality: return "NonTriangularCardinality";
    case ErrorKind::NonIsotropicWitness: return "NonIsotropicWitness";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::PowerOfTwoD: return "PowerOfTwoD";
    case ErrorKind::NoIntegerSolution: return "NoIntegerSolution";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + detail), kind_(kind) {}

IntegerMultiset::IntegerMultiset(std::vector<BigInt> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
}

std::size_t IntegerMultiset::count(const BigInt& x) const {
  auto [lo, hi] = std::equal_range(elements_.begin(), elements_.end(), x);
  return static_cast<std::size_t>(hi - lo);
}

bool IntegerMultiset::has_repeats() const {
  return std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end();
}

bool WeightVector::all_odd() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const BigInt& n) { return mpz_odd_p(n.get_mpz_t()) != 0; });
}

std::string WeightVector::to_string() const { return "(" + join(values_, ",") + ")"; }

WeightVector validate_weights(std::span<const BigInt> raw, bool strict) {
  if (raw.size() < 2) {
    throw Error(ErrorKind::TooFewWeights, ": need at least two weights, got " +
                                              std::to_string(raw.size()));
  }
  std::vector<BigInt> w(raw.begin(), raw.end());
  for (const auto& n : w) {
    if (n <= 0) throw Error(ErrorKind::NonPositive, "(" + n.get_str() + ")");
  }
  std::sort(w.begin(), w.end());
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) throw Error(ErrorKind::DuplicateWeight, "(" + w[i].get_str() + ")");
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (gcd(w[i], w[j]) != 1) {
        throw Error(ErrorKind::NotCoprime, "(" + w[i].get_str() + "," + w[j].get_str() + ")");
      }
    }
  }
  const bool all_above_one = w.front() > 1;
  if (strict && !all_above_one) {
    throw Error(ErrorKind::StrictViolation, ": weight 1 is not allowed in strict mode");
  }
  return WeightVector(std::move(w), all_above_one);
}

WeightVector validate_weights(std::initializer_list<long> raw, bool strict) {
  std::vector<BigInt> v;
  v.reserve(raw.size());
  for (long x : raw) v.emplace_back(x);
  return validate_weights(v, strict);
}

std::size_t triangular_root(std::size_t n) noexcept {
  for (std::size_t d = 2;; ++d) {
    const std::size_t t = d * (d - 1) / 2;
    if (t == n) return d;
    if (t > n) return 0;
  }
}

PairSumMultiset::PairSumMultiset(std::vector<BigInt> sums) : sums_(std::move(sums)) {
  d_ = triangular_root(sums_.size());
  if (d_ == 0) {
    throw Error(ErrorKind::NonTriangularCardinality,
                ": " + std::to_string(sums_.size()) + " sums is not C(d,2) for any d >= 2");
  }
  if (sums_.elements().front() < 2) {
    throw Error(ErrorKind::InvalidSum,
                "(" + sums_.elements().front().get_str() + "): pair sums must be >= 2");
  }
}

IntegerMultiset pairwise_sums(std::span<const BigInt> values) {
  std::vector<BigInt> out;
  out.reserve(values.size() * (values.size() - 1) / 2);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) out.push_back(values[i] + values[j]);
  }
  return IntegerMultiset(std::move(out));
}

PairSumMultiset pair_sums(const WeightVector& w) {
  return PairSumMultiset(pairwise_sums(w.values()).elements());
}

BigInt gcd_multi(std::span<const BigInt> xs) {
  if (xs.empty()) throw Error(ErrorKind::EmptySet, ": gcd of an empty set");
  BigInt g = 0;
  for (const auto& x : xs) {
    if (x <= 0) throw Error(ErrorKind::NonPositive, "(" + x.get_str() + ")");
    g = gcd(g, x);
  }
  return g;
}

bool pairwise_coprime(std::span<const BigInt> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (gcd(values[i], values[j]) != 1) return false;
    }
  }
  return true;
}

std::string join(std::span<const BigInt> values, std::string_view sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i].get_str();
  }
  return os.str();
}

}  // namespace wpspec
