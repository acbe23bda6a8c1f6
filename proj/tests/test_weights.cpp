#include "wpspec/weights.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace wpspec;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected wpspec::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("validate_weights sorts its input") {
  const WeightVector w = validate_weights({7, 3, 5});
  CHECK(w.values() == ints({3, 5, 7}));
  CHECK(w.strict());
  CHECK(w.all_odd());
  CHECK(w.to_string() == "(3,5,7)");
}

TEST_CASE("validate_weights error clauses") {
  try {
    validate_weights({3, 6, 7});
    FAIL("accepted non-coprime weights");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCoprime);
    CHECK(std::string(e.what()) == "NotCoprime(3,6)");
  }
  CHECK(kind_of([] { validate_weights({1, 2, 3}, true); }) == ErrorKind::StrictViolation);
  CHECK(kind_of([] { validate_weights({5, 5, 7}); }) == ErrorKind::DuplicateWeight);
  CHECK(kind_of([] { validate_weights({0, 5, 7}); }) == ErrorKind::NonPositive);
  CHECK(kind_of([] { validate_weights({-3, 5}); }) == ErrorKind::NonPositive);
  CHECK(kind_of([] { validate_weights({5}); }) == ErrorKind::TooFewWeights);
}

TEST_CASE("weight one is allowed outside strict mode") {
  const WeightVector w = validate_weights({1, 2, 3}, false);
  CHECK_FALSE(w.strict());
  CHECK_FALSE(w.all_odd());
}

TEST_CASE("pair_sums examples") {
  CHECK(pair_sums(validate_weights({3, 5, 7})).elements() == ints({8, 10, 12}));
  CHECK(pair_sums(validate_weights({25, 29, 41, 61})).elements() == ints({54, 66, 70, 86, 90, 102}));
  const PairSumMultiset line = pair_sums(validate_weights({3, 5}));
  CHECK(line.elements() == ints({8}));
  CHECK(line.declared_d() == 2);
}

TEST_CASE("pair_sums is permutation invariant and has C(d,2) elements") {
  std::mt19937 rng(7);
  std::vector<long> base{2, 3, 5, 7, 11, 13, 17, 19};
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + rng() % 7;
    std::vector<BigInt> raw;
    for (std::size_t i = 0; i < d; ++i) raw.emplace_back(base[i] * (1 + static_cast<long>(rng() % 3 == 0)));
    // Multiplying by 2 may break coprimality; only keep valid vectors.
    if (!pairwise_coprime(raw)) continue;
    const PairSumMultiset sorted = pair_sums(validate_weights(raw));
    std::shuffle(raw.begin(), raw.end(), rng);
    CHECK(pair_sums(validate_weights(raw)) == sorted);
    CHECK(sorted.size() == d * (d - 1) / 2);
    CHECK(sorted.declared_d() == d);
  }
}

TEST_CASE("gcd_multi examples and errors") {
  CHECK(gcd_multi(ints({8, 16})) == 8);
  CHECK(gcd_multi(ints({8, 10})) == 2);
  CHECK(gcd_multi(ints({12})) == 12);
  CHECK(kind_of([] { gcd_multi({}); }) == ErrorKind::EmptySet);
  CHECK(kind_of([] { gcd_multi(ints({4, 0})); }) == ErrorKind::NonPositive);
}

TEST_CASE("gcd_multi divides every element; coprime weights have gcd 1") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> xs;
    const long scale = 1 + static_cast<long>(rng() % 12);
    for (int i = 0; i < 1 + static_cast<int>(rng() % 5); ++i) {
      xs.emplace_back(scale * (1 + static_cast<long>(rng() % 40)));
    }
    const BigInt g = gcd_multi(xs);
    for (const auto& x : xs) CHECK(x % g == 0);
    CHECK(g % scale == 0);
  }
  CHECK(gcd_multi(validate_weights({4, 9, 25, 49}).values()) == 1);
}

TEST_CASE("PairSumMultiset cardinality and element checks") {
  CHECK(kind_of([] { PairSumMultiset(ints({8, 10})); }) == ErrorKind::NonTriangularCardinality);
  CHECK(kind_of([] { PairSumMultiset({}); }) == ErrorKind::NonTriangularCardinality);
  CHECK(kind_of([] { PairSumMultiset(ints({1, 5, 6})); }) == ErrorKind::InvalidSum);
  CHECK(PairSumMultiset(ints({12, 8, 10})).declared_d() == 3);
  CHECK(triangular_root(6) == 4);
  CHECK(triangular_root(7) == 0);
  CHECK(triangular_root(1) == 2);
}

TEST_CASE("IntegerMultiset equality is order independent and multiplicity sensitive") {
  CHECK(IntegerMultiset(ints({3, 1, 2})) == IntegerMultiset(ints({1, 2, 3})));
  CHECK_FALSE(IntegerMultiset(ints({1, 1, 2})) == IntegerMultiset(ints({1, 2, 2})));
  CHECK(IntegerMultiset(ints({20, 20, 5})).count(BigInt(20)) == 2);
  CHECK(IntegerMultiset(ints({20, 20, 5})).has_repeats());
}
