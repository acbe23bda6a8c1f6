#include "wpspec/spectrum.hpp"

#include "sweep.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace wpspec;
using wpspec::testing::for_each_coprime_vector;
using wpspec::testing::ints;

namespace {

std::vector<long> class_orders(const LengthSpectrum& s) {
  std::vector<long> out;
  for (const auto& c : s.classes) out.push_back(c.k.get_si());
  return out;
}

std::vector<GeodesicKind> class_kinds(const LengthSpectrum& s) {
  std::vector<GeodesicKind> out;
  for (const auto& c : s.classes) out.push_back(c.kind);
  return out;
}

using K = GeodesicKind;

}  // namespace

TEST_CASE("line_spectrum_d2: both weights odd") {
  const auto s = line_spectrum_d2(3, 5);
  CHECK(s.all_odd);
  CHECK(class_orders(s) == std::vector<long>{8, 2});
  CHECK(class_kinds(s) == std::vector<K>{K::Desirable, K::Generic});
  CHECK(s.classes[0].length_text() == "2π/8");
  CHECK(s.classes[0].length() == Rational(1, 8));
  CHECK(s.classes[1].length_text() == "π");
}

TEST_CASE("line_spectrum_d2: one weight even") {
  const auto s = line_spectrum_d2(2, 5);
  CHECK_FALSE(s.all_odd);
  CHECK(class_orders(s) == std::vector<long>{7, 2, 1});
  CHECK(class_kinds(s) == std::vector<K>{K::Desirable, K::Polar, K::Generic});
  CHECK(s.classes[2].length_text() == "2π");
  CHECK_FALSE(s.classes[1].max_family_dimension.has_value());
}

TEST_CASE("line_spectrum_d2 errors and weight one") {
  CHECK_THROWS_AS(line_spectrum_d2(3, 6), Error);
  try {
    line_spectrum_d2(5, 3);
    FAIL("p > q accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
  CHECK_THROWS_AS(line_spectrum_d2(0, 3), Error);
  const auto s = line_spectrum_d2(1, 4);
  CHECK(class_orders(s) == std::vector<long>{5, 2, 1});
  CHECK(s.diagnostics.size() == 1);
}

TEST_CASE("length_spectrum (3,5,7)") {
  const auto s = length_spectrum(validate_weights({3, 5, 7}));
  CHECK(class_orders(s) == std::vector<long>{12, 10, 8, 4, 2});
  CHECK(class_kinds(s) == std::vector<K>{K::Desirable, K::Desirable, K::Desirable, K::Undesirable, K::Generic});
  CHECK(s.classes[0].desirable_pairs == std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}});
  for (int i = 0; i < 3; ++i) CHECK(s.classes[i].max_family_dimension == 0);
  CHECK(s.classes[3].max_family_dimension == 2);
  CHECK(s.classes[3].has_undesirable);
}

TEST_CASE("length_spectrum (3,5,13): desirable class shared with a 2-parameter family") {
  const auto s = length_spectrum(validate_weights({3, 5, 13}));
  const auto* eight = s.find(8);
  REQUIRE(eight != nullptr);
  CHECK(eight->kind == K::Desirable);
  CHECK(eight->has_undesirable);
  CHECK(eight->desirable_pairs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}});
  CHECK(eight->max_family_dimension == 2);
  CHECK(eight->witnesses.size() == 2);
}

TEST_CASE("d = 2 spectra agree with the line formula") {
  for_each_coprime_vector(2, 2, 40, [](const WeightVector& w) {
    CHECK(length_spectrum(w) == line_spectrum_d2(w[0], w[1]));
  });
}

TEST_CASE("repeated pair sums merge into one desirable class") {
  // 3+17 = 7+13
  const auto s = length_spectrum(validate_weights({3, 7, 13, 17}));
  const auto* twenty = s.find(20);
  REQUIRE(twenty != nullptr);
  CHECK(twenty->desirable_pairs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 4}, {2, 3}});
}

TEST_CASE("check_sufficient_condition") {
  const auto ok = check_sufficient_condition(validate_weights({5, 7, 8, 9}));
  CHECK(ok.holds);
  CHECK(ok.distinct_pair_sums);
  const auto wide = check_sufficient_condition(validate_weights({3, 5, 7}));
  CHECK_FALSE(wide.holds);
  CHECK_FALSE(wide.max_within_twice_min);
  CHECK(wide.certificate == "N_d = 7 > 2*N_1 = 6");
  CHECK_FALSE(check_sufficient_condition(validate_weights({17, 37, 49, 53})).holds);
  const auto rep = check_sufficient_condition(validate_weights({11, 13, 17, 19}));  // 11+19 = 13+17
  CHECK_FALSE(rep.holds);
  CHECK(rep.max_within_twice_min);
  CHECK(rep.repeated_sum == BigInt(30));
}

TEST_CASE("hear examples") {
  const auto a = hear(validate_weights({3, 5, 7}));
  REQUIRE(a.heard_pair_sums.has_value());
  CHECK(a.heard_pair_sums->elements() == ints({8, 10, 12}));
  CHECK(a.verdict == Verdict::UniqueWeights);
  REQUIRE(a.determined_weights.size() == 1);
  CHECK(a.determined_weights[0].weights == ints({3, 5, 7}));

  const auto b = hear(validate_weights({3, 5, 13}));
  CHECK(b.heard_pair_sums->elements() == ints({8, 16, 18}));
  REQUIRE(b.per_sum_status.size() == 3);
  CHECK(b.per_sum_status[0].i == 1);
  CHECK(b.per_sum_status[0].j == 2);
  CHECK(b.per_sum_status[0].status == SumStatus::DominatedCoincidence);
  CHECK(b.per_sum_status[1].status == SumStatus::StrictlyShortest);
  CHECK(b.verdict == Verdict::UniqueWeights);

  const auto c = hear(validate_weights({3, 5, 7, 11}));
  CHECK(c.heard_pair_sums->elements() == ints({8, 10, 12, 14, 16, 18}));
  CHECK(c.verdict == Verdict::FinitelyManyCandidates);
  REQUIRE(c.candidate_count() == 2);
  CHECK(c.determined_weights[0].weights == ints({2, 6, 8, 10}));
  CHECK_FALSE(c.determined_weights[0].coprime);
  CHECK(c.determined_weights[1].weights == ints({3, 5, 7, 11}));
  CHECK(c.determined_weights[1].coprime);

  const auto line = hear(validate_weights({3, 5}));
  CHECK(line.verdict == Verdict::FinitelyManyCandidates);
  CHECK(line.candidate_count() == 3);  // (1,7) (2,6) (3,5)
}

TEST_CASE("d = 3 and d = 4: the pair sums are always heard") {
  for (std::size_t d : {3u, 4u}) {
    for_each_coprime_vector(d, 2, d == 3 ? 30 : 22, [](const WeightVector& w) {
      const auto rep = hear(w);
      REQUIRE(rep.heard_pair_sums.has_value());
      CHECK(*rep.heard_pair_sums == pair_sums(w));
      CHECK(rep.verdict != Verdict::Unknown);
      if (rep.verdict == Verdict::UniqueWeights) CHECK(rep.determined_weights[0].weights == w.values());
    });
  }
}

TEST_CASE("d >= 5 decision rule") {
  std::size_t unknown = 0;
  std::size_t heard = 0;
  for_each_coprime_vector(5, 2, 19, [&](const WeightVector& w) {
    const auto rep = hear(w);
    const auto spectrum = length_spectrum(w);
    const auto sums = pair_sums(w);
    bool rule = true;
    for (const auto& k : spectrum.undesirable_orders()) {
      rule = rule && (sums.sums().count(k) > 0 || k < sums.elements().front());
    }
    CHECK(rep.heard_pair_sums.has_value() == rule);
    if (rep.heard_pair_sums) {
      ++heard;
      CHECK(rep.verdict == Verdict::UniqueWeights);
      CHECK(rep.determined_weights[0].weights == w.values());
    } else {
      ++unknown;
      CHECK(rep.verdict == Verdict::Unknown);
      CHECK(rep.determined_weights.empty());
    }
  });
  CHECK(heard > 0);
  CHECK(unknown > 0);
}

TEST_CASE("spectrum invariants") {
  for (std::size_t d = 2; d <= 5; ++d) {
    for_each_coprime_vector(d, 2, d == 5 ? 17 : 22, [d](const WeightVector& w) {
      const auto s = length_spectrum(w);
      for (std::size_t i = 1; i < s.classes.size(); ++i) CHECK(s.classes[i - 1].k > s.classes[i].k);
      CHECK(std::count_if(s.classes.begin(), s.classes.end(),
                          [](const GeodesicClass& c) { return c.kind == K::Generic; }) == 1);
      // Every pair sum is a desirable class.
      std::size_t pairs = 0;
      for (const auto& c : s.classes) pairs += c.desirable_pairs.size();
      CHECK(pairs == d * (d - 1) / 2);
      for (std::size_t i = 1; i <= d; ++i) {
        for (std::size_t j = i + 1; j <= d; ++j) {
          const auto* c = s.find(w.at1(i) + w.at1(j));
          REQUIRE(c != nullptr);
          CHECK(c->kind == K::Desirable);
        }
      }
      if (d == 4) {
        const auto sums = pair_sums(w).elements();
        CHECK(sums[5] == w.at1(3) + w.at1(4));
        CHECK(sums[4] == w.at1(2) + w.at1(4));
        for (const auto& k : s.undesirable_orders()) {
          CHECK(k <= w.at1(2) + w.at1(3));
          CHECK(k < w.at1(1) + w.at1(4));
        }
      }
      const auto cond = check_sufficient_condition(w);
      if (cond.holds) {
        const auto orders = s.exceptional_orders();
        const auto sums = pair_sums(w).elements();
        std::vector<BigInt> top(orders.begin(), orders.begin() + static_cast<long>(sums.size()));
        std::sort(top.begin(), top.end());
        CHECK(top == sums);
        for (const auto& k : s.undesirable_orders()) CHECK(k < w.at1(1) + w.at1(2));
      }
    });
  }
}

TEST_CASE("spectrum does not depend on the order of the raw weights") {
  std::mt19937 rng(5);
  auto raw = ints({13, 4, 9, 5, 7});
  const auto reference = length_spectrum(validate_weights(raw));
  for (int i = 0; i < 10; ++i) {
    std::shuffle(raw.begin(), raw.end(), rng);
    CHECK(length_spectrum(validate_weights(raw)) == reference);
  }
}
