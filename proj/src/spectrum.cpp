#include "wpspec/spectrum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wpspec {
namespace {

// Dimension of the space of closed geodesics of a (2d-2)-dimensional Zoll
// orbifold: 2(2d-2) - 2.
std::size_t generic_family_dimension(std::size_t d) { return 4 * d - 6; }

// Generic geodesics close up after pi when -I acts trivially (all weights odd);
// otherwise after 2*pi, with the Z_2-stabilized polar geodesics at length pi.
void append_generic_classes(LengthSpectrum& spectrum) {
  const std::size_t d = spectrum.weights.size();
  if (spectrum.all_odd) {
    GeodesicClass generic;
    generic.k = 2;
    generic.kind = GeodesicKind::Generic;
    generic.max_family_dimension = generic_family_dimension(d);
    spectrum.classes.push_back(std::move(generic));
    return;
  }
  GeodesicClass polar;
  polar.k = 2;
  polar.kind = GeodesicKind::Polar;
  spectrum.classes.push_back(std::move(polar));

  GeodesicClass generic;
  generic.k = 1;
  generic.kind = GeodesicKind::Generic;
  generic.max_family_dimension = generic_family_dimension(d);
  spectrum.classes.push_back(std::move(generic));
}

}  // namespace

std::string_view to_string(GeodesicKind kind) noexcept {
  switch (kind) {
    case GeodesicKind::Generic: return "generic";
    case GeodesicKind::Polar: return "polar";
    case GeodesicKind::Desirable: return "desirable";
    case GeodesicKind::Undesirable: return "undesirable";
  }
  return "unknown";
}

std::string_view to_string(SumStatus s) noexcept {
  switch (s) {
    case SumStatus::StrictlyShortest: return "StrictlyShortest";
    case SumStatus::DominatedCoincidence: return "DominatedCoincidence";
    case SumStatus::Ambiguous: return "Ambiguous";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::UniqueWeights: return "UniqueWeights";
    case Verdict::FinitelyManyCandidates: return "FinitelyManyCandidates";
    case Verdict::Unknown: return "Unknown";
  }
  return "unknown";
}

std::string GeodesicClass::length_text() const {
  if (k == 1) return "2π";
  if (k == 2) return "π";
  return "2π/" + k.get_str();
}

const GeodesicClass* LengthSpectrum::find(const BigInt& k) const {
  for (const auto& c : classes) {
    if (c.k == k) return &c;
  }
  return nullptr;
}

std::vector<BigInt> LengthSpectrum::exceptional_orders() const {
  std::vector<BigInt> out;
  for (const auto& c : classes) {
    if (c.kind == GeodesicKind::Desirable || c.kind == GeodesicKind::Undesirable) out.push_back(c.k);
  }
  return out;
}

std::vector<BigInt> LengthSpectrum::undesirable_orders() const {
  std::vector<BigInt> out;
  for (const auto& c : classes) {
    if (c.has_undesirable) out.push_back(c.k);
  }
  return out;
}

LengthSpectrum line_spectrum_d2(const BigInt& p, const BigInt& q) {
  if (p < 1 || q <= p) {
    throw Error(ErrorKind::OutOfRange,
                "(" + p.get_str() + "," + q.get_str() + "): need 1 <= p < q");
  }
  if (gcd(p, q) != 1) {
    throw Error(ErrorKind::NotCoprime, "(" + p.get_str() + "," + q.get_str() + ")");
  }
  const std::vector<BigInt> raw{p, q};
  LengthSpectrum spectrum{validate_weights(raw, false), {}, false, {}};
  spectrum.all_odd = spectrum.weights.all_odd();
  if (p == 1) spectrum.diagnostics.push_back("weight 1 present; outside the standing assumption N_i > 1");

  StabilizerWitness wit;
  wit.r = 1;
  wit.s2 = {2};
  wit.k = p + q;
  wit.sigma.emplace_back(2, wit.k);

  GeodesicClass exceptional;
  exceptional.k = p + q;
  exceptional.kind = GeodesicKind::Desirable;
  exceptional.desirable_pairs = {{1, 2}};
  exceptional.max_family_dimension = 0;
  exceptional.witnesses = {std::move(wit)};
  spectrum.classes.push_back(std::move(exceptional));

  append_generic_classes(spectrum);
  return spectrum;
}

LengthSpectrum length_spectrum(const WeightVector& w) {
  LengthSpectrum spectrum{w, {}, w.all_odd(), {}};
  if (!w.strict()) spectrum.diagnostics.push_back("weight 1 present; outside the standing assumption N_i > 1");

  const WitnessCatalog catalog = enumerate_witnesses(w, /*isotropic_only=*/true);
  std::map<BigInt, GeodesicClass, std::greater<>> by_order;
  for (const auto& wit : catalog.witnesses) {
    GeodesicClass& cls = by_order[wit.k];
    cls.k = wit.k;
    const std::size_t dim = family_dimension(wit);
    cls.max_family_dimension = std::max(cls.max_family_dimension.value_or(0), dim);
    if (wit.is_pair_witness()) {
      cls.desirable_pairs.emplace_back(wit.r, wit.s2.front());
    } else {
      cls.has_undesirable = true;
    }
    cls.witnesses.push_back(wit);
  }
  for (auto& [k, cls] : by_order) {
    std::sort(cls.desirable_pairs.begin(), cls.desirable_pairs.end());
    cls.kind = cls.desirable_pairs.empty() ? GeodesicKind::Undesirable : GeodesicKind::Desirable;
    spectrum.classes.push_back(std::move(cls));
  }
  append_generic_classes(spectrum);
  return spectrum;
}

SufficientCondition check_sufficient_condition(const WeightVector& w) {
  SufficientCondition out;
  const BigInt& smallest = w.values().front();
  const BigInt& largest = w.values().back();
  out.max_within_twice_min = largest <= 2 * smallest;

  const IntegerMultiset sums = pair_sums(w).sums();
  const auto& e = sums.elements();
  auto rep = std::adjacent_find(e.begin(), e.end());
  out.distinct_pair_sums = rep == e.end();
  if (!out.distinct_pair_sums) out.repeated_sum = *rep;

  out.holds = out.max_within_twice_min && out.distinct_pair_sums;
  if (!out.max_within_twice_min) {
    out.certificate = "N_d = " + largest.get_str() + " > 2*N_1 = " + BigInt(2 * smallest).get_str();
  } else if (!out.distinct_pair_sums) {
    out.certificate = "pair sum " + out.repeated_sum->get_str() + " is repeated";
  } else {
    out.certificate = "N_d = " + largest.get_str() + " <= 2*N_1 = " + BigInt(2 * smallest).get_str() +
                      " and all " + std::to_string(e.size()) + " pair sums are distinct";
  }
  return out;
}

HearabilityReport hear(const WeightVector& w) {
  const std::size_t d = w.size();
  const LengthSpectrum spectrum = length_spectrum(w);
  HearabilityReport report{w, std::nullopt, {}, {}, Verdict::Unknown, {}};

  std::set<BigInt> undesirable;
  for (const auto& k : spectrum.undesirable_orders()) undesirable.insert(k);

  // An undesirable family coinciding with a pair sum is heard only if it is a
  // positive-dimensional family, whose wave-trace singularity dominates.
  auto dominated = [&](const BigInt& k) {
    const GeodesicClass* cls = spectrum.find(k);
    if (cls == nullptr) return false;
    for (const auto& wit : cls->witnesses) {
      if (!wit.is_pair_witness() && family_dimension(wit) >= 1) return true;
    }
    return false;
  };

  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = i + 1; j <= d; ++j) {
      PairStatus ps{i, j, w.at1(i) + w.at1(j), SumStatus::StrictlyShortest};
      if (undesirable.count(ps.sum)) {
        ps.status = dominated(ps.sum) ? SumStatus::DominatedCoincidence : SumStatus::Ambiguous;
      } else if (!undesirable.empty() && *undesirable.rbegin() > ps.sum) {
        ps.status = SumStatus::Ambiguous;
      }
      report.per_sum_status.push_back(std::move(ps));
    }
  }

  const PairSumMultiset sums = pair_sums(w);
  bool heard = false;
  if (d == 2) {
    heard = true;
    report.notes.push_back("d = 2: the exceptional geodesic 2π/(p+q) is the only exceptional length");
  } else if (d <= 4) {
    heard = true;
    report.notes.push_back("d = " + std::to_string(d) +
                           ": every pair sum is audible (shortest lengths, dominated coincidences, "
                           "and for d = 4 the sum N_1+N_2+N_3+N_4)");
  } else {
    const BigInt& min_sum = sums.elements().front();
    heard = std::all_of(undesirable.begin(), undesirable.end(), [&](const BigInt& k) {
      return (sums.sums().count(k) > 0 && dominated(k)) || k < min_sum;
    });
    report.notes.push_back(heard ? "every undesirable order coincides with a pair sum or lies below the "
                                   "smallest pair sum"
                                 : "an undesirable order lies strictly between pair sums; not resolved");
  }

  if (!heard) return report;
  report.heard_pair_sums = sums;

  if (!ladder_degenerate(d)) {
    report.determined_weights = reconstruct_newton(sums).solutions();
    report.notes.push_back("weights recovered from power sums (d is not a power of two)");
  } else {
    report.determined_weights = reconstruct_backtracking(sums, false).solutions();
    report.notes.push_back("d is a power of two; listing every realization of the pair sums");
  }

  const bool input_present =
      std::any_of(report.determined_weights.begin(), report.determined_weights.end(),
                  [&](const Candidate& c) { return c.weights == w.values(); });
  if (!input_present) throw std::logic_error("hear: input weights missing from reconstruction");

  report.verdict = report.determined_weights.size() == 1 ? Verdict::UniqueWeights
                                                         : Verdict::FinitelyManyCandidates;
  return report;
}

}  // namespace wpspec
