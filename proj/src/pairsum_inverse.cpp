#include "wpspec/pairsum_inverse.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace wpspec {
namespace {

BigInt power(const BigInt& base, unsigned long k) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), k);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Evaluates a monic polynomial given by descending coefficients.
BigInt horner(const std::vector<BigInt>& coeffs, const BigInt& x) {
  BigInt acc = 0;
  for (const auto& c : coeffs) acc = acc * x + c;
  return acc;
}

// Divides by (x - root); the remainder must be zero.
std::vector<BigInt> deflate(const std::vector<BigInt>& coeffs, const BigInt& root) {
  std::vector<BigInt> out(coeffs.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
    carry = carry * root + coeffs[i];
    out[i] = carry;
  }
  return out;
}

[[noreturn]] void no_solution(const std::string& why) {
  throw Error(ErrorKind::NoIntegerSolution, ": " + why);
}

// Positive, pairwise distinct integer roots of a monic polynomial with
// coefficients (-1)^j e_j, found in ascending order by divisor search on the
// constant term.
std::vector<BigInt> positive_integer_roots(std::vector<BigInt> coeffs) {
  std::vector<BigInt> roots;
  BigInt last = 0;
  while (coeffs.size() > 2) {
    const std::size_t degree = coeffs.size() - 1;
    const BigInt remaining_sum = -coeffs[1];
    const BigInt& constant = coeffs.back();
    if (constant == 0) no_solution("zero root");
    bool found = false;
    // The smallest remaining root is at most the mean of the remaining roots.
    for (BigInt x = last + 1; x * degree <= remaining_sum; ++x) {
      if (!mpz_divisible_p(constant.get_mpz_t(), x.get_mpz_t())) continue;
      if (horner(coeffs, x) != 0) continue;
      coeffs = deflate(coeffs, x);
      roots.push_back(x);
      last = x;
      found = true;
      break;
    }
    if (!found) no_solution("polynomial has no further distinct positive integer root");
  }
  const BigInt final_root = -coeffs[1];
  if (final_root <= last) no_solution("polynomial has no further distinct positive integer root");
  roots.push_back(final_root);
  return roots;
}

}  // namespace

Candidate Candidate::from_sorted(std::vector<BigInt> weights) {
  Candidate c;
  c.coprime = pairwise_coprime(weights);
  c.strict = !weights.empty() && weights.front() > 1;
  c.weights = std::move(weights);
  return c;
}

std::string_view to_string(ReconstructionMethod m) noexcept {
  switch (m) {
    case ReconstructionMethod::Newton: return "newton";
    case ReconstructionMethod::Backtracking: return "backtracking";
    case ReconstructionMethod::Both: return "both";
  }
  return "unknown";
}

ReconstructionResult::ReconstructionResult(PairSumMultiset input, std::vector<Candidate> solutions,
                                           ReconstructionMethod method)
    : input_(std::move(input)), solutions_(std::move(solutions)), method_(method) {
  std::sort(solutions_.begin(), solutions_.end());
  solutions_.erase(std::unique(solutions_.begin(), solutions_.end()), solutions_.end());
  for (const auto& s : solutions_) {
    if (pairwise_sums(s.weights) != input_.sums()) {
      throw std::logic_error("reconstruction produced (" + join(s.weights) +
                             ") whose pair sums differ from the input");
    }
  }
}

BigInt pairsum_power_sum(const PairSumMultiset& sums, unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, ": power must be >= 1");
  BigInt total = 0;
  for (const auto& s : sums.elements()) total += power(s, k);
  return total;
}

IdentityReport verify_appendix_identity(std::span<const BigInt> values, unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, ": power must be >= 1");
  if (values.empty()) throw Error(ErrorKind::EmptySet, ": identity needs at least one value");
  IdentityReport rep;
  rep.d = values.size();
  rep.k = k;

  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) rep.lhs += power(values[i] + values[j], k);
  }

  std::vector<BigInt> p(k + 1, 0);
  for (unsigned m = 0; m <= k; ++m) {
    for (const auto& v : values) p[m] += power(v, m);
  }
  BigInt cross = 0;
  for (unsigned m = 1; m < k; ++m) cross += binomial(k, m) * p[k - m] * p[m];
  // Symmetric in m <-> k-m and C(k, k/2) is even, so the sum is even.
  if (mpz_even_p(cross.get_mpz_t()) == 0) throw std::logic_error("odd cross term");
  const BigInt half = cross / 2;

  const BigInt d(static_cast<unsigned long>(rep.d));
  rep.rhs_printed = (d - power(2, k)) * p[k] + half;
  rep.rhs_corrected = (d - power(2, k - 1)) * p[k] + half;
  rep.holds_as_printed = rep.lhs == rep.rhs_printed;
  rep.holds_with_corrected_exponent = rep.lhs == rep.rhs_corrected;
  return rep;
}

IdentityReport verify_appendix_identity(const WeightVector& w, unsigned k) {
  return verify_appendix_identity(std::span<const BigInt>(w.values()), k);
}

bool ladder_degenerate(std::size_t d) noexcept {
  // d - 2^(k-1) == 0 for some 1 <= k <= d  <=>  d is a power of two (d >= 1).
  return d != 0 && (d & (d - 1)) == 0;
}

PowerSumLadder power_sum_ladder(const PairSumMultiset& sums) {
  const std::size_t d = sums.declared_d();
  if (ladder_degenerate(d)) {
    throw Error(ErrorKind::PowerOfTwoD,
                ": d = " + std::to_string(d) + " is a power of two, the ladder is degenerate");
  }
  PowerSumLadder ladder;
  ladder.d = d;
  ladder.p.assign(d + 1, Rational(0));
  ladder.p[0] = Rational(static_cast<unsigned long>(d));
  for (std::size_t k = 1; k <= d; ++k) {
    Rational cross = 0;
    for (std::size_t m = 1; m < k; ++m) cross += Rational(binomial(k, m)) * ladder.p[k - m] * ladder.p[m];
    const BigInt coefficient = BigInt(static_cast<unsigned long>(d)) - power(2, k - 1);
    ladder.p[k] = (Rational(pairsum_power_sum(sums, static_cast<unsigned>(k))) - cross / 2) /
                  Rational(coefficient);
    ladder.p[k].canonicalize();
  }
  return ladder;
}

std::vector<Rational> elementary_from_power_sums(const PowerSumLadder& ladder) {
  std::vector<Rational> e(ladder.d + 1, Rational(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= ladder.d; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const Rational term = e[k - i] * ladder.p[i];
      if (i % 2 == 1) acc += term;
      else acc -= term;
    }
    e[k] = acc / Rational(static_cast<unsigned long>(k));
    e[k].canonicalize();
  }
  return e;
}

ReconstructionResult reconstruct_newton(const PairSumMultiset& sums) {
  const PowerSumLadder ladder = power_sum_ladder(sums);
  for (std::size_t k = 1; k <= ladder.d; ++k) {
    if (!is_integer(ladder.p[k])) {
      no_solution("p" + std::to_string(k) + " = " + ladder.p[k].get_str() + " is not an integer");
    }
  }
  const std::vector<Rational> e = elementary_from_power_sums(ladder);
  std::vector<BigInt> coeffs;
  coeffs.reserve(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (!is_integer(e[j])) {
      no_solution("e" + std::to_string(j) + " = " + e[j].get_str() + " is not an integer");
    }
    coeffs.push_back(j % 2 == 0 ? e[j].get_num() : BigInt(-e[j].get_num()));
  }
  if (e.back() <= 0) no_solution("product of the weights must be positive");

  std::vector<BigInt> roots = positive_integer_roots(std::move(coeffs));
  std::vector<Candidate> solutions{Candidate::from_sorted(std::move(roots))};
  return ReconstructionResult(sums, std::move(solutions), ReconstructionMethod::Newton);
}

ReconstructionResult reconstruct_backtracking(const PairSumMultiset& sums, bool require_coprime) {
  const std::size_t d = sums.declared_d();
  const std::vector<BigInt>& s = sums.elements();
  std::vector<Candidate> found;
  auto accept = [&](std::vector<BigInt> weights) {
    Candidate c = Candidate::from_sorted(std::move(weights));
    if (!require_coprime || c.coprime) found.push_back(std::move(c));
  };

  if (d == 2) {
    for (BigInt a = 1; 2 * a < s[0]; ++a) accept({a, s[0] - a});
    return ReconstructionResult(sums, std::move(found), ReconstructionMethod::Backtracking);
  }

  const BigInt& s12 = s[0];
  const BigInt& s13 = s[1];
  std::set<BigInt> tried;
  for (std::size_t pos = 2; pos < s.size(); ++pos) {
    const BigInt& s23 = s[pos];
    if (!tried.insert(s23).second) continue;
    const BigInt total = s12 + s13 + s23;
    if (mpz_odd_p(total.get_mpz_t())) continue;
    const BigInt half = total / 2;
    std::vector<BigInt> weights{half - s23, half - s13, half - s12};
    if (!(weights[0] >= 1 && weights[0] < weights[1] && weights[1] < weights[2])) continue;

    std::multiset<BigInt> residual(s.begin(), s.end());
    residual.erase(residual.find(s12));
    residual.erase(residual.find(s13));
    residual.erase(residual.find(s23));

    bool ok = true;
    while (ok && weights.size() < d) {
      // The smallest sum not yet explained involves N_1 and the next weight.
      const BigInt next = *residual.begin() - weights.front();
      if (next <= weights.back()) {
        ok = false;
        break;
      }
      for (const auto& w : weights) {
        auto it = residual.find(w + next);
        if (it == residual.end()) {
          ok = false;
          break;
        }
        residual.erase(it);
      }
      weights.push_back(next);
    }
    if (ok && residual.empty()) accept(std::move(weights));
  }
  return ReconstructionResult(sums, std::move(found), ReconstructionMethod::Backtracking);
}

namespace {

using Key = std::vector<std::int64_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

using Shard = std::unordered_map<Key, std::vector<Key>, KeyHash>;

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("WPSPEC_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void scan_from(const CollisionQuery& q, Key& current, Shard& shard) {
  if (current.size() == q.d) {
    Key sums;
    sums.reserve(q.d * (q.d - 1) / 2);
    for (std::size_t i = 0; i < q.d; ++i) {
      for (std::size_t j = i + 1; j < q.d; ++j) sums.push_back(current[i] + current[j]);
    }
    std::sort(sums.begin(), sums.end());
    shard[std::move(sums)].push_back(current);
    return;
  }
  const std::int64_t remaining = static_cast<std::int64_t>(q.d - current.size());
  for (std::int64_t next = current.back() + 1; next + remaining - 1 <= q.max_weight; ++next) {
    if (q.require_coprime &&
        std::any_of(current.begin(), current.end(),
                    [&](std::int64_t w) { return std::gcd(w, next) != 1; })) {
      continue;
    }
    current.push_back(next);
    scan_from(q, current, shard);
    current.pop_back();
  }
}

}  // namespace

std::vector<CollisionGroup> find_collisions(const CollisionQuery& query) {
  if (query.d < 2) throw Error(ErrorKind::InvalidArgument, ": d must be at least 2");
  if (query.max_weight < static_cast<std::int64_t>(query.d) + 1) {
    throw Error(ErrorKind::InvalidArgument, ": max_weight must be at least d + 1");
  }
  if (query.max_weight > (std::int64_t{1} << 31)) {
    throw Error(ErrorKind::OutOfRange, ": max_weight too large for an exhaustive scan");
  }

  const std::int64_t first_lo = query.require_strict ? 2 : 1;
  const std::int64_t first_hi = query.max_weight - static_cast<std::int64_t>(query.d) + 1;
  const unsigned threads = resolve_threads(query.threads);

  std::vector<Shard> shards(threads);
  auto worker = [&](unsigned t) {
    Key current;
    for (std::int64_t first = first_lo + t; first <= first_hi; first += threads) {
      current.assign(1, first);
      scan_from(query, current, shards[t]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::map<Key, std::vector<Key>> merged;
  for (auto& shard : shards) {
    for (auto& [sums, members] : shard) {
      auto& slot = merged[sums];
      slot.insert(slot.end(), members.begin(), members.end());
    }
  }

  std::vector<CollisionGroup> groups;
  for (auto& [sums, members] : merged) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    CollisionGroup g;
    std::vector<BigInt> big_sums;
    for (auto v : sums) big_sums.emplace_back(static_cast<long>(v));
    g.sums = IntegerMultiset(std::move(big_sums));
    for (const auto& m : members) {
      std::vector<BigInt> weights;
      for (auto v : m) weights.emplace_back(static_cast<long>(v));
      g.members.push_back(Candidate::from_sorted(std::move(weights)));
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

}  // namespace wpspec
