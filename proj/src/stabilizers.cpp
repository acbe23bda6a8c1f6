#include "wpspec/stabilizers.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <tuple>

namespace wpspec {
namespace {

constexpr std::size_t kMaxDimension = 24;

enum class Slot : std::uint8_t { None, S1, S2 };

BigInt sigma_value(const WeightVector& w, std::size_t r, std::size_t m, Slot slot) {
  const BigInt& base = w.at1(r);
  const BigInt& other = w.at1(m);
  if (slot == Slot::S1) return abs(other - base);
  return other + base;
}

// Calls fn(r, slots) for every base index and every assignment of the indices
// r+1..d to {None, S1, S2} with a non-empty support (and non-empty S2 when
// isotropic_only). slots[i] refers to index r+1+i.
void for_each_shape(const WeightVector& w, bool isotropic_only,
                    const std::function<void(std::size_t, const std::vector<Slot>&)>& fn) {
  const std::size_t d = w.size();
  if (d < 2) throw Error(ErrorKind::InvalidWeights, ": d must be at least 2");
  if (d > kMaxDimension) {
    throw Error(ErrorKind::OutOfRange, ": d = " + std::to_string(d) + " exceeds " +
                                           std::to_string(kMaxDimension));
  }
  for (std::size_t r = 1; r < d; ++r) {
    const std::size_t tail = d - r;
    std::vector<Slot> slots(tail, Slot::None);
    // Base-3 odometer over the tail.
    while (true) {
      std::size_t i = 0;
      while (i < tail && slots[i] == Slot::S2) slots[i++] = Slot::None;
      if (i == tail) break;
      slots[i] = slots[i] == Slot::None ? Slot::S1 : Slot::S2;
      if (isotropic_only &&
          std::find(slots.begin(), slots.end(), Slot::S2) == slots.end()) {
        continue;
      }
      fn(r, slots);
    }
  }
}

}  // namespace

bool witness_less(const StabilizerWitness& a, const StabilizerWitness& b) {
  return std::tie(a.r, a.s2, a.s1) < std::tie(b.r, b.s2, b.s1);
}

std::set<BigInt> WitnessCatalog::orders() const {
  std::set<BigInt> out;
  for (const auto& wit : witnesses) out.insert(wit.k);
  return out;
}

WitnessCatalog enumerate_witnesses(const WeightVector& w, bool isotropic_only) {
  WitnessCatalog catalog;
  catalog.isotropic_only = isotropic_only;
  for_each_shape(w, isotropic_only, [&](std::size_t r, const std::vector<Slot>& slots) {
    StabilizerWitness wit;
    wit.r = r;
    std::vector<BigInt> values;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (slots[i] == Slot::None) continue;
      const std::size_t m = r + 1 + i;
      (slots[i] == Slot::S1 ? wit.s1 : wit.s2).push_back(m);
      wit.sigma.emplace_back(m, sigma_value(w, r, m, slots[i]));
      values.push_back(wit.sigma.back().second);
    }
    wit.k = gcd_multi(values);
    if (wit.k > 2) catalog.witnesses.push_back(std::move(wit));
  });
  std::sort(catalog.witnesses.begin(), catalog.witnesses.end(), witness_less);
  return catalog;
}

std::set<BigInt> oracle_stabilizer_orders(const WeightVector& w, bool isotropic_only) {
  std::set<BigInt> achieved;
  const std::size_t d = w.size();
  const BigInt upper = w.at1(d - 1) + w.at1(d);
  for_each_shape(w, isotropic_only, [&](std::size_t r, const std::vector<Slot>& slots) {
    std::vector<BigInt> values;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (slots[i] != Slot::None) values.push_back(sigma_value(w, r, r + 1 + i, slots[i]));
    }
    for (BigInt n = upper; n >= 3; --n) {
      const bool divides_all = std::all_of(values.begin(), values.end(), [&](const BigInt& v) {
        return mpz_divisible_p(v.get_mpz_t(), n.get_mpz_t()) != 0;
      });
      if (divides_all) {
        achieved.insert(n);
        break;
      }
    }
  });
  return achieved;
}

std::size_t family_dimension(const StabilizerWitness& witness) {
  if (!witness.isotropic()) {
    throw Error(ErrorKind::NonIsotropicWitness, ": S2 is empty, no horizontal geodesics");
  }
  return 2 * witness.support_size() - 2;
}

}  // namespace wpspec
