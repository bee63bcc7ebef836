#include "gspline/crt.hpp"

#include <optional>

namespace gspline {

namespace {

// Z congruence a mod d; d == 0 means x == a exactly.
struct Residue {
  Int value;
  Int modulus;
};

std::optional<Residue> merge(const Residue& a, const Residue& b) {
  if (a.modulus == 0 && b.modulus == 0)
    return a.value == b.value ? std::optional<Residue>(a) : std::nullopt;
  if (a.modulus == 0)
    return floor_mod(checked_sub(b.value, a.value), b.modulus) == 0 ? std::optional<Residue>(a) : std::nullopt;
  if (b.modulus == 0)
    return floor_mod(checked_sub(a.value, b.value), a.modulus) == 0 ? std::optional<Residue>(b) : std::nullopt;

  const Int g = gcd(a.modulus, b.modulus);
  const Int diff = checked_sub(b.value, a.value);
  if (diff % g != 0) return std::nullopt;
  const Int l = lcm(a.modulus, b.modulus);
  const Int step = b.modulus / g;
  Int k = 0;
  if (step > 1) {
    const Int inv = floor_mod(extended_gcd(a.modulus / g, step).s, step);
    k = mul_mod(floor_mod(diff / g, step), inv, step);
  }
  const __int128 x = static_cast<__int128>(a.value) + static_cast<__int128>(a.modulus) * k;
  __int128 r = x % l;
  if (r < 0) r += l;
  return Residue{static_cast<Int>(r), l};
}

Residue lift(const Congruence& c) {
  const auto& ring = c.modulus.ring();
  const Int d = c.modulus.generator().scalar();
  if (ring.is_integers_mod()) return {c.residue.scalar(), d == 0 ? ring.modulus() : d};
  return {c.residue.scalar(), d};
}

}  // namespace

CrtResult crt_solve(const RingDescriptor& ring, std::span<const Congruence> congruences) {
  if (!ring.is_scalar()) throw Error(ErrorCode::UnsupportedRing, "crt_solve over " + ring.name());
  for (const auto& c : congruences) {
    require_same_ring(ring, c.residue.ring());
    require_same_ring(ring, c.modulus.ring());
  }
  if (congruences.empty()) return RingValue::zero(ring);

  std::optional<Residue> acc = lift(congruences.front());
  for (std::size_t i = 1; i < congruences.size() && acc; ++i) acc = merge(*acc, lift(congruences[i]));

  if (acc) {
    const Int v = acc->modulus == 0 ? acc->value : floor_mod(acc->value, acc->modulus);
    return RingValue(ring, v);
  }

  for (std::size_t j = 0; j < congruences.size(); ++j)
    for (std::size_t k = j + 1; k < congruences.size(); ++k) {
      const Ideal sum = ideal_sum(congruences[j].modulus, congruences[k].modulus);
      if (ideal_contains(sum, congruences[j].residue - congruences[k].residue).no()) return CrtInfeasible{j, k};
    }
  throw Error(ErrorCode::CrtInfeasible, "pairwise compatible system failed to merge");
}

namespace {

std::optional<std::vector<Int>> decompose_integers(Int x, const std::vector<Int>& gens) {
  const std::size_t k = gens.size();
  std::vector<Int> suffix(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) suffix[i] = gcd(gens[i], suffix[i + 1]);
  const Int total = suffix[0];
  if (total == 0 ? x != 0 : x % total != 0) return std::nullopt;

  std::vector<Int> parts(k, 0);
  Int rest = x;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Int here = suffix[i];
    const Int next = suffix[i + 1];
    if (gens[i] == 0 || rest == 0) continue;
    if (next == 0) {
      parts[i] = rest;
      rest = 0;
      continue;
    }
    const Int m = next / here;
    Int c = 0;
    if (m > 1) {
      const Int s = extended_gcd(gens[i], next).s;
      c = mul_mod(floor_mod(rest / here, m), floor_mod(s, m), m);
    }
    parts[i] = checked_mul(c, gens[i]);
    rest = checked_sub(rest, parts[i]);
  }
  if (k > 0) parts[k - 1] = rest;
  return parts;
}

std::vector<RingValue> decompose_polynomial(const RingValue& x, std::span<const Ideal> ideals,
                                            const MembershipOptions& options) {
  const auto& ring = x.ring();
  std::vector<Poly> gens;
  std::vector<std::size_t> owner;
  int max_deg = x.poly().degree();
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (const auto& g : ideals[i].generators()) {
      gens.push_back(g.poly());
      owner.push_back(i);
      max_deg = std::max(max_deg, gens.back().degree());
    }
  std::vector<RingValue> parts(ideals.size(), RingValue::zero(ring));
  if (x.is_zero()) return parts;

  std::optional<std::vector<Poly>> cof;
  try {
    cof = solve_polynomial_combination(gens, x.poly(), options.degree_bound.value_or(max_deg + 4));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
  }
  if (!cof) {
    Ideal sum = Ideal::zero(ring);
    for (const auto& I : ideals) sum = ideal_sum(sum, I);
    const auto v = ideal_contains(sum, x, options);
    if (v.no()) throw Error(ErrorCode::NotInSum, x.to_string() + " ∉ " + sum.to_string() + " (" + describe(*v.certificate) + ")");
    throw Error(ErrorCode::MembershipUndecided, "could not decompose " + x.to_string() + " over " + sum.to_string());
  }
  for (std::size_t j = 0; j < gens.size(); ++j)
    parts[owner[j]] = parts[owner[j]] + RingValue(ring, (*cof)[j] * gens[j]);
  return parts;
}

}  // namespace

std::vector<RingValue> decompose_into_sum(const RingValue& x, std::span<const Ideal> ideals,
                                          const MembershipOptions& options) {
  const auto& ring = x.ring();
  for (const auto& I : ideals) require_same_ring(ring, I.ring());

  std::vector<RingValue> parts;
  if (ring.is_polynomials()) {
    parts = decompose_polynomial(x, ideals, options);
  } else {
    std::vector<Int> gens;
    for (const auto& I : ideals) {
      const Int d = I.generator().scalar();
      gens.push_back(ring.is_integers_mod() && d == 0 ? ring.modulus() : d);
    }
    if (ring.is_integers_mod()) gens.push_back(ring.modulus());
    const auto ints = decompose_integers(x.scalar(), gens);
    if (!ints) throw Error(ErrorCode::NotInSum, x.to_string() + " is not in the sum of the given ideals");
    for (std::size_t i = 0; i < ideals.size(); ++i) parts.emplace_back(ring, (*ints)[i]);
  }

  RingValue total = RingValue::zero(ring);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!ideal_contains(ideals[i], parts[i]).yes())
      throw Error(ErrorCode::NotInSum, "internal: summand " + parts[i].to_string() + " escaped " + ideals[i].to_string());
    total = total + parts[i];
  }
  if (!(total == x)) throw Error(ErrorCode::NotInSum, "internal: summands do not add up to " + x.to_string());
  return parts;
}

}  // namespace gspline
