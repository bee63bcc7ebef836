#include "gspline/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "gspline/integer_system.hpp"

namespace gspline {

std::string_view to_string(Truth t) noexcept {
  switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    case Truth::Unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(Membership m) noexcept {
  switch (m) {
    case Membership::Yes: return "Yes";
    case Membership::No: return "No";
    case Membership::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

// Z/mZ generators live in the divisor lattice of m; m itself stands for 0.
Int lattice_generator(Int g, Int m) {
  const Int d = gcd(g, m);
  return d == m ? 0 : d;
}

Int lattice_value(Int d, Int m) { return d == 0 ? m : d; }

std::vector<RingValue> normalize_polynomial_generators(const RingDescriptor& ring, std::vector<RingValue> gens) {
  std::vector<Poly> out;
  std::optional<std::size_t> constant_slot;
  Int constant = 0;
  for (const auto& g : gens) {
    Poly p = g.poly().with_positive_leading();
    if (p.is_zero()) continue;
    if (p.is_constant()) {
      constant = gcd(constant, p.coefficient(0));
      if (!constant_slot) {
        constant_slot = out.size();
        out.emplace_back();
      }
      continue;
    }
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  if (constant_slot) {
    if (constant == 1) return {RingValue::one(ring)};
    out[*constant_slot] = Poly::constant(constant);
  }
  if (out.empty()) return {RingValue::zero(ring)};
  std::vector<RingValue> result;
  result.reserve(out.size());
  for (auto& p : out) result.emplace_back(ring, std::move(p));
  return result;
}

}  // namespace

Ideal::Ideal(RingDescriptor ring, std::vector<RingValue> generators) : ring_(std::move(ring)) {
  for (const auto& g : generators) require_same_ring(ring_, g.ring());
  switch (ring_.kind()) {
    case RingKind::Integers: {
      Int d = 0;
      for (const auto& g : generators) d = gcd(d, g.scalar());
      generators_ = {RingValue(ring_, d)};
      break;
    }
    case RingKind::IntegersMod: {
      const Int m = ring_.modulus();
      Int d = m;
      for (const auto& g : generators) d = gcd(d, g.scalar());
      generators_ = {RingValue(ring_, lattice_generator(d, m))};
      break;
    }
    case RingKind::IntegerPolynomials:
      generators_ = normalize_polynomial_generators(ring_, std::move(generators));
      break;
  }
}

Ideal Ideal::principal(const RingValue& generator) { return Ideal(generator.ring(), {generator}); }
Ideal Ideal::zero(const RingDescriptor& ring) { return Ideal(ring, {}); }
Ideal Ideal::unit(const RingDescriptor& ring) { return Ideal(ring, {RingValue::one(ring)}); }

const RingValue& Ideal::generator() const {
  if (!is_principal())
    throw Error(ErrorCode::NonPrincipalIntersection, "ideal " + to_string() + " is not principal");
  return generators_.front();
}

bool Ideal::is_unit() const noexcept {
  return generators_.size() == 1 && generators_.front() == RingValue::one(ring_);
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "⟨";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ", ";
    os << generators_[i].to_string();
  }
  os << "⟩";
  return os.str();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<RingValue> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::Integers:
      return Ideal::principal(RingValue(ring, lcm(a.generator().scalar(), b.generator().scalar())));
    case RingKind::IntegersMod: {
      const Int m = ring.modulus();
      const Int l = lcm(lattice_value(a.generator().scalar(), m), lattice_value(b.generator().scalar(), m));
      return Ideal::principal(RingValue(ring, lattice_generator(l, m)));
    }
    case RingKind::IntegerPolynomials:
      if (!a.is_principal() || !b.is_principal())
        throw Error(ErrorCode::NonPrincipalIntersection,
                    "cannot intersect " + a.to_string() + " and " + b.to_string() + " in " + ring.name());
      return Ideal::principal(RingValue(ring, lcm(a.generator().poly(), b.generator().poly())));
  }
  throw Error(ErrorCode::UnsupportedRing, ring.name());
}

std::optional<std::vector<Poly>> solve_polynomial_combination(const std::vector<Poly>& generators,
                                                              const Poly& target, int degree_bound) {
  if (degree_bound < 0) degree_bound = 0;
  const std::size_t width = static_cast<std::size_t>(degree_bound) + 1;
  int max_gen = 0;
  for (const auto& g : generators) max_gen = std::max(max_gen, g.degree());
  const std::size_t rows = static_cast<std::size_t>(std::max(target.degree(), max_gen + degree_bound)) + 1;

  IntMatrix a(rows, std::vector<Int>(generators.size() * width, 0));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& gc = generators[i].coefficients();
    for (std::size_t d = 0; d < width; ++d)
      for (std::size_t e = 0; e < gc.size(); ++e) a[d + e][i * width + d] = gc[e];
  }
  std::vector<Int> b(rows, 0);
  for (std::size_t e = 0; e < target.coefficients().size(); ++e) b[e] = target.coefficients()[e];

  auto solution = solve_integer_system(a, b);
  if (!solution) return std::nullopt;
  std::vector<Poly> cofactors;
  cofactors.reserve(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i)
    cofactors.emplace_back(std::vector<Int>(solution->begin() + static_cast<std::ptrdiff_t>(i * width),
                                            solution->begin() + static_cast<std::ptrdiff_t>((i + 1) * width)));
  return cofactors;
}

namespace {

MembershipVerdict scalar_membership(const Ideal& ideal, const RingValue& target) {
  const auto& ring = ideal.ring();
  const Int d = ideal.generator().scalar();
  const Int t = target.scalar();
  MembershipVerdict v;
  if (d == 0) {
    if (t == 0) {
      v.outcome = Membership::Yes;
      v.cofactors = {RingValue::zero(ring)};
    } else {
      v.outcome = Membership::No;
      v.certificate = DivisibilityWitness{ideal.generator(), target};
    }
    return v;
  }
  // For Z/mZ the residue t in [0, m) and d | m, so divisibility in Z decides.
  if (t % d == 0) {
    v.outcome = Membership::Yes;
    v.cofactors = {RingValue(ring, t / d)};
  } else {
    v.outcome = Membership::No;
    v.certificate = DivisibilityWitness{ideal.generator(), RingValue(ring, t % d)};
  }
  return v;
}

std::optional<PrimeReduction> prime_certificate(const std::vector<Poly>& gens, const Poly& target, Int p,
                                                std::string_view var) {
  std::vector<Int> g;
  for (const auto& gen : gens) g = modp::gcd(g, modp::reduce(gen, p), p);
  const auto t = modp::reduce(target, p);
  const bool divisible = g.empty() ? t.empty() : modp::remainder(t, g, p).empty();
  if (divisible) return std::nullopt;
  std::ostringstream os;
  os << "mod " << p << " the ideal is ⟨" << (g.empty() ? std::string("0") : modp::render(g, var)) << "⟩ and the target "
     << modp::render(t, var) << " is not a multiple";
  return PrimeReduction{p, os.str()};
}

std::optional<EvaluationReduction> evaluation_certificate(const std::vector<Poly>& gens, const Poly& target,
                                                          Int point, std::string_view var) {
  Int d = 0;
  for (const auto& gen : gens) d = gcd(d, gen.evaluate(point));
  const Int t = target.evaluate(point);
  const bool divisible = d == 0 ? t == 0 : t % d == 0;
  if (divisible) return std::nullopt;
  std::ostringstream os;
  os << "at " << var << " = " << point << " the ideal maps to ⟨" << d << "⟩ in Z and the target maps to " << t;
  return EvaluationReduction{point, d, os.str()};
}

}  // namespace

MembershipVerdict ideal_contains(const Ideal& ideal, const RingValue& target, const MembershipOptions& options) {
  require_same_ring(ideal.ring(), target.ring());
  const auto& ring = ideal.ring();
  if (ring.is_scalar()) return scalar_membership(ideal, target);

  MembershipVerdict v;
  const auto& gens = ideal.generators();
  if (target.is_zero()) {
    v.outcome = Membership::Yes;
    v.cofactors.assign(gens.size(), RingValue::zero(ring));
    return v;
  }
  std::vector<Poly> polys;
  int max_deg = target.poly().degree();
  for (const auto& g : gens) {
    polys.push_back(g.poly());
    max_deg = std::max(max_deg, polys.back().degree());
  }
  const Poly t = target.poly();
  const int bound = options.degree_bound.value_or(max_deg + 4);

  try {
    if (auto cof = solve_polynomial_combination(polys, t, bound)) {
      v.outcome = Membership::Yes;
      for (auto& c : *cof) v.cofactors.emplace_back(ring, std::move(c));
      return v;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
  }

  for (Int p : kCertificatePrimes) {
    if (auto cert = prime_certificate(polys, t, p, ring.variable())) {
      v.outcome = Membership::No;
      v.certificate = std::move(*cert);
      return v;
    }
  }
  for (Int point : kCertificatePoints) {
    if (auto cert = evaluation_certificate(polys, t, point, ring.variable())) {
      v.outcome = Membership::No;
      v.certificate = std::move(*cert);
      return v;
    }
  }
  return v;
}

bool verify_cofactors(const Ideal& ideal, const RingValue& target, const std::vector<RingValue>& cofactors) {
  const auto& gens = ideal.generators();
  if (cofactors.size() != gens.size()) return false;
  RingValue acc = RingValue::zero(ideal.ring());
  for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + cofactors[i] * gens[i];
  return acc == target;
}

bool verify_certificate(const Ideal& ideal, const RingValue& target, const NonMembershipCertificate& certificate) {
  std::vector<Poly> polys;
  for (const auto& g : ideal.generators()) polys.push_back(g.poly());
  const auto& var = ideal.ring().variable();
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DivisibilityWitness>) {
          if (!ideal.ring().is_scalar()) return false;
          return scalar_membership(ideal, target).no();
        } else if constexpr (std::is_same_v<T, PrimeReduction>) {
          return ideal.ring().is_polynomials() && prime_certificate(polys, target.poly(), c.prime, var).has_value();
        } else {
          return ideal.ring().is_polynomials() &&
                 evaluation_certificate(polys, target.poly(), c.point, var).has_value();
        }
      },
      certificate);
}

std::string describe(const NonMembershipCertificate& certificate) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DivisibilityWitness>) {
          return "divisibility: " + c.generator.to_string() + " does not divide the target (remainder " +
                 c.remainder.to_string() + ")";
        } else if constexpr (std::is_same_v<T, PrimeReduction>) {
          return "prime " + std::to_string(c.prime) + ": " + c.reason;
        } else {
          return "evaluation: " + c.reason;
        }
      },
      certificate);
}

Truth ideal_subset(const Ideal& a, const Ideal& b, const MembershipOptions& options) {
  require_same_ring(a.ring(), b.ring());
  bool unknown = false;
  for (const auto& g : a.generators()) {
    const auto v = ideal_contains(b, g, options);
    if (v.no()) return Truth::False;
    if (!v.yes()) unknown = true;
  }
  return unknown ? Truth::Unknown : Truth::True;
}

Truth ideal_equal(const Ideal& a, const Ideal& b, const MembershipOptions& options) {
  require_same_ring(a.ring(), b.ring());
  if (a.ring().is_scalar() || a == b) return a == b ? Truth::True : Truth::False;
  const Truth ab = ideal_subset(a, b, options);
  if (ab == Truth::False) return Truth::False;
  const Truth ba = ideal_subset(b, a, options);
  if (ba == Truth::False) return Truth::False;
  return ab == Truth::True && ba == Truth::True ? Truth::True : Truth::Unknown;
}

}  // namespace gspline
