#include "orthograph/formulas.hpp"

#include "orthograph/errors.hpp"

#include <atomic>
#include <cmath>
#include <map>

namespace orthograph {

namespace {

std::atomic<std::uint64_t> g_integrality_violations{0};

std::string exponent_string(const Exponent &e) {
  std::string s = std::to_string(e.numerator());
  if (e.denominator() != 1)
    s += "/" + std::to_string(e.denominator());
  return s;
}

} // namespace

Pow2Sum Pow2Sum::pow2(Exponent e, std::int64_t coeff) {
  Pow2Sum s;
  if (coeff != 0)
    s.terms_.push_back({coeff, e});
  return s;
}

// Merges terms with equal exponents and drops the ones that cancel.
void Pow2Sum::normalize() {
  std::map<Exponent, std::int64_t> merged;
  for (const Term &t : terms_)
    merged[t.exponent] += t.coeff;
  terms_.clear();
  for (const auto &[e, c] : merged)
    if (c != 0)
      terms_.push_back({c, e});
}

Pow2Sum Pow2Sum::operator+(const Pow2Sum &o) const {
  Pow2Sum s = *this;
  s.terms_.insert(s.terms_.end(), o.terms_.begin(), o.terms_.end());
  s.normalize();
  return s;
}

Pow2Sum Pow2Sum::operator-(const Pow2Sum &o) const { return *this + o * -1; }

Pow2Sum Pow2Sum::operator*(const Pow2Sum &o) const {
  Pow2Sum s;
  for (const Term &a : terms_)
    for (const Term &b : o.terms_)
      if (a.coeff * b.coeff != 0)
        s.terms_.push_back({a.coeff * b.coeff, a.exponent + b.exponent});
  s.normalize();
  return s;
}

Pow2Sum Pow2Sum::operator*(std::int64_t c) const {
  Pow2Sum s;
  if (c == 0)
    return s;
  for (const Term &t : terms_)
    s.terms_.push_back({t.coeff * c, t.exponent});
  return s;
}

BigInt Pow2Sum::evaluate() const {
  BigInt total = 0;
  for (const Term &t : terms_) {
    if (t.exponent.denominator() != 1 || t.exponent.numerator() < 0) {
      ++g_integrality_violations;
      throw InvariantError("surviving term 2^(" + exponent_string(t.exponent) +
                           ") is not a non-negative integral power");
    }
    BigInt term = BigInt(1) << static_cast<unsigned>(t.exponent.numerator());
    total += term * t.coeff;
  }
  return total;
}

std::uint64_t integrality_violations() { return g_integrality_violations; }

const char *to_string(MainBranch b) {
  switch (b) {
  case MainBranch::DegeneratePath:
    return "degenerate-path";
  case MainBranch::NuOne:
    return "srg-nu-one";
  case MainBranch::NuAtLeastTwo:
    return "qsrg-nu-at-least-two";
  }
  return "?";
}

const char *to_string(SubBranch b) {
  switch (b) {
  case SubBranch::None:
    return "none";
  case SubBranch::FirstEvenDelta:
    return "first-even-delta";
  case SubBranch::FirstOddDelta:
    return "first-odd-delta";
  case SubBranch::SecondEvenDeltaNuTwo:
    return "second-even-delta-nu-two";
  case SubBranch::SecondEvenDeltaHigher:
    return "second-even-delta-nu-ge-three";
  case SubBranch::SecondOddDeltaNuTwo:
    return "second-odd-delta-nu-two";
  case SubBranch::SecondOddDeltaHigher:
    return "second-odd-delta-nu-ge-three";
  }
  return "?";
}

bool chromatic_theorem_applies(int nu, int delta) {
  return !(delta == 0 && nu % 2 == 1);
}

BigInt factorial(std::uint64_t k) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= k; ++i)
    f *= i;
  return f;
}

namespace {

Pow2Sum P(Exponent e) { return Pow2Sum::pow2(e); }
Pow2Sum P(std::int64_t e) { return Pow2Sum::pow2(Exponent(e)); }
Pow2Sum C(std::int64_t c) { return Pow2Sum::constant(c); }

// Skip the factorial power when it would be absurdly large.
constexpr double kMaxAutOrderBits = 1u << 24;

} // namespace

TheoremPrediction predict_main(const FormSpec &spec,
                               std::optional<BigInt> residue_aut_order) {
  const std::int64_t n = spec.n(), nu = spec.nu(), d = spec.delta();
  const Exponent half_delta(d, 2);

  TheoremPrediction p{.spec = spec,
                      .branch = nu >= 2   ? MainBranch::NuAtLeastTwo
                                : d == 0 ? MainBranch::DegeneratePath
                                         : MainBranch::NuOne};

  const Pow2Sum residue_count = (P(nu) - C(1)) * (P(nu + d - 1) + C(1));
  p.fiber_size = P((n - 1) * (2 * nu + d - 2)).evaluate();
  p.vertex_count = (P((n - 1) * (2 * nu + d - 2)) * residue_count).evaluate();
  p.degree = P(n * (2 * nu + d - 2)).evaluate();
  p.residue_vertex_count = residue_count.evaluate();
  p.residue_degree = P(2 * nu + d - 2).evaluate();

  if (nu == 1) {
    p.lambda = (P(d * n) - P(d * (n - 1))).evaluate();
    if (d == 0)
      p.mu = BigInt(0);
    else
      p.mu = (P(d * n) * ((d + 1) / 2)).evaluate();
  } else {
    const Pow2Sum residue_lambda =
        P(2 * nu + d - 2) - P(2 * nu + d - 3) - P(nu - 1) + P(nu + d - 2);
    p.residue_lambda = residue_lambda.evaluate();
    p.residue_mu = (P(2 * nu + d - 2) - P(2 * nu + d - 3)).evaluate();

    const Exponent shifted = Exponent(nu - 1) + half_delta;
    p.lambda = (P(n - 1) *
                (P(Exponent(n) * shifted) +
                 P(Exponent(n - 1) * shifted) * (d - 1)) *
                P(Exponent(n) * (Exponent(nu - 2) + half_delta)))
                   .evaluate();
    p.lambda_expanded =
        (residue_lambda * P((n - 1) * (2 * nu + d - 2))).evaluate();
    p.c1 = (P(n - 1) * P(n * (2 * nu - 3 + d))).evaluate();
    p.c2 = P(n * (2 * nu - 2 + d)).evaluate();
  }

  if (chromatic_theorem_applies(static_cast<int>(nu), static_cast<int>(d)))
    p.chromatic = (P(nu + d - 1) + C(1)).evaluate();

  p.aut_order_expr = "|Aut(residue)| * (" + p.fiber_size.str() + "!)^" +
                     p.residue_vertex_count.str();
  p.residue_aut_order = residue_aut_order;
  if (residue_aut_order) {
    const double f = p.fiber_size.convert_to<double>();
    const double bits =
        std::lgamma(f + 1) / std::log(2.0) *
        p.residue_vertex_count.convert_to<double>();
    if (bits <= kMaxAutOrderBits) {
      const BigInt fact = factorial(p.fiber_size.convert_to<std::uint64_t>());
      p.aut_order = *residue_aut_order *
                    boost::multiprecision::pow(
                        fact, p.residue_vertex_count.convert_to<unsigned>());
    }
  }
  return p;
}

namespace {

SubconstituentPrediction uncovered(int index, std::string why) {
  SubconstituentPrediction s;
  s.index = index;
  s.note = std::move(why);
  return s;
}

} // namespace

SubconstituentPrediction odd_delta_higher_rank_claim(const FormSpec &spec) {
  const std::int64_t n = spec.n(), nu = spec.nu();
  if (spec.delta() != 1 || nu < 3)
    return uncovered(0, "claim stated only for delta = 1, nu >= 3");
  SubconstituentPrediction s;
  s.branch = SubBranch::SecondOddDeltaHigher;
  s.structure = "regular";
  s.vertex_count =
      (P((n - 1) * (2 * nu - 1)) * (P(2 * nu - 1) - C(2))).evaluate();
  s.degree = P(n * (2 * nu - 1) - 1).evaluate();
  s.adjacent_values = {P(n * (2 * nu - 1) - 2).evaluate()};
  s.nonadjacent_values = {P(n * (2 * nu - 1) - 2).evaluate(), s.degree};
  return s;
}

SubconstituentPrediction predict_sub(const FormSpec &spec, int index) {
  if (index != 1 && index != 2)
    throw UsageError("subconstituent index must be 1 or 2");
  const std::int64_t n = spec.n(), nu = spec.nu(), d = spec.delta();
  if (nu < 2)
    return uncovered(index, "subconstituent parameters are stated for nu >= 2 only");

  const Pow2Sum lift = P((n - 1) * (2 * nu + d - 2));
  const std::int64_t eps = d == 0 ? 1 : -1; // (-1)^(delta/2), even delta
  const std::int64_t half = (2 * nu + d) / 2;

  SubconstituentPrediction s;
  s.index = index;
  if (index == 1) {
    if (d != 1) {
      s.branch = SubBranch::FirstEvenDelta;
      s.structure = "QSRG";
      s.vertex_count = P(n * (2 * nu + d - 2)).evaluate();
      s.degree = (lift * (P(2 * nu + d - 3) - P(half - 1) * eps -
                          P(half - 2) * (-eps)))
                     .evaluate();
      const BigInt lambda =
          (lift * (P(2 * nu + d - 4) - P(half - 1) * (2 * eps) +
                   P(half - 2) * (3 * eps)))
              .evaluate();
      const BigInt c2 = (lift * (P(2 * nu + d - 4) - P(half - 1) * eps -
                                 P(half - 2) * (-eps)))
                            .evaluate();
      s.adjacent_values = {lambda};
      s.nonadjacent_values = {s.degree, c2};
    } else {
      s.branch = SubBranch::FirstOddDelta;
      s.structure = "regular";
      s.vertex_count = P(n * (2 * nu - 1)).evaluate();
      s.degree = P(n * (2 * nu - 2) + 1).evaluate();
      const BigInt low = P(n * (2 * nu - 2) - 1).evaluate();
      s.adjacent_values = {BigInt(0), low};
      s.nonadjacent_values = {low, s.degree};
    }
    return s;
  }

  if (d == 1) {
    if (nu == 2) {
      const Pow2Sum g = P((n - 1) * (2 * nu - 1));
      s.branch = SubBranch::SecondOddDeltaNuTwo;
      s.structure = "SRG";
      s.vertex_count = (g * 6).evaluate();
      s.degree = (g * 4).evaluate();
      s.adjacent_values = {(g * 2).evaluate()};
      s.nonadjacent_values = {(g * 4).evaluate()};
      return s;
    }
    SubconstituentPrediction claim = odd_delta_higher_rank_claim(spec);
    claim.index = 2;
    return claim;
  }

  if (nu == 2) {
    const Pow2Sum lift2 = P((n - 1) * (2 + d));
    const std::int64_t hd = d / 2;
    s.branch = SubBranch::SecondEvenDeltaNuTwo;
    s.structure = "SRG";
    s.vertex_count = (lift2 * (P(2 + d) + P(hd + 2) * eps +
                               P(hd + 1) * (-eps) - C(2)))
                         .evaluate();
    s.degree = P(n * (2 + d) - 1).evaluate();
    s.adjacent_values = {(lift2 * (P(1 + d) - P(d) - P(hd + 1) * eps +
                                   P(hd) * eps))
                             .evaluate()};
    s.nonadjacent_values = {s.degree};
    return s;
  }

  s.branch = SubBranch::SecondEvenDeltaHigher;
  s.structure = "QSRG";
  s.vertex_count = (lift * (P(2 * nu + d - 2) + P(half) * eps +
                            P(half - 1) * (-eps) - C(2)))
                       .evaluate();
  s.degree = P(n * (2 * nu + d - 2) - 1).evaluate();
  s.adjacent_values = {
      (lift * (P(2 * nu + d - 4) - P(half - 1) * eps + P(half - 2) * eps))
          .evaluate()};
  s.nonadjacent_values = {s.degree, P(n * (2 * nu + d - 2) - 2).evaluate()};
  return s;
}

} // namespace orthograph
