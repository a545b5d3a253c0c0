#pragma once

#include "orthograph/forms.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace orthograph {

using BigInt = boost::multiprecision::cpp_int;
using Exponent = boost::rational<std::int64_t>;

/// A finite sum of terms coeff * 2^exponent with rational exponents. Products
/// distribute and terms with a zero coefficient are dropped, so only the
/// surviving terms must have non-negative integral exponents at evaluation.
class Pow2Sum {
public:
  struct Term {
    std::int64_t coeff;
    Exponent exponent;
  };

  Pow2Sum() = default;
  static Pow2Sum pow2(Exponent e, std::int64_t coeff = 1);
  static Pow2Sum constant(std::int64_t c) { return pow2(Exponent(0), c); }

  Pow2Sum operator+(const Pow2Sum &o) const;
  Pow2Sum operator-(const Pow2Sum &o) const;
  Pow2Sum operator*(const Pow2Sum &o) const;
  Pow2Sum operator*(std::int64_t c) const;

  const std::vector<Term> &terms() const noexcept { return terms_; }

  /// Throws InvariantError if a surviving exponent is negative or fractional.
  BigInt evaluate() const;

private:
  void normalize();
  std::vector<Term> terms_;
};

/// Number of evaluations that tripped the integrality assertion since start.
std::uint64_t integrality_violations();

enum class MainBranch { DegeneratePath, NuOne, NuAtLeastTwo };

const char *to_string(MainBranch b);

/// Closed-form predictions for the full graph.
struct TheoremPrediction {
  FormSpec spec;
  MainBranch branch;

  BigInt vertex_count;
  BigInt degree;
  BigInt fiber_size;
  BigInt lambda;
  std::optional<BigInt> mu;  // nu = 1 branch
  std::optional<BigInt> c1;  // nu >= 2: non-adjacent pairs in different fibers
  std::optional<BigInt> c2;  // nu >= 2: non-adjacent pairs in one fiber
  /// Proof-form expansion of lambda, evaluated independently (nu >= 2).
  std::optional<BigInt> lambda_expanded;

  /// nullopt when (nu, delta) is outside the chromatic theorem (delta = 0, nu odd).
  std::optional<BigInt> chromatic;

  // Residue (mod 2) graph parameters.
  BigInt residue_vertex_count;
  BigInt residue_degree;
  std::optional<BigInt> residue_lambda; // nu >= 2
  std::optional<BigInt> residue_mu;     // nu >= 2

  std::optional<BigInt> residue_aut_order;
  /// residue_aut_order * (fiber_size!)^residue_vertex_count when small enough.
  std::optional<BigInt> aut_order;
  std::string aut_order_expr;
};

TheoremPrediction predict_main(const FormSpec &spec,
                               std::optional<BigInt> residue_aut_order = {});

bool chromatic_theorem_applies(int nu, int delta);

enum class SubBranch {
  None,
  FirstEvenDelta,        // i=1, delta in {0,2}: QSRG
  FirstOddDelta,         // i=1, delta=1: two-valued neighbour sets
  SecondEvenDeltaNuTwo,  // i=2, delta in {0,2}, nu=2: SRG
  SecondEvenDeltaHigher, // i=2, delta in {0,2}, nu>=3: QSRG
  SecondOddDeltaNuTwo,   // i=2, delta=1, nu=2: SRG
  SecondOddDeltaHigher,  // i=2, delta=1, nu>=3 (printed with index 1)
};

const char *to_string(SubBranch b);

struct SubconstituentPrediction {
  int index = 0;
  SubBranch branch = SubBranch::None;
  std::string structure; // "SRG", "QSRG" or "regular"
  std::string note;      // reason when branch == None
  BigInt vertex_count;
  BigInt degree;
  std::set<BigInt> adjacent_values;
  std::set<BigInt> nonadjacent_values;

  bool covered() const noexcept { return branch != SubBranch::None; }
};

SubconstituentPrediction predict_sub(const FormSpec &spec, int index);

/// The delta = 1, nu >= 3 claim exactly as printed, before it is assigned to
/// a subconstituent index.
SubconstituentPrediction odd_delta_higher_rank_claim(const FormSpec &spec);

BigInt factorial(std::uint64_t k);

} // namespace orthograph
