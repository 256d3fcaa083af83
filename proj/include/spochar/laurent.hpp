#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spochar/bigint.hpp"

namespace spochar {

// Exact multivariate Laurent polynomial with Int coefficients: the value type
// of characters on a finite-rank torus. All nonzero terms share one exponent
// vector length; the zero polynomial is rank-agnostic.
class LaurentCharacter {
public:
  using Exp = std::vector<int>;

  LaurentCharacter() = default;
  static LaurentCharacter zero() { return {}; }
  static LaurentCharacter one(int rank) { return monomial(Exp(rank, 0), 1); }
  static LaurentCharacter monomial(Exp e, Int c);

  bool is_zero() const { return terms_.empty(); }
  int rank() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size()); }
  const std::map<Exp, Int>& terms() const { return terms_; }
  Int coeff(const Exp& e) const;

  void add_term(const Exp& e, const Int& c);

  LaurentCharacter& operator+=(const LaurentCharacter& o);
  LaurentCharacter& operator-=(const LaurentCharacter& o);
  LaurentCharacter operator+(const LaurentCharacter& o) const;
  LaurentCharacter operator-(const LaurentCharacter& o) const;
  LaurentCharacter operator-() const;
  LaurentCharacter operator*(const LaurentCharacter& o) const;
  LaurentCharacter& operator*=(const LaurentCharacter& o);
  LaurentCharacter times(const Int& c) const;

  bool operator==(const LaurentCharacter& o) const { return terms_ == o.terms_; }

  // Exact division by an integer; throws if any coefficient is not divisible.
  LaurentCharacter div_exact(const Int& c) const;

  // Halves every exponent; throws if any exponent is odd. Used to return from
  // the doubled-exponent ring the Weyl character formulas are computed in.
  LaurentCharacter halve_exponents() const;

  Int eval_at_one() const;  // total dimension

  std::string str(const std::string& var = "x") const;

private:
  std::map<Exp, Int> terms_;  // lexicographic key order; no zero coefficients
  void check_rank(const LaurentCharacter& o) const;
};

// Exact quotient f / g; throws std::domain_error when the division is not
// exact (nonzero remainder is a bug detector: every quotient we take is exact
// by theory).
LaurentCharacter divide_exact(const LaurentCharacter& f, const LaurentCharacter& g);

} // namespace spochar
