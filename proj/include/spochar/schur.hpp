#pragma once

#include <map>
#include <vector>

#include "spochar/bigint.hpp"
#include "spochar/partition.hpp"

namespace spochar {

// Finite integer-linear combination of Schur classes. Multiplication is
// Littlewood-Richardson; no zero coefficients are stored.
class SchurSum {
public:
  SchurSum() = default;
  static SchurSum single(const Partition& p, Int c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, Int>& terms() const { return terms_; }
  Int coeff(const Partition& p) const;
  void add_term(const Partition& p, const Int& c);

  SchurSum& operator+=(const SchurSum& o);
  SchurSum& operator-=(const SchurSum& o);
  SchurSum operator+(const SchurSum& o) const;
  SchurSum operator-(const SchurSum& o) const;
  SchurSum operator-() const;
  SchurSum operator*(const SchurSum& o) const;  // LR expansion
  SchurSum times(const Int& c) const;
  bool operator==(const SchurSum& o) const { return terms_ == o.terms_; }

  SchurSum div_exact(const Int& c) const;      // throws on non-divisible coefficient
  SchurSum truncate_length(int maxLen) const;  // drop partitions longer than maxLen
  bool all_nonnegative() const;

  // Evaluation dim S_lambda(C^k) applied termwise.
  Int dim(int k) const;

private:
  std::map<Partition, Int> terms_;
};

// Littlewood-Richardson coefficient c^lambda_{mu,nu} by the lattice-word
// tableau rule.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// s_{lambda/mu} = sum_nu c^lambda_{mu,nu} s_nu; zero sum when mu is not
// contained in lambda.
SchurSum skew(const Partition& lambda, const Partition& mu);

// Kostka number: semistandard tableaux of the given shape and content.
Int kostka(const Partition& shape, const std::vector<int>& content);

// dim S_lambda(C^k), by the hook content formula.
Int dim_schur(const Partition& lambda, int k);

struct GradedSchurSeries {
  int truncation = 0;
  std::map<int, SchurSum> coeffs;  // degree -> component
};

enum class PlethysmFamily { SymOfSym, SymOfWedge, WedgeOfSym, WedgeOfWedge };

// The four closed-form plethysm decompositions: degree-d component of
//   S^.(S^2) = sum_{|lambda|=d} S_{2 lambda},
//   S^.(W^2) = sum_{|lambda|=d} S_{(2 lambda)^T},
//   W^.(S^2) = sum over Q_1 of size 2d,
//   W^.(W^2) = sum over Q_{-1} of size 2d.
GradedSchurSeries plethysm_family(PlethysmFamily family, int maxDegree);

// Cauchy identity diagonal: degree-d slice of S^.(U (x) E) is indexed by all
// partitions of d (pairs (mu, mu)).
std::vector<std::vector<Partition>> cauchy_truncated(int D);

} // namespace spochar
