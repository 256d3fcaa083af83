#pragma once

#include <map>

#include "spochar/laurent.hpp"
#include "spochar/partition.hpp"
#include "spochar/schur.hpp"

namespace spochar {

// [S^d(C^{2m})]: sum of d-fold products of x_1..x_m, x_1^{-1}..x_m^{-1}.
LaurentCharacter h_even(int d, int m);
// [S^d(C^{2m+1})] = sum_{i<=d} h_even(i, m).
LaurentCharacter h_odd(int d, int m);
// [S^d(C^{2m|1})] = h_even(d, m) + h_even(d-1, m).
LaurentCharacter h_super(int d, int m);

// Torus character of the Schur functor S_lambda(C^{2m|1}) (Jacobi-Trudi over
// h_super), and of the skew functor S_{lambda/mu}(C^{2m|1}).
LaurentCharacter char_schur_super(const Partition& lambda, int m);
LaurentCharacter char_skew_super(const Partition& lambda, const Partition& mu, int m);

// Weyl character formula for the irreducible so(2m+1)-representation of
// highest weight lambda (ell(lambda) <= m). Computed in doubled exponents and
// divided exactly; a nonzero remainder throws.
LaurentCharacter wcf_so_odd(const Partition& lambda, int m);

// Character of the irreducible SpO(2m|1)-representation of highest weight
// lambda via the super Weyl character formula in pre-cancellation form:
// numerator times prod_i (x_i^{1/2} + x_i^{-1/2}), denominator from the even
// roots {2e_i, e_i +- e_j}. Equals wcf_so_odd exactly.
LaurentCharacter wcf_spo(const Partition& lambda, int m);

// det([S^{lambda_i-i+j}(C^{2m+1})] - [S^{lambda_i-i-j}(C^{2m+1})])_{i,j=1..m}.
LaurentCharacter koike_terada(const Partition& lambda, int m);

// Weyl dimension formula for so(2m+1), exact.
Int dim_so_odd(const Partition& lambda, int m);

// A class in K(SpO(U)) / its finite-rank quotient, in either basis.
struct KClass {
  enum class Basis { Schur, Irr };
  Basis basis = Basis::Schur;
  std::map<Partition, Int> terms;

  void add(const Partition& p, const Int& c);
  bool operator==(const KClass& o) const { return basis == o.basis && terms == o.terms; }
};

// [S_lambda(U)] = sum_{mu,nu} c^lambda_{mu,(2nu)^T} [S_{[mu]}(U)]
KClass schur_to_irr(const KClass& k);
// [S_{[lambda]}(U)] = sum_{mu in Q_{-1}} (-1)^{|mu|/2} [S_{lambda/mu}(U)]
KClass irr_to_schur(const KClass& k);

// Termwise modification rule: [S_{[lambda]}] -> (-1)^{i} [S_{[tau]}],
// infinite index -> 0. Output labels are admissible for the given m.
KClass specialize_spo(const KClass& k, int m);

// Torus character of an irr-basis class with admissible labels; the sigma
// twin of a label has the same torus character (det restricts trivially).
LaurentCharacter torus_character(const KClass& k, int m);
// Torus character of a schur-basis class under the h_super substitution.
LaurentCharacter torus_character_schur(const KClass& k, int m);

} // namespace spochar
