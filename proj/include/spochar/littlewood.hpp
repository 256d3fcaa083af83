#pragma once

#include <map>
#include <optional>
#include <string>

#include "spochar/characters.hpp"
#include "spochar/modrule.hpp"
#include "spochar/partition.hpp"
#include "spochar/schur.hpp"

namespace spochar {

// Terms of the Littlewood complex L^lambda_.(U): homological degree i holds
// the Schur expansion of the sum of S_{lambda/mu}(U) over mu in Q_{-1} with
// |mu| = 2i.
struct ComplexTerms {
  Partition lambda;
  std::map<int, SchurSum> terms;
};

ComplexTerms littlewood_terms(const Partition& lambda, int maxI);

// Euler characteristic of L^lambda_.(U) as a torus character:
// (1/2) det(h_{lambda_i-i+j} + h_{lambda_i-i-j+2}) with h_d = [S^d(C^{2m|1})],
// r = ell(lambda). Throws if an odd coefficient blocks the exact halving.
LaurentCharacter euler_det(const Partition& lambda, int m);

// Homology of the Littlewood complex: concentrated in degree i_{2m|1}(lambda)
// with class S_{[tau_{2m|1}(lambda)]}, or identically zero.
struct HomologyResult {
  bool zero = false;
  int degree = 0;
  Partition cls;  // admissible label of the irreducible
};
HomologyResult homology(const Partition& lambda, int m);

enum class TorIdealVariant { S22ev, S22od, GeneralM };

// Homological degree-i term of the minimal free resolution over S^.(W^2 E):
// S22ev = quotient by the S_{(2,2)} ideal, S22od = the odd-rank companion
// module, GeneralM = quotient by the S_{(2^{2m+2})} ideal.
SchurSum tor_ideal(int i, int m, TorIdealVariant variant);

// Tor_i(M_lambda, C) rows for i <= maxI: bounded preimage enumeration of the
// modification rule over alpha with |alpha| <= max(|lambda|, |lambda^sigma|)
// + maxI*(2m+3).
struct TorTable {
  Partition lambda;
  std::map<int, SchurSum> rows;
};
TorTable tor_M(const Partition& lambda, int m, int maxI);

// Per-degree assembly of the characters [M_lambda] = [S^.(W^2 E)] *
// sum (-1)^i [Tor_i], truncated to GL_n (length <= n) and t-degree <= D, as a
// map degree -> (admissible V-label -> E-Schur sum). When restrictLabels is
// set, labels with length > n are dropped (the Z_{V,E} convention).
std::map<int, std::map<Partition, SchurSum>> module_characters(int m, int n, int D,
                                                               bool restrictLabels);

struct CheckReport {
  bool ok = true;
  long long cases = 0;
  std::string firstDiscrepancy;
};

// Degreewise comparison of sum_lambda [M_lambda] (x) [S_{[lambda]}] against
// the Cauchy expansion of S^.(E (x) U) pushed to the irreducible basis via
// schur_to_irr and specialize_spo. D <= ~10.
CheckReport verify_balance(int m, int n, int D);

// Product decomposition S^.(E (x) U) = (S^.(E (x) U)/(W^2 E)) (x) S^.(W^2 E)
// for n <= m, checked degreewise against the admissible-partition quotient
// expansion.
CheckReport acyclicity_identity(int m, int n, int D);

} // namespace spochar
