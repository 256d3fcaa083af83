#pragma once

#include <map>
#include <vector>

#include "spochar/bigint.hpp"
#include "spochar/partition.hpp"
#include "spochar/schur.hpp"

namespace spochar {

// t-graded O(V) x GL_n character: degree -> (admissible O(V)-label ->
// GL_n Schur sum). deg(V (x) E) = 1, deg(W^2 E) = 2, so the t-degree of an
// E-partition theta contribution is |theta|.
struct BigradedCharacter {
  int m = 0, n = 0, truncation = 0;
  std::map<int, std::map<Partition, SchurSum>> coeffs;
};

// Character of Z_{V,E} assembled from the resolution-based characters
// [M_lambda], summed over admissible lambda with length <= n.
BigradedCharacter z_character(int m, int n, int D);

// PBW upper bound: the product character of S^.(E (x) V)/(S^2 E) with
// S^.(W^2 E); dominates z_character coefficientwise.
BigradedCharacter pbw_upper_bound(int m, int n, int D);

// Graded dimensions of Z_{V,E} through degree D, from z_character / from the
// closed form ((1+t)/(1-t)^{2m})^n.
std::vector<Int> z_hilbert(int m, int n, int D);
std::vector<Int> z_hilbert_closed(int m, int n, int D);

// dim A_d for the quadric hypersurface ring A = S^.(V)/(q), dim V = 2m+1.
struct QuadricAlgebraDims {
  int m = 0;
  std::vector<Int> dims;  // dims[d] = dim S^d(C^{2m+1}) - dim S^{d-2}(C^{2m+1})
};
QuadricAlgebraDims quadric_dims(int m, int maxDegree);

// GL_n weight-space dimension of Z_{V,E} at the given weight, extracted from
// z_character via Kostka numbers, next to the product formula
// prod_i dim A_{w_i}; the two must agree.
struct WeightSpaceCheck {
  Int extracted;
  Int product;
  bool ok() const { return extracted == product; }
};
WeightSpaceCheck quadric_weight_space(int m, int n, const std::vector<int>& weight);

} // namespace spochar
