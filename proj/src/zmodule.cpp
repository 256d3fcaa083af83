#include "spochar/zmodule.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "spochar/characters.hpp"
#include "spochar/littlewood.hpp"

namespace spochar {

BigradedCharacter z_character(int m, int n, int D) {
  BigradedCharacter out;
  out.m = m;
  out.n = n;
  out.truncation = D;
  out.coeffs = module_characters(m, n, D, /*restrictLabels=*/true);
  return out;
}

BigradedCharacter pbw_upper_bound(int m, int n, int D) {
  BigradedCharacter out;
  out.m = m;
  out.n = n;
  out.truncation = D;
  GradedSchurSeries wedge = plethysm_family(PlethysmFamily::SymOfWedge, D / 2);
  for (auto& lambda : partitions_up_to(D, n)) {
    if (!is_admissible(lambda, m)) continue;
    SchurSum slambda = SchurSum::single(lambda, 1);
    for (int e = 0; 2 * e + lambda.size() <= D; ++e) {
      SchurSum prod = (slambda * wedge.coeffs.at(e)).truncate_length(n);
      if (!prod.is_zero()) out.coeffs[lambda.size() + 2 * e][lambda] += prod;
    }
  }
  return out;
}

std::vector<Int> z_hilbert(int m, int n, int D) {
  BigradedCharacter z = z_character(m, n, D);
  std::vector<Int> dims(D + 1, Int(0));
  for (auto& [d, labels] : z.coeffs) {
    for (auto& [label, sum] : labels) {
      Int labelDim = dim_so_odd(bar(label, m), m);
      for (auto& [theta, c] : sum.terms()) dims[d] += labelDim * c * dim_schur(theta, n);
    }
  }
  return dims;
}

std::vector<Int> z_hilbert_closed(int m, int n, int D) {
  // ((1+t)/(1-t)^{2m})^n truncated at D
  std::vector<Int> series(D + 1, Int(0));
  series[0] = 1;
  auto mulBinom = [&](int c0, int c1) {  // multiply by c0 + c1*t
    std::vector<Int> next(D + 1, Int(0));
    for (int d = 0; d <= D; ++d) {
      next[d] = series[d] * c0;
      if (d > 0) next[d] += series[d - 1] * c1;
    }
    series = std::move(next);
  };
  for (int k = 0; k < n; ++k) mulBinom(1, 1);
  // multiply by 1/(1-t)^{2mn}: coefficients C(d + 2mn - 1, 2mn - 1)
  int e = 2 * m * n;
  std::vector<Int> geo(D + 1);
  for (int d = 0; d <= D; ++d) geo[d] = binomial(d + e - 1, e - 1);
  if (e == 0) {
    for (int d = 0; d <= D; ++d) geo[d] = (d == 0) ? 1 : 0;
  }
  std::vector<Int> out(D + 1, Int(0));
  for (int d = 0; d <= D; ++d)
    for (int k = 0; k <= d; ++k) out[d] += series[k] * geo[d - k];
  return out;
}

QuadricAlgebraDims quadric_dims(int m, int maxDegree) {
  QuadricAlgebraDims out;
  out.m = m;
  auto dimSym = [&](int d) -> Int {
    if (d < 0) return 0;
    return binomial(d + 2 * m, 2 * m);
  };
  for (int d = 0; d <= maxDegree; ++d) out.dims.push_back(dimSym(d) - dimSym(d - 2));
  return out;
}

WeightSpaceCheck quadric_weight_space(int m, int n, const std::vector<int>& weight) {
  if (static_cast<int>(weight.size()) != n)
    throw std::invalid_argument("quadric_weight_space: weight length must be n");
  for (int w : weight)
    if (w < 0) throw std::invalid_argument("quadric_weight_space: weight entries must be >= 0");
  int d = std::accumulate(weight.begin(), weight.end(), 0);
  BigradedCharacter z = z_character(m, n, d);
  WeightSpaceCheck check{0, 1};
  if (z.coeffs.count(d)) {
    for (auto& [label, sum] : z.coeffs.at(d)) {
      Int labelDim = dim_so_odd(bar(label, m), m);
      for (auto& [theta, c] : sum.terms()) check.extracted += labelDim * c * kostka(theta, weight);
    }
  }
  QuadricAlgebraDims A = quadric_dims(m, *std::max_element(weight.begin(), weight.end()) + 1);
  for (int w : weight) check.product *= A.dims[w];
  return check;
}

} // namespace spochar
