#pragma once

#include "spochar/partition.hpp"

namespace spochar {

// Outcome of the modification rule: (i_{2m|1}, tau_{2m|1}) plus the number of
// border strips removed (sigma-twist bookkeeping), or Infinite.
struct ModResult {
  bool finite = false;
  int index = 0;      // i_{2m|1}, valid when finite
  Partition tau;      // admissible, valid when finite
  int strips = 0;     // strips removed; tau = tau' sigma-twisted iff odd

  static ModResult infinite() { return {}; }
  static ModResult make(int i, Partition t, int s) { return {true, i, std::move(t), s}; }
  bool operator==(const ModResult& o) const {
    if (finite != o.finite) return false;
    if (!finite) return true;
    return index == o.index && tau == o.tau && strips == o.strips;
  }
};

// Border strip version: iteratively removes rim strips of length
// 2*mu_1^T - 2m - 1 anchored in the first column, accumulating c(R)-1.
ModResult modrule_border(const Partition& mu, int m);

// Weyl group version: straightens mu^T + rho under the dotted D_infinity
// action, rho = -1/2(2m+1, 2m+3, ...), truncated to |mu| + 2m + 2
// coordinates. Infinite iff |mu^T + rho| has a repeated absolute value.
ModResult modrule_weyl(const Partition& mu, int m);

// The unique mu with tau(mu) = lambda-or-lambda^sigma and i(mu) = 1:
// mu = s_0 . lambda, i.e. mu_1^T = 2m+2-lambda_2^T, mu_2^T = 2m+2-lambda_1^T.
Partition tor1_partner(const Partition& lambda, int m);

} // namespace spochar
