#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spochar/partition.hpp"

namespace spochar {

// Weights carry doubled entries so that the half-integral rho of type B and
// the weight zeta stay exact integers (denominators are 1 or 2, never
// anything else).
struct Weight {
  std::vector<long long> doubled;

  int rank() const { return static_cast<int>(doubled.size()); }
  static Weight from_ints(const std::vector<long long>& v);
  bool operator==(const Weight&) const = default;
  std::string str() const;  // halves printed as k/2
};

struct RootSystemSpec {
  enum class Type { A, B, D, Dinf };
  Type type;
  int rank;  // for Dinf: the m parameter instead

  Weight rho() const;
  static RootSystemSpec type_a(int n) { return {Type::A, n}; }
  static RootSystemSpec type_b(int n) { return {Type::B, n}; }
  static RootSystemSpec dinf(int m) { return {Type::Dinf, m}; }
};

// Sorts alpha + rho into strictly decreasing order; nullopt when it has a
// repetition (the vanishing branch of Bott), else the sorted weight and the
// length (inversion count) of the sorting permutation.
struct DottedSort {
  std::vector<int> sorted;  // alpha + rho, sorted
  int length = 0;
};
std::optional<DottedSort> dotted_sort(const std::vector<int>& alpha, const std::vector<int>& rho);

// Bott's algorithm on Gr(k, n) for E = S_lambda(R) (x) S_mu(Q):
// alpha = (mu | lambda), rho = (n-1, ..., 1, 0); returns the cohomology
// weight sigma(alpha+rho)-rho (always a partition) and its degree.
std::optional<std::pair<Partition, int>> bott_general(const Partition& lambda,
                                                      const Partition& mu, int k, int n);

// Frobenius-coordinate corollary: vanishes iff a_d < n-k, else shifts
// (a - (n-k)^d | b + (n-k)^d) in degree d(n-k).
std::optional<std::pair<FrobCoords, int>> bott_frobenius(const FrobCoords& f, int k, int n);

// Regular/singular pairs (lambda | mu) for Gr(n-m, E) and the straightening
// bijection phi; mu runs over Q_0, length(lambda) <= m, length(mu) <= n-m.
bool is_regular_pair(const Partition& lambda, const Partition& mu, int m, int n);
struct PhiResult {
  Partition alpha;
  int weylLength = 0;
};
PhiResult phi(const Partition& lambda, const Partition& mu, int m, int n);

// Positive roots of so(2r+1) in the fixed enumeration order: e_i, then
// e_i - e_j, then e_i + e_j, lexicographic by indices.
struct PosRoot {
  enum class Kind { E, EMinusE, EPlusE };
  Kind kind;
  int i = 0, j = 0;  // 1-based; j unused for Kind::E
  bool operator==(const PosRoot&) const = default;
  std::string str() const;
};
std::vector<PosRoot> positive_roots_B(int rank);

// <lambda, gamma> in doubled-weight arithmetic: integer or not; nullopt when
// the pairing is not an integer.
std::optional<long long> pairing(const Weight& lambdaPlusRho, const PosRoot& gamma);

struct LinkingSequence {
  std::vector<PosRoot> roots;
  std::vector<Weight> weights;        // lambda(0), ..., lambda(r)
  std::vector<long long> coefficients;  // n_i > 0
  bool verify_recurrence(const RootSystemSpec& sys) const;
};

// All sequences of positive roots of length <= maxLen linking start to
// target, by exhaustive DFS; each step's coefficient n_i = <lambda+rho, gamma>
// must be a positive integer.
std::vector<LinkingSequence> find_linking_sequences(const Weight& start, const Weight& target,
                                                    const RootSystemSpec& sys, int maxLen);

// The weight zeta = ((1/2 - m)^n, 0^m) of so(2m+2n+1).
Weight zeta_weight(int m, int n);

} // namespace spochar
