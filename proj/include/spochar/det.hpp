#pragma once

#include <stdexcept>
#include <vector>

namespace spochar {

// Exact determinant over any commutative coefficient ring (SchurSum,
// LaurentCharacter, ...). Leibniz expansion with memoized minors on column
// subsets: 2^r ring elements, fine for the r <= 8 matrices that show up here.
//
// Ring requirements: default construction = 0, +=, -=, operator*, is_zero().
template <typename Ring>
Ring determinant(const std::vector<std::vector<Ring>>& a) {
  const size_t r = a.size();
  for (auto& row : a)
    if (row.size() != r) throw std::invalid_argument("determinant: matrix not square");
  if (r == 0)
    throw std::invalid_argument("determinant: empty matrix (callers handle 0x0 = 1)");
  // minors[S] = det of rows 0..k-1 on column set S, |S| = k
  std::vector<Ring> minors(size_t(1) << r);
  for (size_t j = 0; j < r; ++j) minors[size_t(1) << j] = a[0][j];
  std::vector<size_t> bySize;
  for (size_t k = 2; k <= r; ++k) {
    for (size_t S = 0; S < (size_t(1) << r); ++S) {
      if (static_cast<size_t>(__builtin_popcountll(S)) != k) continue;
      Ring acc;
      int pos = 0;
      for (size_t j = 0; j < r; ++j) {
        if (!(S & (size_t(1) << j))) continue;
        Ring term = a[k - 1][j] * minors[S ^ (size_t(1) << j)];
        if (pos % 2 == (static_cast<int>(k) - 1) % 2)
          acc += term;
        else
          acc -= term;
        ++pos;
      }
      minors[S] = std::move(acc);
    }
  }
  return minors[(size_t(1) << r) - 1];
}

} // namespace spochar
