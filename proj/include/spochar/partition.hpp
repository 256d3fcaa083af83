#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spochar {

// A partition: weakly decreasing tuple of nonnegative integers, trailing
// zeros trimmed. Immutable after construction.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                    // number of boxes
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;               // 1-based row length, 0 past the end
  int col(int j) const;                // 1-based column length (#{i : row_i >= j})
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  int rank() const;                    // largest d with part(d) >= d
  bool contains(const Partition& mu) const;

  // Total order by (size, lexicographic on parts); deterministic everywhere
  // (map keys, JSON output, CLI listings).
  std::strong_ordering operator<=>(const Partition& o) const;
  bool operator==(const Partition& o) const = default;

private:
  std::vector<int> parts_;
};

// Frobenius coordinates (a_1,...,a_d | b_1,...,b_d): arm and leg lengths
// along the main diagonal; both strictly decreasing and >= 0.
struct FrobCoords {
  std::vector<int> arms;
  std::vector<int> legs;

  int rank() const { return static_cast<int>(arms.size()); }
  int degree() const;  // a_1 + ... + a_d
  bool operator==(const FrobCoords&) const = default;
};

FrobCoords frobenius(const Partition& lambda);
// Throws std::invalid_argument unless arms/legs are strictly decreasing,
// nonnegative and of equal length.
Partition from_frobenius(const FrobCoords& f);

enum class QParity { Any, Even, Odd };

struct QSetSpec {
  int offset = 0;                      // a_j - b_j = offset for all j
  QParity parity = QParity::Any;       // rank parity filter
  enum class Bound { MaxSize, MaxDegree } boundKind = Bound::MaxSize;
  int bound = 0;
};

// All partitions whose Frobenius coordinates have the given constant
// arm-minus-leg offset, filtered by rank parity, within the bound.
// Sorted by (size, lex).
std::vector<Partition> enumerate_Q(const QSetSpec& spec);

// lambda_1^T + lambda_2^T <= 2m+1
bool is_admissible(const Partition& lambda, int m);
// Replaces the first column length by 2m+1 - lambda_1^T. Involution on
// admissible partitions; throws on non-admissible input.
Partition sigma(const Partition& lambda, int m);
// The one of {lambda, sigma(lambda)} with length <= m.
Partition bar(const Partition& lambda, int m);

// Removes a border strip of `len` boxes walking the rim from the bottom box
// of the first column toward the northeast. Returns the remaining partition
// and the number of distinct columns the strip occupies, or nullopt when the
// walk exhausts the rim or the remainder is not a partition shape.
std::optional<std::pair<Partition, int>> remove_border_strip(const Partition& lambda, int len);

// All partitions of exactly n / of size at most n, sorted by (size, lex).
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n, int maxLength = -1);

// Text syntax: comma-separated parts, "-" for the empty partition.
std::string to_string(const Partition& p);
Partition parse_partition(const std::string& text);

} // namespace spochar
