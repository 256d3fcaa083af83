#include "spochar/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spochar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

int Partition::col(int j) const {
  int c = 0;
  for (int p : parts_)
    if (p >= j) ++c; else break;
  return c;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int j = 1; j <= part(1); ++j) cols.push_back(col(j));
  return Partition(std::move(cols));
}

int Partition::rank() const {
  int d = 0;
  while (part(d + 1) >= d + 1) ++d;
  return d;
}

bool Partition::contains(const Partition& mu) const {
  for (int i = 1; i <= mu.length(); ++i)
    if (part(i) < mu.part(i)) return false;
  return true;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  return parts_ <=> o.parts_;
}

int FrobCoords::degree() const { return std::accumulate(arms.begin(), arms.end(), 0); }

FrobCoords frobenius(const Partition& lambda) {
  FrobCoords f;
  int d = lambda.rank();
  for (int i = 1; i <= d; ++i) {
    f.arms.push_back(lambda.part(i) - i);
    f.legs.push_back(lambda.col(i) - i);
  }
  return f;
}

Partition from_frobenius(const FrobCoords& f) {
  if (f.arms.size() != f.legs.size())
    throw std::invalid_argument("frobenius: arms and legs differ in length");
  auto strictly_decreasing = [](const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) return false;
      if (i + 1 < v.size() && v[i] <= v[i + 1]) return false;
    }
    return true;
  };
  if (!strictly_decreasing(f.arms) || !strictly_decreasing(f.legs))
    throw std::invalid_argument("frobenius: arms/legs must be strictly decreasing and nonnegative");
  int d = f.rank();
  if (d == 0) return Partition{};
  int rows = f.legs[0] + 1;  // first column length
  std::vector<int> parts(rows, 0);
  for (int i = 1; i <= d; ++i) parts[i - 1] = f.arms[i - 1] + i;
  for (int r = d + 1; r <= rows; ++r) {
    int c = 0;
    for (int j = 1; j <= d; ++j)
      if (f.legs[j - 1] + j >= r) ++c;
    parts[r - 1] = c;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_Q(const QSetSpec& spec) {
  std::vector<Partition> out;
  const int lo = std::max(0, spec.offset);  // need a_j >= 0 and b_j = a_j - offset >= 0
  auto size_of = [&](int sumA, int d) { return 2 * sumA - d * spec.offset + d; };
  auto within = [&](int sumA, int d) {
    return spec.boundKind == QSetSpec::Bound::MaxDegree ? sumA <= spec.bound
                                                        : size_of(sumA, d) <= spec.bound;
  };
  auto parity_ok = [&](int d) {
    if (spec.parity == QParity::Any) return true;
    return (spec.parity == QParity::Even) == (d % 2 == 0);
  };
  for (int d = 0;; ++d) {
    int minSum = d * lo + d * (d - 1) / 2;
    if (d > 0 && !within(minSum, d)) break;
    if (!parity_ok(d)) continue;
    if (d == 0) {
      out.emplace_back();
      continue;
    }
    std::vector<int> chosen;  // arms chosen smallest-first
    auto rec = [&](auto&& self, int slot, int minVal, int sum) -> void {
      if (slot == d) {
        FrobCoords f;
        f.arms.assign(chosen.rbegin(), chosen.rend());
        for (int a : f.arms) f.legs.push_back(a - spec.offset);
        out.push_back(from_frobenius(f));
        return;
      }
      int remaining = d - slot - 1;
      for (int a = minVal;; ++a) {
        int minRest = remaining * (a + 1) + remaining * (remaining - 1) / 2;
        if (!within(sum + a + minRest, d)) break;
        chosen.push_back(a);
        self(self, slot + 1, a + 1, sum + a);
        chosen.pop_back();
      }
    };
    rec(rec, 0, lo, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_admissible(const Partition& lambda, int m) {
  return lambda.col(1) + lambda.col(2) <= 2 * m + 1;
}

Partition sigma(const Partition& lambda, int m) {
  if (!is_admissible(lambda, m))
    throw std::invalid_argument("sigma: partition is not admissible");
  std::vector<int> cols(lambda.conjugate().parts());
  int newFirst = 2 * m + 1 - lambda.col(1);
  if (cols.empty()) {
    if (newFirst > 0) cols.push_back(newFirst);
  } else {
    cols[0] = newFirst;
  }
  return Partition(std::move(cols)).conjugate();
}

Partition bar(const Partition& lambda, int m) {
  if (lambda.length() <= m) return lambda;
  return sigma(lambda, m);
}

std::optional<std::pair<Partition, int>> remove_border_strip(const Partition& lambda, int len) {
  if (len < 1 || lambda.empty()) return std::nullopt;
  // Rim walk from the bottom box of the first column toward the northeast.
  int row = lambda.length(), colPos = 1;
  std::vector<int> entryCol(lambda.length() + 1, 0);
  entryCol[row] = 1;
  for (int step = 1; step < len; ++step) {
    if (colPos < lambda.part(row)) {
      ++colPos;
    } else if (row > 1) {
      --row;
      entryCol[row] = colPos;
    } else {
      return std::nullopt;  // rim exhausted
    }
  }
  // The strip is a skew shape exactly when it ends at the right end of its row.
  if (colPos != lambda.part(row)) return std::nullopt;
  std::vector<int> rest;
  for (int i = 1; i < row; ++i) rest.push_back(lambda.part(i));
  for (int i = row; i <= lambda.length(); ++i) rest.push_back(entryCol[i] - 1);
  for (size_t i = 0; i + 1 < rest.size(); ++i)
    if (rest[i] < rest[i + 1]) return std::nullopt;
  int columns = lambda.part(row);  // the strip spans columns 1..lambda_row
  return std::make_pair(Partition(std::move(rest)), columns);
}

static void gen_partitions(int n, int maxPart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, maxPart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  gen_partitions(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int n, int maxLength) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k))
      if (maxLength < 0 || p.length() <= maxLength) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::ostringstream os;
  for (int i = 0; i < p.length(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
  return os.str();
}

Partition parse_partition(const std::string& text) {
  std::string s = text;
  if (s.empty() || s == "-") return Partition{};
  std::vector<int> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("bad partition syntax: '" + text + "'");
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad partition syntax: '" + text + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

} // namespace spochar
