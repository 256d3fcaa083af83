#include "spochar/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace spochar {

SchurSum SchurSum::single(const Partition& p, Int c) {
  SchurSum s;
  s.add_term(p, c);
  return s;
}

Int SchurSum::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Int(0) : it->second;
}

void SchurSum::add_term(const Partition& p, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SchurSum& SchurSum::operator+=(const SchurSum& o) {
  for (auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

SchurSum& SchurSum::operator-=(const SchurSum& o) {
  for (auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

SchurSum SchurSum::operator+(const SchurSum& o) const {
  SchurSum r = *this;
  r += o;
  return r;
}

SchurSum SchurSum::operator-(const SchurSum& o) const {
  SchurSum r = *this;
  r -= o;
  return r;
}

SchurSum SchurSum::operator-() const {
  SchurSum r;
  for (auto& [p, c] : terms_) r.terms_[p] = -c;
  return r;
}

SchurSum SchurSum::times(const Int& c) const {
  SchurSum r;
  if (c == 0) return r;
  for (auto& [p, v] : terms_) r.terms_[p] = v * c;
  return r;
}

SchurSum SchurSum::div_exact(const Int& c) const {
  if (c == 0) throw std::domain_error("schur: division by zero");
  SchurSum r;
  for (auto& [p, v] : terms_) {
    if (v % c != 0) throw std::domain_error("schur: coefficient not divisible");
    r.terms_[p] = v / c;
  }
  return r;
}

SchurSum SchurSum::truncate_length(int maxLen) const {
  SchurSum r;
  for (auto& [p, c] : terms_)
    if (p.length() <= maxLen) r.terms_[p] = c;
  return r;
}

bool SchurSum::all_nonnegative() const {
  for (auto& [p, c] : terms_)
    if (c < 0) return false;
  return true;
}

Int SchurSum::dim(int k) const {
  Int s = 0;
  for (auto& [p, c] : terms_) s += c * dim_schur(p, k);
  return s;
}

namespace {

// Counts LR skew tableaux of shape lambda/mu and content nu: semistandard
// fillings whose reverse reading word (right-to-left, top-to-bottom) is a
// lattice word. Cells are filled in reverse reading order so the lattice
// counts can be maintained incrementally.
struct LrCounter {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<int>> val;  // 1-based [row][col], 0 = empty/outside
  std::vector<int> counts;            // occurrences of each value so far
  Int total = 0;

  LrCounter(const Partition& l, const Partition& m, const Partition& n)
      : lambda(l), mu(m), nu(n) {
    val.assign(l.length() + 1, std::vector<int>(l.part(1) + 2, 0));
    counts.assign(n.length() + 2, 0);
  }

  void run() { fill(1, lambda.part(1)); }

  void fill(int row, int col) {
    if (row > lambda.length()) {
      total += 1;
      return;
    }
    if (col <= mu.part(row)) {
      fill(row + 1, lambda.part(row + 1));
      return;
    }
    if (col > lambda.part(row)) {
      fill(row, lambda.part(row));
      return;
    }
    int right = (col < lambda.part(row)) ? val[row][col + 1] : nu.length();
    int above = (row > 1 && col <= lambda.part(row - 1) && col > mu.part(row - 1))
                    ? val[row - 1][col]
                    : 0;
    int lowGuess = above + 1;
    for (int v = lowGuess; v <= right; ++v) {
      if (counts[v] >= nu.part(v)) continue;
      if (v >= 2 && counts[v] + 1 > counts[v - 1]) continue;  // lattice condition
      val[row][col] = v;
      ++counts[v];
      fill(row, col - 1);
      --counts[v];
      val[row][col] = 0;
    }
  }
};

} // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!lambda.contains(mu)) return 0;
  if (nu.empty()) return mu == lambda ? 1 : 0;
  LrCounter counter(lambda, mu, nu);
  counter.run();
  return counter.total;
}

SchurSum SchurSum::operator*(const SchurSum& o) const {
  SchurSum r;
  for (auto& [mu, c1] : terms_) {
    for (auto& [nu, c2] : o.terms_) {
      Int c = c1 * c2;
      int n = mu.size() + nu.size();
      for (auto& lambda : partitions_of(n)) {
        if (lambda.length() > mu.length() + nu.length()) continue;
        if (lambda.part(1) > mu.part(1) + nu.part(1)) continue;
        if (!lambda.contains(mu) || !lambda.contains(nu)) continue;
        Int lr = lr_coefficient(lambda, mu, nu);
        if (lr != 0) r.add_term(lambda, c * lr);
      }
    }
  }
  return r;
}

SchurSum skew(const Partition& lambda, const Partition& mu) {
  SchurSum r;
  if (!lambda.contains(mu)) return r;
  for (auto& nu : partitions_of(lambda.size() - mu.size())) {
    Int c = lr_coefficient(lambda, mu, nu);
    if (c != 0) r.add_term(nu, c);
  }
  return r;
}

namespace {

struct KostkaCounter {
  const Partition& shape;
  const std::vector<int>& content;
  std::vector<std::vector<int>> val;
  std::vector<int> used;
  Int total = 0;

  KostkaCounter(const Partition& s, const std::vector<int>& c) : shape(s), content(c) {
    val.assign(s.length() + 1, std::vector<int>(s.part(1) + 2, 0));
    used.assign(c.size() + 1, 0);
  }

  void fill(int row, int col) {
    if (row > shape.length()) {
      total += 1;
      return;
    }
    if (col > shape.part(row)) {
      fill(row + 1, 1);
      return;
    }
    int left = (col > 1) ? val[row][col - 1] : 1;
    int above = (row > 1 && col <= shape.part(row - 1)) ? val[row - 1][col] : 0;
    int lo = std::max(left, above + 1);
    for (int v = lo; v <= static_cast<int>(content.size()); ++v) {
      if (used[v] >= content[v - 1]) continue;
      val[row][col] = v;
      ++used[v];
      fill(row, col + 1);
      --used[v];
      val[row][col] = 0;
    }
  }
};

} // namespace

Int kostka(const Partition& shape, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("kostka: negative content");
    total += c;
  }
  if (total != shape.size()) return 0;
  if (shape.empty()) return 1;
  KostkaCounter counter(shape, content);
  counter.fill(1, 1);
  return counter.total;
}

Int dim_schur(const Partition& lambda, int k) {
  if (lambda.length() > k) return 0;
  Int num = 1, den = 1;
  Partition t = lambda.conjugate();
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      num *= k + j - i;
      den *= lambda.part(i) - j + t.part(j) - i + 1;  // hook length
    }
  }
  return num / den;
}

GradedSchurSeries plethysm_family(PlethysmFamily family, int maxDegree) {
  GradedSchurSeries out;
  out.truncation = maxDegree;
  for (int d = 0; d <= maxDegree; ++d) {
    SchurSum comp;
    switch (family) {
      case PlethysmFamily::SymOfSym:
        for (auto& lam : partitions_of(d)) {
          std::vector<int> doubled;
          for (int p : lam.parts()) doubled.push_back(2 * p);
          comp.add_term(Partition(doubled), 1);
        }
        break;
      case PlethysmFamily::SymOfWedge:
        for (auto& lam : partitions_of(d)) {
          std::vector<int> doubled;
          for (int p : lam.parts()) doubled.push_back(2 * p);
          comp.add_term(Partition(doubled).conjugate(), 1);
        }
        break;
      case PlethysmFamily::WedgeOfSym:
      case PlethysmFamily::WedgeOfWedge: {
        QSetSpec spec;
        spec.offset = family == PlethysmFamily::WedgeOfSym ? 1 : -1;
        spec.boundKind = QSetSpec::Bound::MaxSize;
        spec.bound = 2 * d;
        for (auto& lam : enumerate_Q(spec))
          if (lam.size() == 2 * d) comp.add_term(lam, 1);
        break;
      }
    }
    out.coeffs[d] = std::move(comp);
  }
  return out;
}

std::vector<std::vector<Partition>> cauchy_truncated(int D) {
  if (D < 0) throw std::invalid_argument("cauchy_truncated: negative bound");
  std::vector<std::vector<Partition>> out;
  for (int d = 0; d <= D; ++d) out.push_back(partitions_of(d));
  return out;
}

} // namespace spochar
