#include "spochar/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spochar {

Weight Weight::from_ints(const std::vector<long long>& v) {
  Weight w;
  for (long long x : v) w.doubled.push_back(2 * x);
  return w;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ",";
    if (doubled[i] % 2 == 0)
      os << doubled[i] / 2;
    else
      os << doubled[i] << "/2";
  }
  os << ")";
  return os.str();
}

Weight RootSystemSpec::rho() const {
  Weight w;
  switch (type) {
    case Type::A:
      for (int i = 0; i < rank; ++i) w.doubled.push_back(2LL * (rank - 1 - i));
      break;
    case Type::B:
      for (int i = 0; i < rank; ++i) w.doubled.push_back(2LL * (rank - i) - 1);
      break;
    case Type::D:
      for (int i = 0; i < rank; ++i) w.doubled.push_back(2LL * (rank - 1 - i));
      break;
    case Type::Dinf:
      throw std::invalid_argument("rho of D_infinity is not a finite weight");
  }
  return w;
}

std::optional<DottedSort> dotted_sort(const std::vector<int>& alpha, const std::vector<int>& rho) {
  if (alpha.size() != rho.size()) throw std::invalid_argument("dotted_sort: rank mismatch");
  std::vector<int> v(alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i) v[i] = alpha[i] + rho[i];
  std::set<int> seen(v.begin(), v.end());
  if (seen.size() != v.size()) return std::nullopt;
  int inversions = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] < v[j]) ++inversions;
  std::sort(v.begin(), v.end(), std::greater<int>());
  return DottedSort{std::move(v), inversions};
}

std::optional<std::pair<Partition, int>> bott_general(const Partition& lambda,
                                                      const Partition& mu, int k, int n) {
  if (lambda.length() > k || mu.length() > n - k)
    throw std::invalid_argument("bott_general: preconditions violated");
  std::vector<int> alpha, rho;
  for (int i = 1; i <= n - k; ++i) alpha.push_back(mu.part(i));
  for (int i = 1; i <= k; ++i) alpha.push_back(lambda.part(i));
  for (int i = 0; i < n; ++i) rho.push_back(n - 1 - i);
  auto s = dotted_sort(alpha, rho);
  if (!s) return std::nullopt;
  std::vector<int> parts(n);
  for (int i = 0; i < n; ++i) parts[i] = s->sorted[i] - rho[i];
  return std::make_pair(Partition(std::move(parts)), s->length);
}

std::optional<std::pair<FrobCoords, int>> bott_frobenius(const FrobCoords& f, int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("bott_frobenius: need 0 <= k <= n");
  int d = f.rank();
  if (d == 0) return std::make_pair(FrobCoords{}, 0);
  int shift = n - k;
  if (f.arms[d - 1] < shift) return std::nullopt;
  FrobCoords g;
  for (int i = 0; i < d; ++i) {
    g.arms.push_back(f.arms[i] - shift);
    g.legs.push_back(f.legs[i] + shift);
  }
  return std::make_pair(std::move(g), d * shift);
}

namespace {

std::vector<int> pair_vector(const Partition& lambda, const Partition& mu, int m, int n) {
  if (lambda.length() > m || mu.length() > n - m)
    throw std::invalid_argument("pair: need ell(lambda) <= m, ell(mu) <= n-m");
  std::vector<int> alpha;
  for (int i = 1; i <= m; ++i) alpha.push_back(lambda.part(i));
  for (int i = 1; i <= n - m; ++i) alpha.push_back(mu.part(i));
  return alpha;
}

} // namespace

bool is_regular_pair(const Partition& lambda, const Partition& mu, int m, int n) {
  std::vector<int> alpha = pair_vector(lambda, mu, m, n);
  std::vector<int> rho;
  for (int i = 0; i < n; ++i) rho.push_back(n - 1 - i);
  return dotted_sort(alpha, rho).has_value();
}

PhiResult phi(const Partition& lambda, const Partition& mu, int m, int n) {
  std::vector<int> alpha = pair_vector(lambda, mu, m, n);
  std::vector<int> rho;
  for (int i = 0; i < n; ++i) rho.push_back(n - 1 - i);
  auto s = dotted_sort(alpha, rho);
  if (!s) throw std::invalid_argument("phi: singular pair");
  std::vector<int> parts(n);
  for (int i = 0; i < n; ++i) parts[i] = s->sorted[i] - rho[i];
  return PhiResult{Partition(std::move(parts)), s->length};
}

std::string PosRoot::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::E: os << "e" << i; break;
    case Kind::EMinusE: os << "e" << i << "-e" << j; break;
    case Kind::EPlusE: os << "e" << i << "+e" << j; break;
  }
  return os.str();
}

std::vector<PosRoot> positive_roots_B(int rank) {
  std::vector<PosRoot> roots;
  for (int i = 1; i <= rank; ++i) roots.push_back({PosRoot::Kind::E, i, 0});
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) roots.push_back({PosRoot::Kind::EMinusE, i, j});
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) roots.push_back({PosRoot::Kind::EPlusE, i, j});
  return roots;
}

std::optional<long long> pairing(const Weight& w, const PosRoot& gamma) {
  // <w, e_i> = 2 w_i = (doubled w_i); <w, e_i +- e_j> = w_i +- w_j.
  switch (gamma.kind) {
    case PosRoot::Kind::E:
      return w.doubled[gamma.i - 1];
    case PosRoot::Kind::EMinusE: {
      long long s = w.doubled[gamma.i - 1] - w.doubled[gamma.j - 1];
      if (s % 2 != 0) return std::nullopt;
      return s / 2;
    }
    case PosRoot::Kind::EPlusE: {
      long long s = w.doubled[gamma.i - 1] + w.doubled[gamma.j - 1];
      if (s % 2 != 0) return std::nullopt;
      return s / 2;
    }
  }
  return std::nullopt;
}

namespace {

Weight subtract_root(const Weight& w, const PosRoot& gamma, long long n) {
  Weight r = w;
  switch (gamma.kind) {
    case PosRoot::Kind::E:
      r.doubled[gamma.i - 1] -= 2 * n;
      break;
    case PosRoot::Kind::EMinusE:
      r.doubled[gamma.i - 1] -= 2 * n;
      r.doubled[gamma.j - 1] += 2 * n;
      break;
    case PosRoot::Kind::EPlusE:
      r.doubled[gamma.i - 1] -= 2 * n;
      r.doubled[gamma.j - 1] -= 2 * n;
      break;
  }
  return r;
}

} // namespace

bool LinkingSequence::verify_recurrence(const RootSystemSpec& sys) const {
  if (weights.size() != roots.size() + 1 || coefficients.size() != roots.size()) return false;
  Weight rho = sys.rho();
  for (size_t t = 0; t < roots.size(); ++t) {
    Weight wr = weights[t];
    for (int i = 0; i < wr.rank(); ++i) wr.doubled[i] += rho.doubled[i];
    auto n = pairing(wr, roots[t]);
    if (!n || *n <= 0 || *n != coefficients[t]) return false;
    if (!(subtract_root(weights[t], roots[t], *n) == weights[t + 1])) return false;
  }
  return true;
}

std::vector<LinkingSequence> find_linking_sequences(const Weight& start, const Weight& target,
                                                    const RootSystemSpec& sys, int maxLen) {
  if (sys.type != RootSystemSpec::Type::B)
    throw std::invalid_argument("find_linking_sequences: type B only");
  if (maxLen > 4) throw std::invalid_argument("find_linking_sequences: maxLen > 4");
  const Weight rho = sys.rho();
  const auto roots = positive_roots_B(sys.rank);
  std::vector<LinkingSequence> found;
  LinkingSequence cur;
  cur.weights.push_back(start);

  auto rec = [&](auto&& self, const Weight& w, int depth) -> void {
    if (w == target) found.push_back(cur);
    if (depth == maxLen) return;
    for (const auto& gamma : roots) {
      Weight wr = w;
      for (int i = 0; i < w.rank(); ++i) wr.doubled[i] += rho.doubled[i];
      auto n = pairing(wr, gamma);
      if (!n || *n <= 0) continue;
      Weight next = subtract_root(w, gamma, *n);
      cur.roots.push_back(gamma);
      cur.coefficients.push_back(*n);
      cur.weights.push_back(next);
      self(self, next, depth + 1);
      cur.roots.pop_back();
      cur.coefficients.pop_back();
      cur.weights.pop_back();
    }
  };
  rec(rec, start, 0);
  return found;
}

Weight zeta_weight(int m, int n) {
  Weight w;
  for (int i = 0; i < n; ++i) w.doubled.push_back(1 - 2 * m);
  for (int i = 0; i < m; ++i) w.doubled.push_back(0);
  return w;
}

} // namespace spochar
