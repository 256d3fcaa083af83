#include "spochar/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "spochar/det.hpp"
#include "spochar/modrule.hpp"

namespace spochar {

LaurentCharacter h_even(int d, int m) {
  if (d < 0) return LaurentCharacter::zero();
  // convolve per-variable one-variable slices x^k + x^{k-2} + ... + x^{-k}
  // across the m variables
  std::vector<LaurentCharacter> acc(d + 1);
  for (int k = 0; k <= d; ++k)
    acc[k] = (k == 0) ? LaurentCharacter::one(0) : LaurentCharacter::zero();
  for (int v = 0; v < m; ++v) {
    std::vector<LaurentCharacter> next(d + 1);
    for (int tot = 0; tot <= d; ++tot) {
      LaurentCharacter sum;
      for (int k = 0; k <= tot; ++k) {
        const LaurentCharacter& prev = acc[tot - k];
        if (prev.is_zero()) continue;
        for (auto& [e, c] : prev.terms()) {
          for (int exp = k; exp >= -k; exp -= 2) {
            LaurentCharacter::Exp ne = e;
            ne.push_back(exp);
            sum.add_term(ne, c);
          }
        }
      }
      next[tot] = std::move(sum);
    }
    acc = std::move(next);
  }
  return (m == 0) ? (d == 0 ? LaurentCharacter::one(0) : LaurentCharacter::zero()) : acc[d];
}

LaurentCharacter h_odd(int d, int m) {
  LaurentCharacter r;
  for (int i = 0; i <= d; ++i) r += h_even(i, m);
  return r;
}

LaurentCharacter h_super(int d, int m) {
  return h_even(d, m) + h_even(d - 1, m);
}

LaurentCharacter char_skew_super(const Partition& lambda, const Partition& mu, int m) {
  if (!lambda.contains(mu)) return LaurentCharacter::zero();
  int r = lambda.length();
  if (r == 0) return LaurentCharacter::one(m);
  std::vector<std::vector<LaurentCharacter>> a(r, std::vector<LaurentCharacter>(r));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      a[i - 1][j - 1] = h_super(lambda.part(i) - mu.part(j) - i + j, m);
  return determinant(a);
}

LaurentCharacter char_schur_super(const Partition& lambda, int m) {
  return char_skew_super(lambda, Partition{}, m);
}

namespace {

// Signed-permutation numerator sum_{w in W(B_m)} (-1)^{l(w)} y^{2 w(lambda+rho)}
// in doubled exponents; (-1)^{l(w)} = det(w) = sgn(perm) * prod(signs).
LaurentCharacter wcf_numerator_doubled(const Partition& lambda, int m) {
  std::vector<long long> v(m);
  for (int i = 0; i < m; ++i) v[i] = 2 * lambda.part(i + 1) + 2 * (m - i) - 1;
  LaurentCharacter num;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (idx[i] > idx[j]) ++inversions;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      int flips = __builtin_popcount(mask);
      Int coeff = ((inversions + flips) % 2 == 0) ? 1 : -1;
      LaurentCharacter::Exp e(m);
      for (int i = 0; i < m; ++i)
        e[i] = static_cast<int>((mask >> i & 1u) ? -v[idx[i]] : v[idx[i]]);
      num.add_term(e, coeff);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return num;
}

LaurentCharacter pair_factor_doubled(int m, int i, int j) {
  // y_i^2 + y_i^{-2} - y_j^2 - y_j^{-2}
  LaurentCharacter f;
  LaurentCharacter::Exp e(m, 0);
  e[i] = 2;
  f.add_term(e, 1);
  e[i] = -2;
  f.add_term(e, 1);
  e[i] = 0;
  e[j] = 2;
  f.add_term(e, -1);
  e[j] = -2;
  f.add_term(e, -1);
  return f;
}

LaurentCharacter single_factor_doubled(int m, int i, int a, int b, Int ca, Int cb) {
  // ca*y_i^a + cb*y_i^b
  LaurentCharacter f;
  LaurentCharacter::Exp e(m, 0);
  e[i] = a;
  f.add_term(e, ca);
  e[i] = b;
  f.add_term(e, cb);
  return f;
}

} // namespace

LaurentCharacter wcf_so_odd(const Partition& lambda, int m) {
  if (lambda.length() > m) throw std::invalid_argument("wcf_so_odd: ell(lambda) > m");
  if (m == 0) return LaurentCharacter::one(0);
  LaurentCharacter num = wcf_numerator_doubled(lambda, m);
  LaurentCharacter den = LaurentCharacter::one(m);
  for (int i = 0; i < m; ++i) den *= single_factor_doubled(m, i, 1, -1, 1, -1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) den *= pair_factor_doubled(m, i, j);
  return divide_exact(num, den).halve_exponents();
}

LaurentCharacter wcf_spo(const Partition& lambda, int m) {
  if (!is_admissible(lambda, m)) throw std::invalid_argument("wcf_spo: non-admissible lambda");
  if (lambda.length() > m) throw std::invalid_argument("wcf_spo: ell(lambda) > m");
  if (m == 0) return LaurentCharacter::one(0);
  LaurentCharacter num = wcf_numerator_doubled(lambda, m);
  for (int i = 0; i < m; ++i) num *= single_factor_doubled(m, i, 1, -1, 1, 1);
  LaurentCharacter den = LaurentCharacter::one(m);
  for (int i = 0; i < m; ++i) den *= single_factor_doubled(m, i, 2, -2, 1, -1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) den *= pair_factor_doubled(m, i, j);
  return divide_exact(num, den).halve_exponents();
}

LaurentCharacter koike_terada(const Partition& lambda, int m) {
  if (lambda.length() > m) throw std::invalid_argument("koike_terada: ell(lambda) > m");
  if (m == 0) return LaurentCharacter::one(0);
  std::vector<std::vector<LaurentCharacter>> a(m, std::vector<LaurentCharacter>(m));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      a[i - 1][j - 1] =
          h_odd(lambda.part(i) - i + j, m) - h_odd(lambda.part(i) - i - j, m);
  return determinant(a);
}

Int dim_so_odd(const Partition& lambda, int m) {
  if (lambda.length() > m) throw std::invalid_argument("dim_so_odd: ell(lambda) > m");
  Int num = 1, den = 1;
  std::vector<long long> l(m), r(m);
  for (int i = 0; i < m; ++i) {
    l[i] = 2 * lambda.part(i + 1) + 2 * (m - i) - 1;
    r[i] = 2 * (m - i) - 1;
  }
  for (int i = 0; i < m; ++i) {
    num *= l[i];
    den *= r[i];
    for (int j = i + 1; j < m; ++j) {
      num *= (l[i] - l[j]) * (l[i] + l[j]);
      den *= (r[i] - r[j]) * (r[i] + r[j]);
    }
  }
  return num / den;
}

void KClass::add(const Partition& p, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(p);
  if (it == terms.end()) {
    terms.emplace(p, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

KClass schur_to_irr(const KClass& k) {
  if (k.basis != KClass::Basis::Schur)
    throw std::invalid_argument("schur_to_irr: expected schur basis");
  KClass out;
  out.basis = KClass::Basis::Irr;
  for (auto& [lambda, c] : k.terms) {
    for (auto& mu : partitions_up_to(lambda.size())) {
      if ((lambda.size() - mu.size()) % 2 != 0) continue;
      if (!lambda.contains(mu)) continue;
      Int total = 0;
      for (auto& nu : partitions_of((lambda.size() - mu.size()) / 2)) {
        std::vector<int> doubled;
        for (int p : nu.parts()) doubled.push_back(2 * p);
        total += lr_coefficient(lambda, mu, Partition(doubled).conjugate());
      }
      out.add(mu, c * total);
    }
  }
  return out;
}

KClass irr_to_schur(const KClass& k) {
  if (k.basis != KClass::Basis::Irr)
    throw std::invalid_argument("irr_to_schur: expected irr basis");
  KClass out;
  out.basis = KClass::Basis::Schur;
  for (auto& [lambda, c] : k.terms) {
    QSetSpec spec;
    spec.offset = -1;
    spec.boundKind = QSetSpec::Bound::MaxSize;
    spec.bound = lambda.size();
    for (auto& mu : enumerate_Q(spec)) {
      if (!lambda.contains(mu)) continue;
      Int sign = (mu.size() / 2) % 2 == 0 ? 1 : -1;
      for (auto& [nu, lr] : skew(lambda, mu).terms()) out.add(nu, c * sign * lr);
    }
  }
  return out;
}

KClass specialize_spo(const KClass& k, int m) {
  if (k.basis != KClass::Basis::Irr)
    throw std::invalid_argument("specialize_spo: expected irr basis");
  KClass out;
  out.basis = KClass::Basis::Irr;
  for (auto& [lambda, c] : k.terms) {
    ModResult r = modrule_border(lambda, m);
    if (!r.finite) continue;
    out.add(r.tau, (r.index % 2 == 0) ? c : -c);
  }
  return out;
}

LaurentCharacter torus_character(const KClass& k, int m) {
  if (k.basis != KClass::Basis::Irr)
    throw std::invalid_argument("torus_character: expected irr basis");
  LaurentCharacter r;
  if (k.terms.empty()) return r;
  for (auto& [lambda, c] : k.terms) {
    if (!is_admissible(lambda, m))
      throw std::invalid_argument("torus_character: non-admissible label");
    r += wcf_so_odd(bar(lambda, m), m).times(c);
  }
  return r;
}

LaurentCharacter torus_character_schur(const KClass& k, int m) {
  if (k.basis != KClass::Basis::Schur)
    throw std::invalid_argument("torus_character_schur: expected schur basis");
  LaurentCharacter r;
  for (auto& [lambda, c] : k.terms) r += char_schur_super(lambda, m).times(c);
  return r;
}

} // namespace spochar
