#include "spochar/superops.hpp"

#include <sstream>
#include <stdexcept>

namespace spochar {

int SuperMonomial::degree() const {
  int d = __builtin_popcount(oddMask);
  for (auto& [v, e] : evenExps) d += e;
  return d;
}

std::string SuperMonomial::str() const {
  std::ostringstream os;
  bool any = false;
  for (auto& [v, e] : evenExps) {
    if (any) os << " ";
    os << "phi(" << v.first << "," << v.second << ")";
    if (e > 1) os << "^" << e;
    any = true;
  }
  for (int i = 1; i <= 32; ++i) {
    if (!(oddMask & (1u << (i - 1)))) continue;
    if (any) os << " ";
    os << "phi(0," << i << ")";
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

namespace {

void add_to(SuperVec& v, const SuperMonomial& mono, const Int& c) {
  if (c == 0) return;
  auto it = v.find(mono);
  if (it == v.end()) {
    v.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

int odd_sign(unsigned mask, int i) {
  // sign of moving phi_{0,i} from the front into its sorted slot
  unsigned below = mask & ((1u << (i - 1)) - 1);
  return (__builtin_popcount(below) % 2 == 0) ? 1 : -1;
}

} // namespace

SuperVec SuperAlgebra::mul_var(int a, int i, const SuperVec& v) const {
  SuperVec out;
  for (auto& [mono, c] : v) {
    if (a == 0) {
      unsigned bit = 1u << (i - 1);
      if (mono.oddMask & bit) continue;  // phi^2 = 0
      SuperMonomial nm = mono;
      nm.oddMask |= bit;
      add_to(out, nm, c * odd_sign(mono.oddMask, i));
    } else {
      SuperMonomial nm = mono;
      nm.evenExps[{a, i}] += 1;
      add_to(out, nm, c);
    }
  }
  return out;
}

SuperVec SuperAlgebra::d_var(int a, int i, const SuperVec& v) const {
  SuperVec out;
  for (auto& [mono, c] : v) {
    if (a == 0) {
      unsigned bit = 1u << (i - 1);
      if (!(mono.oddMask & bit)) continue;
      SuperMonomial nm = mono;
      nm.oddMask &= ~bit;
      add_to(out, nm, c * odd_sign(nm.oddMask, i));
    } else {
      auto it = mono.evenExps.find({a, i});
      if (it == mono.evenExps.end()) continue;
      SuperMonomial nm = mono;
      int e = it->second;
      if (e == 1)
        nm.evenExps.erase({a, i});
      else
        nm.evenExps[{a, i}] = e - 1;
      add_to(out, nm, c * e);
    }
  }
  return out;
}

SuperVec SuperAlgebra::apply_generator(const Generator& g, const SuperVec& v) const {
  return g.deriv ? d_var(g.a, g.i, v) : mul_var(g.a, g.i, v);
}

SuperVec SuperAlgebra::apply_raw(const SuperOperator& op, const SuperVec& v) const {
  SuperVec out;
  auto acc = [&](const SuperVec& t, const Int& scale) {
    for (auto& [mono, c] : t) add_to(out, mono, c * scale);
  };
  switch (op.kind) {
    case SuperOperator::Kind::R: {
      acc(mul_var(0, op.i, mul_var(0, op.j, v)), 1);
      for (int a = 1; a <= m_; ++a) {
        acc(mul_var(-a, op.i, mul_var(a, op.j, v)), 1);
        acc(mul_var(-a, op.j, mul_var(a, op.i, v)), -1);
      }
      break;
    }
    case SuperOperator::Kind::Delta: {
      acc(d_var(0, op.i, d_var(0, op.j, v)), 1);
      for (int a = 1; a <= m_; ++a) {
        acc(d_var(-a, op.i, d_var(a, op.j, v)), 1);
        acc(d_var(-a, op.j, d_var(a, op.i, v)), -1);
      }
      break;
    }
    case SuperOperator::Kind::Euler2: {
      for (int a = -m_; a <= m_; ++a) acc(mul_var(a, op.i, d_var(a, op.j, v)), 2);
      if (op.i == op.j) acc(v, 2 * m_ - 1);  // supertrace constant, doubled
      break;
    }
  }
  return out;
}

SuperVec SuperAlgebra::apply(const SuperOperator& op, const SuperVec& v, int maxDeg) const {
  SuperVec out = apply_raw(op, v);
  for (auto& [mono, c] : out)
    if (mono.degree() > maxDeg)
      throw std::domain_error("superops: application exceeds truncation degree");
  return out;
}

SuperVec SuperAlgebra::commutator_apply(const SuperOperator& a, const SuperOperator& b,
                                        const SuperVec& v) const {
  SuperVec ab = apply_raw(a, apply_raw(b, v));
  SuperVec ba = apply_raw(b, apply_raw(a, v));
  for (auto& [mono, c] : ba) add_to(ab, mono, -c);
  return ab;
}

std::map<SuperMonomial, SuperVec> SuperAlgebra::commutator(const SuperOperator& a,
                                                           const SuperOperator& b, int D) const {
  std::map<SuperMonomial, SuperVec> cols;
  for (auto& mono : basis(D)) {
    SuperVec v;
    v[mono] = 1;
    cols[mono] = commutator_apply(a, b, v);
  }
  return cols;
}

std::vector<SuperMonomial> SuperAlgebra::basis(int maxDeg) const {
  std::vector<std::pair<int, int>> vars;
  for (int a = -m_; a <= m_; ++a) {
    if (a == 0) continue;
    for (int i = 1; i <= n_; ++i) vars.emplace_back(a, i);
  }
  std::vector<SuperMonomial> out;
  SuperMonomial cur;
  auto rec = [&](auto&& self, size_t idx, int used) -> void {
    if (idx == vars.size()) {
      for (unsigned mask = 0; mask < (1u << n_); ++mask) {
        if (used + __builtin_popcount(mask) > maxDeg) continue;
        SuperMonomial mono = cur;
        mono.oddMask = mask;
        out.push_back(std::move(mono));
      }
      return;
    }
    self(self, idx + 1, used);
    for (int e = 1; used + e <= maxDeg; ++e) {
      cur.evenExps[vars[idx]] = e;
      self(self, idx + 1, used + e);
    }
    cur.evenExps.erase(vars[idx]);
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> SuperAlgebra::gl_weight(const SuperMonomial& mono) const {
  std::vector<int> w(n_, 0);
  for (auto& [v, e] : mono.evenExps) w[v.second - 1] += e;
  for (int i = 1; i <= n_; ++i)
    if (mono.oddMask & (1u << (i - 1))) w[i - 1] += 1;
  return w;
}

std::vector<int> SuperAlgebra::spo_weight(const SuperMonomial& mono) const {
  std::vector<int> w(m_, 0);
  for (auto& [v, e] : mono.evenExps) {
    if (v.first > 0) w[v.first - 1] += e;
    else w[-v.first - 1] -= e;
  }
  return w;
}

namespace {

using Gen = SuperAlgebra::Generator;

int gen_parity(const Gen& g) { return g.odd() ? 1 : 0; }

SuperVec word_apply(const SuperAlgebra& alg, const std::vector<Gen>& word, const SuperVec& v) {
  SuperVec cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = alg.apply_generator(*it, cur);
  return cur;
}

// supercommutator [x, y] of generator words as an action on v
SuperVec super_bracket_apply(const SuperAlgebra& alg, const std::vector<Gen>& x,
                             const std::vector<Gen>& y, const SuperVec& v) {
  int px = 0, py = 0;
  for (auto& g : x) px += gen_parity(g);
  for (auto& g : y) py += gen_parity(g);
  std::vector<Gen> xy = x, yx = y;
  xy.insert(xy.end(), y.begin(), y.end());
  yx.insert(yx.end(), x.begin(), x.end());
  SuperVec a = word_apply(alg, xy, v);
  SuperVec b = word_apply(alg, yx, v);
  Int sign = (px % 2 == 1 && py % 2 == 1) ? 1 : -1;  // -(-1)^{|x||y|}
  for (auto& [mono, c] : b) add_to(a, mono, sign * c);
  return a;
}

bool vec_equal(const SuperVec& a, const SuperVec& b) { return a == b; }

} // namespace

SuperCheckReport verify_commutator_suite(int m, int n, int D) {
  SuperAlgebra alg(m, n);
  SuperCheckReport rep;
  auto basis = alg.basis(D);
  auto fail = [&](const std::string& what) {
    rep.ok = false;
    if (rep.firstFailure.empty()) rep.firstFailure = what;
  };
  using Op = SuperOperator;
  auto R = [](int i, int j) { return Op{Op::Kind::R, i, j}; };
  auto Dl = [](int i, int j) { return Op{Op::Kind::Delta, i, j}; };
  auto E2 = [](int i, int j) { return Op{Op::Kind::Euler2, i, j}; };

  auto apply_combo = [&](const std::vector<std::pair<Int, Op>>& combo, const SuperVec& v) {
    SuperVec out;
    for (auto& [c, op] : combo) {
      SuperVec t = alg.apply_raw(op, v);
      for (auto& [mono, tc] : t) add_to(out, mono, c * tc);
    }
    return out;
  };

  auto check_identity = [&](const std::string& name, const Op& a, const Op& b, const Int& lhsScale,
                            const std::vector<std::pair<Int, Op>>& rhs) {
    for (auto& mono : basis) {
      ++rep.cases;
      SuperVec v;
      v[mono] = 1;
      SuperVec lhs = alg.commutator_apply(a, b, v);
      SuperVec scaled;
      for (auto& [mm, c] : lhs) scaled[mm] = c * lhsScale;
      for (auto it = scaled.begin(); it != scaled.end();)
        it = (it->second == 0) ? scaled.erase(it) : std::next(it);
      SuperVec want = apply_combo(rhs, v);
      if (!vec_equal(scaled, want)) {
        fail(name + " fails on " + mono.str());
        return;
      }
    }
  };

  auto d = [](int a, int b) { return Int(a == b ? 1 : 0); };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          std::ostringstream tag;
          tag << "(" << i << j << k << l << ")";
          // 2[r_{ij}, D_{kl}] = -d_ik E2_{jl} + d_il E2_{jk} + d_kj E2_{il} - d_jl E2_{ik}
          check_identity("comm1" + tag.str(), R(i, j), Dl(k, l), 2,
                         {{-d(i, k), E2(j, l)},
                          {d(i, l), E2(j, k)},
                          {d(k, j), E2(i, l)},
                          {-d(j, l), E2(i, k)}});
          // [E2_{ij}, r_{kl}] = 2 d_kj r_{il} - 2 d_lj r_{ik}
          check_identity("comm2" + tag.str(), E2(i, j), R(k, l), 1,
                         {{2 * d(k, j), R(i, l)}, {-2 * d(l, j), R(i, k)}});
          // [E2_{ij}, D_{kl}] = -2 d_ik D_{jl} + 2 d_il D_{jk}
          check_identity("comm3" + tag.str(), E2(i, j), Dl(k, l), 1,
                         {{-2 * d(i, k), Dl(j, l)}, {2 * d(i, l), Dl(j, k)}});
          // [E2_{ij}, E2_{kl}] = 2 d_jk E2_{il} - 2 d_il E2_{kj}
          check_identity("comm4" + tag.str(), E2(i, j), E2(k, l), 1,
                         {{2 * d(j, k), E2(i, l)}, {-2 * d(i, l), E2(k, j)}});
          // triangular pieces are abelian
          check_identity("rr" + tag.str(), R(i, j), R(k, l), 1, {});
          check_identity("dd" + tag.str(), Dl(i, j), Dl(k, l), 1, {});
        }
      // antisymmetry as operators
      for (auto& mono : basis) {
        ++rep.cases;
        SuperVec v;
        v[mono] = 1;
        SuperVec s = alg.apply_raw(R(i, j), v);
        for (auto& [mm, c] : alg.apply_raw(R(j, i), v)) add_to(s, mm, c);
        if (!s.empty()) fail("r antisymmetry fails");
        s = alg.apply_raw(Dl(i, j), v);
        for (auto& [mm, c] : alg.apply_raw(Dl(j, i), v)) add_to(s, mm, c);
        if (!s.empty()) fail("Delta antisymmetry fails");
      }
      // weight bookkeeping of r: GL weight shifts by e_i + e_j, SpO preserved
      for (auto& mono : basis) {
        ++rep.cases;
        SuperVec v;
        v[mono] = 1;
        auto gl = alg.gl_weight(mono);
        auto spo = alg.spo_weight(mono);
        gl[i - 1] += 1;
        gl[j - 1] += 1;
        for (auto& [mm, c] : alg.apply_raw(R(i, j), v)) {
          if (alg.gl_weight(mm) != gl) fail("r GL-weight shift fails");
          if (alg.spo_weight(mm) != spo) fail("r SpO-weight preservation fails");
        }
      }
    }

  // product supercommutator expansion (associative superalgebra identity)
  // on generator quadruples: [ab,cd] = a[b,c]d + (-1)^{|b||c|}[a,c]bd
  //   + (-1)^{(|a|+|b|)|c|} c a [b,d] + (-1)^{|a||c|+|b|(|c|+|d|)} c [a,d] b
  std::vector<Gen> pool;
  for (int a = -std::min(m, 1); a <= std::min(m, 1); ++a)
    for (int i = 1; i <= std::min(n, 2); ++i) {
      pool.push_back(Gen{false, a, i});
      pool.push_back(Gen{true, a, i});
    }
  auto quadBasis = alg.basis(std::min(D, 2));
  for (auto& ga : pool)
    for (auto& gb : pool)
      for (auto& gc : pool)
        for (auto& gd : pool) {
          int pa = gen_parity(ga), pb = gen_parity(gb), pc = gen_parity(gc), pd = gen_parity(gd);
          for (auto& mono : quadBasis) {
            ++rep.cases;
            SuperVec v;
            v[mono] = 1;
            SuperVec lhs = super_bracket_apply(alg, {ga, gb}, {gc, gd}, v);
            SuperVec rhs;
            auto addScaled = [&](const SuperVec& t, int sgn) {
              for (auto& [mm, c] : t) add_to(rhs, mm, sgn * c);
            };
            // a [b,c] d
            addScaled(word_apply(alg, {ga}, super_bracket_apply(alg, {gb}, {gc},
                                                                word_apply(alg, {gd}, v))),
                      1);
            // (-1)^{|b||c|} [a,c] b d
            addScaled(super_bracket_apply(alg, {ga}, {gc}, word_apply(alg, {gb, gd}, v)),
                      (pb * pc) % 2 == 0 ? 1 : -1);
            // (-1)^{(|a|+|b|)|c|} c a [b,d]
            addScaled(word_apply(alg, {gc, ga}, super_bracket_apply(alg, {gb}, {gd}, v)),
                      ((pa + pb) * pc) % 2 == 0 ? 1 : -1);
            // (-1)^{|a||c| + |b|(|c|+|d|)} c [a,d] b
            addScaled(word_apply(alg, {gc}, super_bracket_apply(alg, {ga}, {gd},
                                                                word_apply(alg, {gb}, v))),
                      (pa * pc + pb * (pc + pd)) % 2 == 0 ? 1 : -1);
            if (!vec_equal(lhs, rhs)) {
              fail("product supercommutator expansion fails on " + mono.str());
              break;
            }
          }
        }

  return rep;
}

} // namespace spochar
