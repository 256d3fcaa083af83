#include "spochar/littlewood.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spochar/det.hpp"

namespace spochar {

ComplexTerms littlewood_terms(const Partition& lambda, int maxI) {
  ComplexTerms out;
  out.lambda = lambda;
  QSetSpec spec;
  spec.offset = -1;
  spec.boundKind = QSetSpec::Bound::MaxSize;
  spec.bound = lambda.size();
  auto qminus1 = enumerate_Q(spec);
  for (int i = 0; i <= maxI && 2 * i <= lambda.size(); ++i) {
    SchurSum term;
    for (auto& mu : qminus1) {
      if (mu.size() != 2 * i) continue;
      term += skew(lambda, mu);
    }
    out.terms[i] = std::move(term);
  }
  return out;
}

LaurentCharacter euler_det(const Partition& lambda, int m) {
  int r = lambda.length();
  if (r == 0) return LaurentCharacter::one(m);
  std::vector<std::vector<LaurentCharacter>> a(r, std::vector<LaurentCharacter>(r));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      a[i - 1][j - 1] =
          h_super(lambda.part(i) - i + j, m) + h_super(lambda.part(i) - i - j + 2, m);
  return determinant(a).div_exact(2);
}

HomologyResult homology(const Partition& lambda, int m) {
  ModResult r = modrule_border(lambda, m);
  if (!r.finite) return HomologyResult{true, 0, Partition{}};
  return HomologyResult{false, r.index, r.tau};
}

SchurSum tor_ideal(int i, int m, TorIdealVariant variant) {
  if (i < 0) throw std::invalid_argument("tor_ideal: negative degree");
  QSetSpec spec;
  spec.boundKind = QSetSpec::Bound::MaxDegree;
  spec.bound = i;
  switch (variant) {
    case TorIdealVariant::S22ev:
      spec.offset = 0;
      spec.parity = QParity::Even;
      break;
    case TorIdealVariant::S22od:
      spec.offset = 0;
      spec.parity = QParity::Odd;
      break;
    case TorIdealVariant::GeneralM:
      // legs exceed arms by 2m; degree counts the (shifted) arms
      spec.offset = -2 * m;
      spec.parity = QParity::Even;
      break;
  }
  SchurSum out;
  for (auto& p : enumerate_Q(spec)) {
    FrobCoords f = frobenius(p);
    if (f.degree() == i) out.add_term(p, 1);
  }
  return out;
}

TorTable tor_M(const Partition& lambda, int m, int maxI) {
  if (!is_admissible(lambda, m)) throw std::invalid_argument("tor_M: lambda not admissible");
  TorTable out;
  out.lambda = lambda;
  int bound = std::max(lambda.size(), sigma(lambda, m).size()) + maxI * (2 * m + 3);
  for (auto& alpha : partitions_up_to(bound)) {
    ModResult r = modrule_border(alpha, m);
    if (!r.finite || r.index > maxI) continue;
    if (!(r.tau == lambda)) continue;
    out.rows[r.index].add_term(alpha, 1);
  }
  for (int i = 0; i <= maxI; ++i)
    if (!out.rows.count(i)) out.rows[i] = SchurSum{};
  return out;
}

std::map<int, std::map<Partition, SchurSum>> module_characters(int m, int n, int D,
                                                               bool restrictLabels) {
  std::map<int, std::map<Partition, SchurSum>> out;
  GradedSchurSeries wedge = plethysm_family(PlethysmFamily::SymOfWedge, D / 2);
  for (auto& alpha : partitions_up_to(D, n)) {
    ModResult r = modrule_border(alpha, m);
    if (!r.finite) continue;
    if (restrictLabels && r.tau.length() > n) continue;
    Int sign = (r.index % 2 == 0) ? 1 : -1;
    SchurSum salpha = SchurSum::single(alpha, sign);
    for (int e = 0; 2 * e + alpha.size() <= D; ++e) {
      SchurSum prod = (salpha * wedge.coeffs.at(e)).truncate_length(n);
      if (prod.is_zero()) continue;
      auto& slot = out[alpha.size() + 2 * e][r.tau];
      slot += prod;
    }
  }
  // drop slots that cancelled to zero
  for (auto& [d, labels] : out)
    for (auto it = labels.begin(); it != labels.end();)
      it = it->second.is_zero() ? labels.erase(it) : std::next(it);
  return out;
}

namespace {

std::string describe_slot(int d, const Partition& label, const SchurSum& lhs,
                          const SchurSum& rhs) {
  std::ostringstream os;
  os << "degree " << d << ", label " << to_string(label) << ": ";
  os << "lhs ";
  for (auto& [p, c] : lhs.terms()) os << c.str() << "*s[" << to_string(p) << "] ";
  os << "!= rhs ";
  for (auto& [p, c] : rhs.terms()) os << c.str() << "*s[" << to_string(p) << "] ";
  return os.str();
}

// Cauchy expansion of S^.(E (x) U) pushed to the irreducible basis:
// degree d -> admissible label -> E-Schur sum.
std::map<int, std::map<Partition, SchurSum>> cauchy_specialized(int m, int n, int D) {
  std::map<int, std::map<Partition, SchurSum>> out;
  for (int d = 0; d <= D; ++d) {
    for (auto& theta : partitions_of(d)) {
      if (theta.length() > n) continue;
      KClass k;
      k.basis = KClass::Basis::Schur;
      k.add(theta, 1);
      KClass spec = specialize_spo(schur_to_irr(k), m);
      for (auto& [label, c] : spec.terms) out[d][label].add_term(theta, c);
    }
  }
  for (auto& [d, labels] : out)
    for (auto it = labels.begin(); it != labels.end();)
      it = it->second.is_zero() ? labels.erase(it) : std::next(it);
  return out;
}

CheckReport compare_tables(const std::map<int, std::map<Partition, SchurSum>>& lhs,
                           const std::map<int, std::map<Partition, SchurSum>>& rhs, int D) {
  CheckReport rep;
  for (int d = 0; d <= D; ++d) {
    std::map<Partition, SchurSum> empty;
    const auto& l = lhs.count(d) ? lhs.at(d) : empty;
    const auto& r = rhs.count(d) ? rhs.at(d) : empty;
    std::set<Partition> labels;
    for (auto& [p, s] : l) labels.insert(p);
    for (auto& [p, s] : r) labels.insert(p);
    for (auto& p : labels) {
      ++rep.cases;
      SchurSum ls = l.count(p) ? l.at(p) : SchurSum{};
      SchurSum rs = r.count(p) ? r.at(p) : SchurSum{};
      if (!(ls == rs)) {
        rep.ok = false;
        if (rep.firstDiscrepancy.empty()) rep.firstDiscrepancy = describe_slot(d, p, ls, rs);
      }
    }
  }
  return rep;
}

} // namespace

CheckReport verify_balance(int m, int n, int D) {
  auto lhs = module_characters(m, n, D, /*restrictLabels=*/false);
  auto rhs = cauchy_specialized(m, n, D);
  return compare_tables(lhs, rhs, D);
}

CheckReport acyclicity_identity(int m, int n, int D) {
  if (n > m) throw std::invalid_argument("acyclicity_identity: needs n <= m");
  auto lhs = cauchy_specialized(m, n, D);
  // quotient (admissible sum) times the S^.(W^2 E) series
  std::map<int, std::map<Partition, SchurSum>> rhs;
  GradedSchurSeries wedge = plethysm_family(PlethysmFamily::SymOfWedge, D / 2);
  for (auto& lambda : partitions_up_to(D, n)) {
    if (!is_admissible(lambda, m)) continue;
    SchurSum slambda = SchurSum::single(lambda, 1);
    for (int e = 0; 2 * e + lambda.size() <= D; ++e) {
      SchurSum prod = (slambda * wedge.coeffs.at(e)).truncate_length(n);
      if (!prod.is_zero()) rhs[lambda.size() + 2 * e][lambda] += prod;
    }
  }
  for (auto& [d, labels] : rhs)
    for (auto it = labels.begin(); it != labels.end();)
      it = it->second.is_zero() ? labels.erase(it) : std::next(it);
  return compare_tables(lhs, rhs, D);
}

} // namespace spochar
