#include "spochar/laurent.hpp"

#include <sstream>

namespace spochar {

LaurentCharacter LaurentCharacter::monomial(Exp e, Int c) {
  LaurentCharacter r;
  if (c != 0) r.terms_[std::move(e)] = std::move(c);
  return r;
}

Int LaurentCharacter::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentCharacter::check_rank(const LaurentCharacter& o) const {
  if (!is_zero() && !o.is_zero() && rank() != o.rank())
    throw std::invalid_argument("laurent: rank mismatch");
}

void LaurentCharacter::add_term(const Exp& e, const Int& c) {
  if (c == 0) return;
  if (!terms_.empty() && static_cast<int>(e.size()) != rank())
    throw std::invalid_argument("laurent: rank mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentCharacter& LaurentCharacter::operator+=(const LaurentCharacter& o) {
  check_rank(o);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentCharacter& LaurentCharacter::operator-=(const LaurentCharacter& o) {
  check_rank(o);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentCharacter LaurentCharacter::operator+(const LaurentCharacter& o) const {
  LaurentCharacter r = *this;
  r += o;
  return r;
}

LaurentCharacter LaurentCharacter::operator-(const LaurentCharacter& o) const {
  LaurentCharacter r = *this;
  r -= o;
  return r;
}

LaurentCharacter LaurentCharacter::operator-() const {
  LaurentCharacter r;
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentCharacter LaurentCharacter::operator*(const LaurentCharacter& o) const {
  if (is_zero() || o.is_zero()) return {};
  check_rank(o);
  LaurentCharacter r;
  Exp e(rank());
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < rank(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

LaurentCharacter& LaurentCharacter::operator*=(const LaurentCharacter& o) {
  *this = *this * o;
  return *this;
}

LaurentCharacter LaurentCharacter::times(const Int& c) const {
  LaurentCharacter r;
  if (c == 0) return r;
  for (auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

LaurentCharacter LaurentCharacter::div_exact(const Int& c) const {
  if (c == 0) throw std::domain_error("laurent: division by zero");
  LaurentCharacter r;
  for (auto& [e, v] : terms_) {
    if (v % c != 0) throw std::domain_error("laurent: coefficient not divisible");
    r.terms_[e] = v / c;
  }
  return r;
}

LaurentCharacter LaurentCharacter::halve_exponents() const {
  LaurentCharacter r;
  for (auto& [e, v] : terms_) {
    Exp h(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] % 2 != 0) throw std::domain_error("laurent: odd exponent, cannot halve");
      h[i] = e[i] / 2;
    }
    r.terms_[std::move(h)] = v;
  }
  return r;
}

Int LaurentCharacter::eval_at_one() const {
  Int s = 0;
  for (auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentCharacter::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  // print highest exponent vector first
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Int a = abs(c);
    std::string mono;
    int nvars = static_cast<int>(it->first.size());
    for (int i = 0; i < nvars; ++i) {
      int e = it->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += var;
      if (nvars > 1) mono += std::to_string(i + 1);
      mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << " ";
      os << mono;
    }
  }
  return os.str();
}

LaurentCharacter divide_exact(const LaurentCharacter& f, const LaurentCharacter& g) {
  if (g.is_zero()) throw std::domain_error("laurent: division by zero polynomial");
  if (f.is_zero()) return {};
  if (f.rank() != g.rank()) throw std::invalid_argument("laurent: rank mismatch");
  const int n = f.rank();
  LaurentCharacter rem = f, q;
  const auto& gt = g.terms();
  auto glead = gt.rbegin();  // largest exponent vector in lex order
  // In an exact quotient the lex-least term of q is exactly
  // min_lex(f) - min_lex(g) (extreme terms of a product cannot cancel), and
  // quotient terms are generated in strictly decreasing lex order. Crossing
  // that floor proves the division inexact.
  LaurentCharacter::Exp qfloor(n);
  for (int i = 0; i < n; ++i)
    qfloor[i] = f.terms().begin()->first[i] - gt.begin()->first[i];
  size_t cap = 5'000'000;
  while (!rem.is_zero()) {
    if (cap-- == 0) throw std::domain_error("laurent: division not exact (diverges)");
    auto flead = rem.terms().rbegin();
    if (flead->second % glead->second != 0)
      throw std::domain_error("laurent: division not exact (leading coefficient)");
    LaurentCharacter::Exp e(n);
    for (int i = 0; i < n; ++i) e[i] = flead->first[i] - glead->first[i];
    if (e < qfloor) throw std::domain_error("laurent: division not exact (remainder)");
    Int c = flead->second / glead->second;
    q.add_term(e, c);
    LaurentCharacter t = LaurentCharacter::monomial(e, c);
    rem -= t * g;
  }
  return q;
}

} // namespace spochar
