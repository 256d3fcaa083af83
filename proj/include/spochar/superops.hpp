#pragma once

#include <map>
#include <string>
#include <vector>

#include "spochar/bigint.hpp"

namespace spochar {

// Monomial in the coordinate ring of Hom(E, C^{2m|1}): even variables
// phi_{a,i} (a in {-m..m}\{0}, i in 1..n) with free exponents, odd variables
// phi_{0,i} with exponent <= 1 kept in increasing index order; every
// reordering during operator application contributes the permutation sign.
struct SuperMonomial {
  std::map<std::pair<int, int>, int> evenExps;  // (a, i) -> exponent > 0
  unsigned oddMask = 0;                         // bit i-1 set iff phi_{0,i} present

  int degree() const;
  auto operator<=>(const SuperMonomial&) const = default;
  std::string str() const;
};

using SuperVec = std::map<SuperMonomial, Int>;

// r_{i,j} (multiplication by the quadratic invariant), Delta_{i,j} (its dual
// second-order differential operator), and Euler2 = 2 E_{i,j}; the doubling
// keeps the constant (2m-1)/2 integral, and it cancels in all commutators.
struct SuperOperator {
  enum class Kind { R, Delta, Euler2 };
  Kind kind;
  int i = 1, j = 1;
};

class SuperAlgebra {
public:
  SuperAlgebra(int m, int n) : m_(m), n_(n) {}

  int m() const { return m_; }
  int n() const { return n_; }

  std::vector<SuperMonomial> basis(int maxDeg) const;

  // Raw (untruncated) application; exact.
  SuperVec apply_raw(const SuperOperator& op, const SuperVec& v) const;
  // Spec surface: truncation-checked application; multiplication operators
  // that push a term past maxDeg throw std::domain_error.
  SuperVec apply(const SuperOperator& op, const SuperVec& v, int maxDeg) const;

  // [A,B] v = A(Bv) - B(Av); r, Delta, E are all even operators.
  SuperVec commutator_apply(const SuperOperator& a, const SuperOperator& b,
                            const SuperVec& v) const;

  // The operator matrix of [A,B] on the degree <= D basis, as columns.
  std::map<SuperMonomial, SuperVec> commutator(const SuperOperator& a, const SuperOperator& b,
                                               int D) const;

  // GL_n / SpO torus weights of a monomial.
  std::vector<int> gl_weight(const SuperMonomial& mono) const;
  std::vector<int> spo_weight(const SuperMonomial& mono) const;

  // Primitive generators, used by the Lemma-quad sampling test. a = 0 means
  // the odd variable.
  struct Generator {
    bool deriv = false;
    int a = 0, i = 1;
    bool odd() const { return a == 0; }
  };
  SuperVec apply_generator(const Generator& g, const SuperVec& v) const;

private:
  int m_, n_;
  SuperVec mul_var(int a, int i, const SuperVec& v) const;
  SuperVec d_var(int a, int i, const SuperVec& v) const;
};

struct SuperCheckReport {
  bool ok = true;
  long long cases = 0;
  std::string firstFailure;
};

// All four supercommutator identities on the full degree <= D basis over all
// index tuples, antisymmetry of r and Delta, abelianness of the two
// triangular pieces, the GL/SpO weight bookkeeping of r, and the product
// supercommutator expansion on sampled generator quadruples.
SuperCheckReport verify_commutator_suite(int m, int n, int D);

} // namespace spochar
