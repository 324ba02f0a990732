#pragma once

#include "linkinv/diagram.hpp"
#include "linkinv/types.hpp"

#include <string>
#include <vector>

namespace linkinv {

// Conway polynomial nabla(z) of an m-component link: a polynomial of the
// form z^{m-1}(c_0 + c_1 z^2 + ... + c_n z^{2n}).
struct ConwayPolynomial {
  int m = 1;
  std::vector<Int> raw;  // raw[i] = coefficient of z^i

  static ConwayPolynomial zero(int m);
  static ConwayPolynomial unknot();

  void trim();
  bool is_zero() const;
  int degree() const;  // -1 for zero

  // coefficient of z^{m-1+2k}
  Int c(int k) const;
  int top_k() const;  // largest k with c(k) != 0; -1 if zero

  // raw vanishes outside exponents >= m-1 with exponent == m-1 (mod 2)
  bool normal_form_ok() const;

  // "m; c_0 c_1 ... c_n" plus the raw vector
  std::string str() const;

  bool operator==(const ConwayPolynomial& o) const { return m == o.m && raw == o.raw; }
};

struct SkeinBudget {
  int max_crossings = 16;
  long max_nodes = 1 << 20;
};

// Exact Conway polynomial via switch/smooth descent to descending diagrams.
// Throws BudgetExceeded (reporting the node count) when the tree grows past
// the budget.
ConwayPolynomial conway_skein(const LinkDiagram& d, const SkeinBudget& budget = {});

struct CongruenceReport {
  ConwayPolynomial nabla1, nabla2;
  Int gcd1, gcd2;    // gcd(c_0..c_{k-1}) per link
  Int ck1, ck2;
  bool gcds_agree = false;
  bool congruent = false;  // c_k(d1) == c_k(d2) mod gcd; strict equality when gcd = 0
  std::string str() const;
};

// Cor-3.5-style check: both Conway polynomials (Seifert route), the gcd of
// the first k coefficients, and whether c_k agrees modulo it.
CongruenceReport congruence_check(const LinkDiagram& d1, const LinkDiagram& d2, int k);

}  // namespace linkinv
