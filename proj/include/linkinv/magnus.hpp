#pragma once

#include "linkinv/freeword.hpp"
#include "linkinv/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace linkinv {

// ---------------------------------------------------------------------------
// Degree-truncated integer power series in noncommuting variables X_1..X_15.
// A monomial is a word over variable ids packed 4 bits per letter (low nibble
// first), with the degree in the top byte.  Degree is capped at 14.
// ---------------------------------------------------------------------------
using Monomial = std::uint64_t;

namespace monom {

constexpr Monomial one = 0;
constexpr int max_degree = 14;
constexpr int max_variable = 15;

inline int deg(Monomial m) { return static_cast<int>(m >> 56); }
inline std::uint64_t letters(Monomial m) { return m & ((std::uint64_t(1) << 56) - 1); }
inline int letter_at(Monomial m, int i) { return static_cast<int>((m >> (4 * i)) & 0xF); }

inline Monomial variable(int v) {
  return (std::uint64_t(1) << 56) | static_cast<std::uint64_t>(v);
}

inline Monomial from_letters(const std::vector<int>& vs) {
  Monomial m = 0;
  for (size_t i = 0; i < vs.size(); ++i) m |= std::uint64_t(vs[i]) << (4 * i);
  return m | (std::uint64_t(vs.size()) << 56);
}

inline Monomial concat(Monomial a, Monomial b) {
  int da = deg(a), db = deg(b);
  return (letters(a) | (letters(b) << (4 * da))) | (std::uint64_t(da + db) << 56);
}

// degree-then-lexicographic order, for stable output
bool lex_less(Monomial a, Monomial b);
std::string to_string(Monomial m);

}  // namespace monom

// Optional restriction of a computation to a set of monomials, closed under
// taking contiguous subwords.  Coefficients outside the set can never
// contribute to a coefficient inside it (products concatenate monomials),
// so dropping them is sound and collapses the cost of long-index runs.
class MonomialFilter {
 public:
  static MonomialFilter everything();
  static MonomialFilter subwords_of(const std::vector<Monomial>& targets);
  bool admits(Monomial m) const { return all_ || allowed_.count(m) != 0; }
  bool unrestricted() const { return all_; }
  size_t size() const { return allowed_.size(); }

 private:
  bool all_ = true;
  std::unordered_set<Monomial> allowed_;
};

class MagnusSeries {
 public:
  explicit MagnusSeries(int trunc_degree) : trunc_(trunc_degree) {}
  static MagnusSeries unit(int trunc_degree);
  static MagnusSeries meridian(int var, int trunc_degree);  // 1 + X_var

  int truncation() const { return trunc_; }
  Int coeff(Monomial m) const;
  const std::unordered_map<Monomial, Int>& terms() const { return c_; }
  void set(Monomial m, Int v);
  void add(Monomial m, const Int& v);
  bool is_unit() const;

  MagnusSeries operator+(const MagnusSeries& o) const;
  MagnusSeries operator-(const MagnusSeries& o) const;
  MagnusSeries mul(const MagnusSeries& o, const MonomialFilter& f) const;
  MagnusSeries operator*(const MagnusSeries& o) const { return mul(o, MonomialFilter::everything()); }

  // multiplicative inverse; constant term must be 1
  MagnusSeries inverse(const MonomialFilter& f = MonomialFilter::everything()) const;

  // smallest degree >= 1 with a nonzero coefficient, or nullopt
  std::optional<int> lowest_positive_degree() const;

  // stable golden-file format: one "monomial: coefficient" line per term
  std::string dump() const;

 private:
  int trunc_;
  std::unordered_map<Monomial, Int> c_;
};

// Magnus expansion of a word under a substitution generator -> series.
// Unmapped generators raise InputError.
MagnusSeries expand(const FreeWord& w, const std::map<int, MagnusSeries>& images, int trunc_degree,
                    const MonomialFilter& f = MonomialFilter::everything());

// Expansion with default meridian images x_g -> 1 + X_{var_of(g)}.
// var_of defaults to g+1 (generators must stay below 15 then).
MagnusSeries expand_default(const FreeWord& w, int trunc_degree);

// Magnus weight: smallest d >= 1 with nonzero degree-d coefficient in
// expand(w) - 1, or nullopt meaning ">= D".  Computes the lower central
// series filtration for free groups.
std::optional<int> lcs_weight(const FreeWord& w, int trunc_degree);

}  // namespace linkinv
