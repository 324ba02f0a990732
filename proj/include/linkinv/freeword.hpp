#pragma once

#include <cstdlib>
#include <string>
#include <vector>

namespace linkinv {

// Words in abstract generators with +-1 exponents.  Generators are small
// nonnegative ints (arc indices, meridian indices).
struct Letter {
  int gen;
  int exp;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static FreeWord generator(int g, int exp = 1) { return FreeWord({{g, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  FreeWord pow(int n) const;

  // [a,b] = a b a^-1 b^-1 (so expand([x,y]) = 1 + XY - YX + ...)
  static FreeWord commutator(const FreeWord& a, const FreeWord& b);

  // w^g = g^-1 w g
  FreeWord conjugate(const FreeWord& g) const;

  // canonical freely reduced form (no x x^-1 adjacencies)
  FreeWord reduced() const;
  bool is_reduced() const;

  // exponent sum of a generator
  int exponent_sum(int g) const;

  std::string str() const;
  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }

 private:
  std::vector<Letter> letters_;
};

}  // namespace linkinv
