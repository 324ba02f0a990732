#include "linkinv/freeword.hpp"

#include <sstream>

namespace linkinv {

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return FreeWord(std::move(out));
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->gen, -it->exp});
  return FreeWord(std::move(out));
}

FreeWord FreeWord::pow(int n) const {
  FreeWord base = n >= 0 ? *this : inverse();
  FreeWord out;
  for (int i = 0; i < std::abs(n); ++i) out = out * base;
  return out;
}

FreeWord FreeWord::commutator(const FreeWord& a, const FreeWord& b) {
  return a * b * a.inverse() * b.inverse();
}

FreeWord FreeWord::conjugate(const FreeWord& g) const { return g.inverse() * *this * g; }

FreeWord FreeWord::reduced() const {
  std::vector<Letter> out;
  for (const Letter& l : letters_) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return FreeWord(std::move(out));
}

bool FreeWord::is_reduced() const {
  for (size_t i = 0; i + 1 < letters_.size(); ++i)
    if (letters_[i].gen == letters_[i + 1].gen && letters_[i].exp == -letters_[i + 1].exp) return false;
  return true;
}

int FreeWord::exponent_sum(int g) const {
  int s = 0;
  for (const Letter& l : letters_)
    if (l.gen == g) s += l.exp;
  return s;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (const Letter& l : letters_) {
    os << 'x' << l.gen;
    if (l.exp < 0) os << "^-1";
    os << ' ';
  }
  std::string s = os.str();
  s.pop_back();
  return s;
}

}  // namespace linkinv
