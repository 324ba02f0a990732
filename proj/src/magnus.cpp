#include "linkinv/magnus.hpp"

#include <algorithm>
#include <sstream>

namespace linkinv {

namespace monom {

bool lex_less(Monomial a, Monomial b) {
  if (deg(a) != deg(b)) return deg(a) < deg(b);
  for (int i = 0; i < deg(a); ++i)
    if (letter_at(a, i) != letter_at(b, i)) return letter_at(a, i) < letter_at(b, i);
  return false;
}

std::string to_string(Monomial m) {
  if (deg(m) == 0) return "1";
  std::ostringstream os;
  for (int i = 0; i < deg(m); ++i) {
    if (i) os << '.';
    os << 'X' << letter_at(m, i);
  }
  return os.str();
}

}  // namespace monom

MonomialFilter MonomialFilter::everything() { return MonomialFilter(); }

MonomialFilter MonomialFilter::subwords_of(const std::vector<Monomial>& targets) {
  MonomialFilter f;
  f.all_ = false;
  f.allowed_.insert(monom::one);
  for (Monomial t : targets) {
    int n = monom::deg(t);
    for (int i = 0; i < n; ++i) {
      std::vector<int> vs;
      for (int j = i; j < n; ++j) {
        vs.push_back(monom::letter_at(t, j));
        f.allowed_.insert(monom::from_letters(vs));
      }
    }
  }
  return f;
}

MagnusSeries MagnusSeries::unit(int trunc_degree) {
  MagnusSeries s(trunc_degree);
  s.c_[monom::one] = 1;
  return s;
}

MagnusSeries MagnusSeries::meridian(int var, int trunc_degree) {
  if (var < 1 || var > monom::max_variable) throw InputError("meridian variable out of range");
  MagnusSeries s = unit(trunc_degree);
  if (trunc_degree >= 1) s.c_[monom::variable(var)] = 1;
  return s;
}

Int MagnusSeries::coeff(Monomial m) const {
  auto it = c_.find(m);
  return it == c_.end() ? Int(0) : it->second;
}

void MagnusSeries::set(Monomial m, Int v) {
  if (v == 0)
    c_.erase(m);
  else
    c_[m] = std::move(v);
}

void MagnusSeries::add(Monomial m, const Int& v) {
  if (v == 0) return;
  auto [it, fresh] = c_.try_emplace(m, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
}

bool MagnusSeries::is_unit() const { return c_.size() == 1 && coeff(monom::one) == 1; }

MagnusSeries MagnusSeries::operator+(const MagnusSeries& o) const {
  MagnusSeries out = *this;
  out.trunc_ = std::min(trunc_, o.trunc_);
  for (const auto& [m, v] : o.c_) out.add(m, v);
  return out;
}

MagnusSeries MagnusSeries::operator-(const MagnusSeries& o) const {
  MagnusSeries out = *this;
  out.trunc_ = std::min(trunc_, o.trunc_);
  for (const auto& [m, v] : o.c_) out.add(m, -v);
  return out;
}

MagnusSeries MagnusSeries::mul(const MagnusSeries& o, const MonomialFilter& f) const {
  int D = std::min(trunc_, o.trunc_);
  MagnusSeries out(D);
  for (const auto& [ma, va] : c_) {
    int da = monom::deg(ma);
    if (da > D) continue;
    for (const auto& [mb, vb] : o.c_) {
      if (da + monom::deg(mb) > D) continue;
      Monomial m = monom::concat(ma, mb);
      if (!f.admits(m)) continue;
      out.add(m, va * vb);
    }
  }
  return out;
}

MagnusSeries MagnusSeries::inverse(const MonomialFilter& f) const {
  if (coeff(monom::one) != 1) throw InputError("inverse: constant term must be 1");
  MagnusSeries n = *this;  // n = s - 1, nilpotent under truncation
  n.add(monom::one, -1);
  MagnusSeries out = unit(trunc_);
  MagnusSeries power = unit(trunc_);
  for (int k = 1; k <= trunc_; ++k) {
    power = power.mul(n, f);
    if (power.c_.empty()) break;
    for (const auto& [m, v] : power.c_) out.add(m, (k % 2) ? -v : v);
  }
  return out;
}

std::optional<int> MagnusSeries::lowest_positive_degree() const {
  std::optional<int> best;
  for (const auto& [m, v] : c_) {
    int d = monom::deg(m);
    if (d >= 1 && (!best || d < *best)) best = d;
  }
  return best;
}

std::string MagnusSeries::dump() const {
  std::vector<Monomial> ms;
  ms.reserve(c_.size());
  for (const auto& [m, v] : c_) ms.push_back(m);
  std::sort(ms.begin(), ms.end(), monom::lex_less);
  std::ostringstream os;
  for (Monomial m : ms) os << monom::to_string(m) << ": " << coeff(m).str() << "\n";
  return os.str();
}

MagnusSeries expand(const FreeWord& w, const std::map<int, MagnusSeries>& images, int trunc_degree,
                    const MonomialFilter& f) {
  MagnusSeries out = MagnusSeries::unit(trunc_degree);
  std::map<int, MagnusSeries> inverses;
  for (const Letter& l : w.letters()) {
    auto it = images.find(l.gen);
    if (it == images.end()) throw InputError("expand: unmapped generator x" + std::to_string(l.gen));
    if (l.exp > 0) {
      out = out.mul(it->second, f);
    } else {
      auto iv = inverses.find(l.gen);
      if (iv == inverses.end()) iv = inverses.emplace(l.gen, it->second.inverse(f)).first;
      out = out.mul(iv->second, f);
    }
  }
  return out;
}

MagnusSeries expand_default(const FreeWord& w, int trunc_degree) {
  std::map<int, MagnusSeries> images;
  for (const Letter& l : w.letters()) {
    if (images.count(l.gen)) continue;
    images.emplace(l.gen, MagnusSeries::meridian(l.gen + 1, trunc_degree));
  }
  return expand(w, images, trunc_degree);
}

std::optional<int> lcs_weight(const FreeWord& w, int trunc_degree) {
  MagnusSeries s = expand_default(w, trunc_degree);
  s.add(monom::one, -1);
  return s.lowest_positive_degree();
}

}  // namespace linkinv
