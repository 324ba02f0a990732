#include "linkinv/milnor.hpp"

#include "linkinv/moves.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace linkinv {

std::string indices_str(const std::vector<int>& I) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < I.size(); ++i) {
    if (i) os << ",";
    os << I[i];
  }
  os << ")";
  return os.str();
}

std::string MuValue::str() const {
  std::ostringstream os;
  os << "mu" << indices_str(indices) << " = " << mu.str() << " (delta " << delta.str() << ")";
  return os.str();
}

MilnorEngine::MilnorEngine(const LinkDiagram& d) : diagram_(connect_projection(d)) {
  pres_ = wirtinger(diagram_);
  use_filter_ = diagram_.component_count() > 3;
}

std::vector<MagnusSeries> MilnorEngine::arc_images(int depth, int trunc, const MonomialFilter& f) const {
  const WirtingerPresentation& p = pres_;
  int m = diagram_.component_count();
  std::vector<MagnusSeries> img;
  img.reserve(p.arc_count);
  for (int a = 0; a < p.arc_count; ++a)
    img.push_back(MagnusSeries::meridian(p.arc_component[a] + 1, trunc));

  for (int t = 0; t < depth; ++t) {
    std::vector<MagnusSeries> next = img;
    for (int i = 0; i < m; ++i) {
      if (p.passages[i].empty()) continue;
      MagnusSeries meridian = MagnusSeries::meridian(i + 1, trunc);
      MagnusSeries P = MagnusSeries::unit(trunc);
      MagnusSeries Pinv = MagnusSeries::unit(trunc);
      for (size_t j = 0; j < p.passages[i].size(); ++j) {
        const UnderPassage& up = p.passages[i][j];
        const MagnusSeries& o = img[up.over_arc];
        if (up.eps > 0) {
          P = P.mul(o, f);
          Pinv = o.inverse(f).mul(Pinv, f);
        } else {
          MagnusSeries oinv = o.inverse(f);
          P = P.mul(oinv, f);
          Pinv = o.mul(Pinv, f);
        }
        if (up.next_arc == p.base_arc[i]) continue;  // the generator stays 1 + X_i
        next[up.next_arc] = Pinv.mul(meridian, f).mul(P, f);
      }
    }
    img = std::move(next);
  }
  return img;
}

MagnusSeries MilnorEngine::longitude_series_filtered(int comp, int depth, int trunc,
                                                     const MonomialFilter& f) {
  const WirtingerPresentation& p = pres_;
  std::vector<MagnusSeries> img = arc_images(depth, trunc, f);
  MagnusSeries out = MagnusSeries::unit(trunc);
  for (const UnderPassage& up : p.passages[comp]) {
    const MagnusSeries& o = img[up.over_arc];
    out = up.eps > 0 ? out.mul(o, f) : out.mul(o.inverse(f), f);
  }
  MagnusSeries meridian = MagnusSeries::meridian(comp + 1, trunc);
  int w = p.self_writhe[comp];
  MagnusSeries mer_pow = w >= 0 ? meridian.inverse(f) : meridian;
  for (int k = 0; k < std::abs(w); ++k) out = out.mul(mer_pow, f);
  return out;
}

MagnusSeries MilnorEngine::longitude_series(int comp, int depth, int trunc) {
  auto key = std::make_tuple(comp, depth, trunc);
  auto it = longitude_cache_.find(key);
  if (it != longitude_cache_.end()) return it->second;
  MagnusSeries s = longitude_series_filtered(comp, depth, trunc, MonomialFilter::everything());
  longitude_cache_.emplace(key, s);
  return s;
}

Int MilnorEngine::mu_at_depth(const std::vector<int>& I, int depth) {
  int m = diagram_.component_count();
  if (I.size() < 2) throw InputError("mu: index sequence must have length >= 2");
  for (int idx : I)
    if (idx < 1 || idx > m) throw InputError("mu: index out of range in " + indices_str(I));
  int k = (int)I.size();
  int comp = I[k - 1] - 1;
  std::vector<int> vars(I.begin(), I.end() - 1);
  Monomial target = monom::from_letters(vars);
  if (use_filter_) {
    MonomialFilter f = MonomialFilter::subwords_of({target});
    return longitude_series_filtered(comp, depth, k - 1, f).coeff(target);
  }
  return longitude_series(comp, depth, k - 1).coeff(target);
}

Int MilnorEngine::mu(const std::vector<int>& I) {
  auto it = mu_cache_.find(I);
  if (it != mu_cache_.end()) return it->second;
  Int v = mu_at_depth(I, (int)I.size());
  mu_cache_.emplace(I, v);
  return v;
}

namespace {

// all sequences obtained by deleting at least one index and cyclically
// permuting the remainder
std::set<std::vector<int>> indeterminacy_set(const std::vector<int>& I) {
  std::set<std::vector<int>> out;
  int k = (int)I.size();
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<int> J;
    for (int b = 0; b < k; ++b)
      if (!(mask & (1u << b))) J.push_back(I[b]);
    if ((int)J.size() < 2) continue;
    for (size_t r = 0; r < J.size(); ++r) {
      std::vector<int> rot(J.begin() + r, J.end());
      rot.insert(rot.end(), J.begin(), J.begin() + r);
      out.insert(rot);
    }
  }
  return out;
}

}  // namespace

MuValue MilnorEngine::mu_bar(const std::vector<int>& I) {
  MuValue v;
  v.indices = I;
  v.mu = mu(I);
  v.delta = 0;
  for (const auto& J : indeterminacy_set(I)) v.delta = gcd_int(v.delta, mu(J));
  if (v.delta > 0) {
    v.residue = v.mu % v.delta;
    if (v.residue < 0) v.residue += v.delta;
  } else {
    v.residue = v.mu;
  }
  return v;
}

MuValue mu_bar(const LinkDiagram& d, const std::vector<int>& I) {
  MilnorEngine eng(d);
  return eng.mu_bar(I);
}

MuTable mu_table(const LinkDiagram& d, int max_len, bool allow_deep, long orbit_budget) {
  if (max_len > 9 && !allow_deep)
    throw InputError("mu_table: max_len > 9 exceeds the cost guard (use allow_deep)");
  MilnorEngine eng(d);
  int m = eng.component_count();
  MuTable table;
  std::set<std::vector<int>> seen_orbits;
  long used = 0;
  for (int len = 2; len <= max_len && !table.truncated; ++len) {
    std::vector<int> I(len, 1);
    for (;;) {
      // lexicographically least rotation as orbit representative
      std::vector<int> best = I;
      for (int r = 1; r < len; ++r) {
        std::vector<int> rot(I.begin() + r, I.end());
        rot.insert(rot.end(), I.begin(), I.begin() + r);
        if (rot < best) best = rot;
      }
      if (best == I && seen_orbits.insert(best).second) {
        if (++used > orbit_budget) {
          table.truncated = true;
          break;
        }
        table.values.push_back(eng.mu_bar(I));
      }
      // next sequence
      int pos = len - 1;
      while (pos >= 0 && I[pos] == m) I[pos--] = 1;
      if (pos < 0) break;
      ++I[pos];
    }
  }
  std::sort(table.values.begin(), table.values.end(), [](const MuValue& a, const MuValue& b) {
    if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
    return a.indices < b.indices;
  });
  return table;
}

Int sato_levine(const LinkDiagram& d) {
  if (d.component_count() != 2) throw InputError("sato_levine: need a 2-component link");
  auto lk = linking_matrix(d);
  if (lk[0][1] != 0) throw InputError("sato_levine: linking number must vanish");
  MilnorEngine eng(d);
  MuValue v = eng.mu_bar({1, 1, 2, 2});
  if (v.delta != 0) throw InputError("sato_levine: unexpected indeterminacy " + v.delta.str());
  return v.mu;
}

Int cochran_beta(const LinkDiagram& d, int i) {
  if (i < 1) throw InputError("cochran_beta: order must be >= 1");
  if (d.component_count() != 2) throw InputError("cochran_beta: need a 2-component link");
  auto lk = linking_matrix(d);
  if (lk[0][1] != 0) throw InputError("cochran_beta: linking number must vanish");
  MilnorEngine eng(d);
  // the lift is the invariant itself only when every shorter invariant
  // vanishes as a well-defined integer
  for (int len = 2; len < 2 * i + 2; ++len) {
    std::vector<int> I(len, 1);
    for (;;) {
      MuValue v = eng.mu_bar(I);
      if (v.mu != 0 || v.delta != 0)
        throw InputError("cochran_beta: obstructed by nonvanishing " + v.str());
      int pos = len - 1;
      while (pos >= 0 && I[pos] == 2) I[pos--] = 1;
      if (pos < 0) break;
      ++I[pos];
    }
  }
  std::vector<int> I(2 * i + 2, 1);
  I[2 * i] = 2;
  I[2 * i + 1] = 2;
  MuValue v = eng.mu_bar(I);
  if (v.delta != 0) throw InputError("cochran_beta: unexpected indeterminacy in " + v.str());
  return v.mu;
}

}  // namespace linkinv
