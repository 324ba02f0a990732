#include "linkinv/conway.hpp"

#include "linkinv/moves.hpp"
#include "linkinv/seifert.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace linkinv {

ConwayPolynomial ConwayPolynomial::zero(int m_) {
  ConwayPolynomial p;
  p.m = m_;
  return p;
}

ConwayPolynomial ConwayPolynomial::unknot() {
  ConwayPolynomial p;
  p.m = 1;
  p.raw = {1};
  return p;
}

void ConwayPolynomial::trim() {
  while (!raw.empty() && raw.back() == 0) raw.pop_back();
}

bool ConwayPolynomial::is_zero() const {
  for (const Int& c : raw)
    if (c != 0) return false;
  return true;
}

int ConwayPolynomial::degree() const {
  for (int i = (int)raw.size() - 1; i >= 0; --i)
    if (raw[i] != 0) return i;
  return -1;
}

Int ConwayPolynomial::c(int k) const {
  int idx = m - 1 + 2 * k;
  if (k < 0 || idx >= (int)raw.size()) return 0;
  return raw[idx];
}

int ConwayPolynomial::top_k() const {
  int d = degree();
  if (d < 0) return -1;
  return (d - (m - 1)) / 2;
}

bool ConwayPolynomial::normal_form_ok() const {
  for (int i = 0; i < (int)raw.size(); ++i) {
    if (raw[i] == 0) continue;
    if (i < m - 1) return false;
    if ((i - (m - 1)) % 2 != 0) return false;
  }
  return true;
}

std::string ConwayPolynomial::str() const {
  std::ostringstream os;
  os << m << ";";
  int top = top_k();
  for (int k = 0; k <= top; ++k) os << ' ' << c(k).str();
  if (top < 0) os << " 0";
  return os.str();
}

namespace {

using Poly = std::vector<Int>;  // z-coefficients

void add_into(Poly& a, const Poly& b, const Int& scale, int shift) {
  if ((int)a.size() < (int)b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i] * scale;
}

std::string diagram_key(const LinkDiagram& d) {
  std::ostringstream os;
  for (const auto& c : d.components) {
    for (EdgeId e : c.cycle) os << e << ',';
    os << '|';
  }
  for (const auto& x : d.crossings)
    os << x.pd[0] << ',' << x.pd[1] << ',' << x.pd[2] << ',' << x.pd[3] << ',' << x.sign << ';';
  return os.str();
}

struct SkeinCtx {
  long nodes = 0;
  long max_nodes;
  std::map<std::string, Poly> memo;
};

// first crossing met on the under-strand along the canonical traversal
struct Pivot {
  bool descending = false;
  int crossing = -1;  // index
};

Pivot find_pivot(const LinkDiagram& d, const DiagramIndex& ix) {
  std::vector<bool> visited(d.crossings.size(), false);
  for (const auto& comp : d.components) {
    for (EdgeId e : comp.cycle) {
      const EdgeInfo& ei = ix.edge(e);
      if (ei.head.crossing == -1) continue;
      int c = ei.head.crossing;
      if (visited[c]) continue;
      visited[c] = true;
      if (ei.head.slot == 0) return {false, c};  // first met going under
    }
  }
  return {true, -1};
}

Poly skein(const LinkDiagram& d, SkeinCtx& ctx) {
  if (++ctx.nodes > ctx.max_nodes)
    throw BudgetExceeded("conway_skein: node budget exhausted", ctx.nodes);
  // split shortcut
  {
    auto piece = projection_pieces(d);
    if (*std::max_element(piece.begin(), piece.end()) > 0) return {};
  }
  std::string key = diagram_key(d);
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) return it->second;

  DiagramIndex ix(d);
  Pivot p = find_pivot(d, ix);
  Poly result;
  if (p.descending) {
    // a descending diagram is an unlink: nabla = 1 for a knot, 0 otherwise
    if (d.component_count() == 1) result = {1};
  } else {
    MoveSpec sw;
    sw.kind = MoveKind::Switch;
    sw.crossing_a = d.crossings[p.crossing].id;
    MoveSpec sm;
    sm.kind = MoveKind::Smooth;
    sm.crossing_a = d.crossings[p.crossing].id;
    Poly switched = skein(apply_move(d, sw), ctx);
    Poly smoothed = skein(apply_move(d, sm), ctx);
    // nabla(L+) - nabla(L-) = z nabla(L0)
    int eps = d.crossings[p.crossing].sign;
    result = switched;
    add_into(result, smoothed, eps > 0 ? Int(1) : Int(-1), 1);
  }
  ctx.memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

ConwayPolynomial conway_skein(const LinkDiagram& d, const SkeinBudget& budget) {
  require_valid(d, "conway_skein");
  if (d.crossing_count() > budget.max_crossings)
    throw BudgetExceeded("conway_skein: crossing count " + std::to_string(d.crossing_count()) +
                             " exceeds budget " + std::to_string(budget.max_crossings),
                         d.crossing_count());
  SkeinCtx ctx;
  ctx.max_nodes = budget.max_nodes;
  ConwayPolynomial out;
  out.m = d.component_count();
  out.raw = skein(d, ctx);
  out.trim();
  if (!out.normal_form_ok())
    throw InputError("conway_skein: result violates the parity normal form");
  return out;
}

std::string CongruenceReport::str() const {
  std::ostringstream os;
  os << "nabla1 = " << nabla1.str() << "; nabla2 = " << nabla2.str() << "; gcd = " << gcd1.str()
     << (gcds_agree ? "" : " / " + gcd2.str()) << "; c_k = " << ck1.str() << " vs " << ck2.str() << "; "
     << (congruent ? "congruent" : "NOT congruent");
  return os.str();
}

CongruenceReport congruence_check(const LinkDiagram& d1, const LinkDiagram& d2, int k) {
  if (d1.component_count() != d2.component_count())
    throw InputError("congruence_check: component counts differ");
  CongruenceReport rep;
  rep.nabla1 = conway(d1);
  rep.nabla2 = conway(d2);
  Int g1 = 0, g2 = 0;
  for (int i = 0; i < k; ++i) {
    g1 = gcd_int(g1, rep.nabla1.c(i));
    g2 = gcd_int(g2, rep.nabla2.c(i));
  }
  rep.gcd1 = g1;
  rep.gcd2 = g2;
  rep.gcds_agree = (g1 == g2);
  rep.ck1 = rep.nabla1.c(k);
  rep.ck2 = rep.nabla2.c(k);
  if (g1 == 0)
    rep.congruent = rep.gcds_agree && rep.ck1 == rep.ck2;
  else
    rep.congruent = rep.gcds_agree && ((rep.ck1 - rep.ck2) % g1 == 0);
  return rep;
}

}  // namespace linkinv
