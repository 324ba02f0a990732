#include "linkinv/seifert.hpp"

#include "linkinv/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace linkinv {

namespace {

// --- integer polynomials (coefficients of x^i) ---------------------------
using Poly = std::vector<Int>;

void ptrim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  ptrim(out);
  return out;
}

Poly psub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ptrim(a);
  return a;
}

// exact division; throws on a nonzero remainder
Poly pdivexact(Poly a, const Poly& b) {
  ptrim(a);
  Poly bb = b;
  ptrim(bb);
  if (bb.empty()) throw InputError("seifert: division by zero polynomial");
  if (a.empty()) return {};
  if (a.size() < bb.size()) throw InputError("seifert: inexact polynomial division");
  Poly q(a.size() - bb.size() + 1, 0);
  for (int i = (int)q.size() - 1; i >= 0; --i) {
    Int lead = a[i + bb.size() - 1];
    if (lead == 0) continue;
    if (lead % bb.back() != 0) throw InputError("seifert: inexact polynomial division");
    Int f = lead / bb.back();
    q[i] = f;
    for (size_t j = 0; j < bb.size(); ++j) a[i + j] -= f * bb[j];
  }
  for (const Int& c : a)
    if (c != 0) throw InputError("seifert: inexact polynomial division");
  return q;
}

// Bareiss fraction-free determinant over Z[x]
Poly pdet(std::vector<std::vector<Poly>> mat) {
  int n = (int)mat.size();
  if (n == 0) return {Int(1)};
  int sign = 1;
  Poly prev = {Int(1)};
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r) {
      Poly t = mat[r][k];
      ptrim(t);
      if (!t.empty()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return {};  // singular
    if (piv != k) {
      std::swap(mat[piv], mat[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Poly t = psub(pmul(mat[i][j], mat[k][k]), pmul(mat[i][k], mat[k][j]));
        mat[i][j] = pdivexact(t, prev);
      }
    prev = mat[k][k];
    ptrim(prev);
    if (prev.empty()) return {};
  }
  Poly det = mat[n - 1][n - 1];
  if (sign < 0)
    for (auto& c : det) c = -c;
  return det;
}

// --- Seifert circles ------------------------------------------------------
struct Circles {
  std::map<EdgeId, int> of;
  int count = 0;
  std::vector<std::vector<int>> crossings_along;  // per circle, cyclic order
};

Circles seifert_circles_impl(const LinkDiagram& d, const DiagramIndex& ix) {
  Circles out;
  // smoothed successor: follow the orientation-respecting resolution
  auto smoothed_succ = [&](EdgeId e) -> EdgeId {
    const EdgeInfo& ei = ix.edge(e);
    int c = ei.head.crossing;
    auto ov = ix.over_slots(c);
    if (ei.head.slot == 0) return d.crossings[c].pd[ov[1]];  // under-in -> over-out
    return d.crossings[c].pd[2];                             // over-in -> under-out
  };
  std::set<EdgeId> seen;
  for (EdgeId start : ix.edges()) {
    if (seen.count(start)) continue;
    if (ix.edge(start).free_loop) {
      out.of[start] = out.count++;
      out.crossings_along.push_back({});
      seen.insert(start);
      continue;
    }
    std::vector<int> along;
    EdgeId cur = start;
    do {
      seen.insert(cur);
      out.of[cur] = out.count;
      along.push_back(ix.edge(cur).head.crossing);
      cur = smoothed_succ(cur);
    } while (cur != start);
    out.crossings_along.push_back(std::move(along));
    ++out.count;
  }
  return out;
}

}  // namespace

int seifert_circle_count(const LinkDiagram& d) {
  DiagramIndex ix(d);
  return seifert_circles_impl(d, ix).count;
}

LinkDiagram braid_form(const LinkDiagram& d) {
  require_valid(d, "braid_form");
  if (!projection_connected(d)) throw InputError("braid_form: disconnected projection");
  LinkDiagram cur = d;
  long cap = (long)(d.crossing_count() + 8) * (d.crossing_count() + 8) + 64;
  for (long iter = 0; iter < cap; ++iter) {
    DiagramIndex ix(cur);
    Circles circ = seifert_circles_impl(cur, ix);
    // incoherent face: two boundary edges of different circles traversed
    // with the same sign
    std::optional<MoveSpec> move;
    for (const Face& f : faces(cur)) {
      for (size_t i = 0; i < f.boundary.size() && !move; ++i)
        for (size_t j = 0; j < f.boundary.size(); ++j) {
          if (i == j) continue;
          const FaceEdge& a = f.boundary[i];
          const FaceEdge& b = f.boundary[j];
          if (a.dir != b.dir) continue;
          if (a.edge == b.edge) continue;
          if (circ.of.at(a.edge) == circ.of.at(b.edge)) continue;
          MoveSpec mv;
          mv.kind = MoveKind::R2Plus;
          mv.edge_a = std::min(a.edge, b.edge);
          mv.edge_b = std::max(a.edge, b.edge);
          if (!move || std::make_pair(move->edge_a, move->edge_b) >
                           std::make_pair(mv.edge_a, mv.edge_b))
            move = mv;
        }
      if (move) break;
    }
    if (!move) return cur;
    cur = apply_move(cur, *move);
  }
  throw InputError("braid_form: normalization did not terminate");
}

namespace {

struct BraidData {
  int strands = 0;
  // per column: crossing indices in time order plus their signs
  std::vector<std::vector<int>> column_events;
  std::map<int, int> time_of;     // crossing -> global time
  std::map<int, int> column_of;   // crossing -> column (0-based)
  std::vector<int> sign_of;       // per crossing index
};

BraidData extract_braid(const LinkDiagram& d, const DiagramIndex& ix, const Circles& circ) {
  BraidData out;
  int s = circ.count;
  out.strands = s;
  out.sign_of.resize(d.crossings.size());
  for (int c = 0; c < (int)d.crossings.size(); ++c) out.sign_of[c] = d.crossings[c].sign;

  // Seifert graph must be a simple path in braid form
  std::vector<std::set<int>> adj(s);
  std::map<int, std::pair<int, int>> circles_at;
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    auto ov = ix.over_slots(c);
    int cu = circ.of.at(d.crossings[c].pd[0]);
    int co = circ.of.at(d.crossings[c].pd[ov[0]]);
    if (cu == co) throw InputError("braid data: crossing joins a circle to itself");
    adj[cu].insert(co);
    adj[co].insert(cu);
    circles_at[c] = {cu, co};
  }
  std::vector<int> ends;
  for (int i = 0; i < s; ++i) {
    if (adj[i].size() > 2) throw InputError("braid data: Seifert graph is not a path");
    if (adj[i].size() <= 1) ends.push_back(i);
  }
  if (s == 1) {
    if (!d.crossings.empty()) throw InputError("braid data: inconsistent single circle");
    return out;
  }
  if (ends.size() != 2) throw InputError("braid data: Seifert graph is not a path");
  // deterministic orientation of the path: endpoint holding the lowest edge
  auto min_edge_of_circle = [&](int c) {
    EdgeId best = -1;
    for (const auto& [e, cc] : circ.of)
      if (cc == c && (best < 0 || e < best)) best = e;
    return best;
  };
  int start = ends[0];
  if (min_edge_of_circle(ends[1]) < min_edge_of_circle(ends[0])) start = ends[1];
  std::vector<int> order;  // circle id per strand position
  std::vector<int> strand_of(s, -1);
  int prev = -1, cur = start;
  for (int i = 0; i < s; ++i) {
    order.push_back(cur);
    strand_of[cur] = i;
    int nxt = -1;
    for (int a : adj[cur])
      if (a != prev) nxt = a;
    prev = cur;
    cur = nxt;
  }
  for (const auto& [c, pr] : circles_at) {
    int i = strand_of[pr.first], j = strand_of[pr.second];
    if (std::abs(i - j) != 1) throw InputError("braid data: crossing joins non-adjacent strands");
    out.column_of[c] = std::min(i, j);
  }

  // linearize circle sequences consistently, strand by strand
  std::vector<std::vector<int>> lin(s);
  for (int i = 0; i < s; ++i) {
    std::vector<int> seq = circ.crossings_along[order[i]];
    if (seq.empty()) throw InputError("braid data: strand with no events");
    if (i == 0) {
      auto mn = std::min_element(seq.begin(), seq.end());
      std::rotate(seq.begin(), mn, seq.end());
    } else {
      // events shared with the previous strand must follow its linear order
      std::vector<int> shared_prev;
      for (int c : lin[i - 1])
        if (out.column_of.at(c) == i - 1) shared_prev.push_back(c);
      if (shared_prev.empty()) throw InputError("braid data: empty column");
      // rotate so the element after the last shared event starts the list
      auto pos_last =
          std::find(seq.begin(), seq.end(), shared_prev.back());
      if (pos_last == seq.end()) throw InputError("braid data: column mismatch");
      std::rotate(seq.begin(), pos_last + 1 == seq.end() ? seq.begin() : pos_last + 1, seq.end());
      // verify the shared subsequence
      std::vector<int> got;
      for (int c : seq)
        if (out.column_of.at(c) == i - 1) got.push_back(c);
      if (got != shared_prev) throw InputError("braid data: incoherent cyclic orders");
    }
    lin[i] = seq;
  }

  // global times by topological sort of the chain constraints
  std::map<int, std::set<int>> succ;
  std::map<int, int> indeg;
  for (int c = 0; c < (int)d.crossings.size(); ++c) indeg[c] = 0;
  for (int i = 0; i < s; ++i)
    for (size_t j = 0; j + 1 < lin[i].size(); ++j) {
      if (succ[lin[i][j]].insert(lin[i][j + 1]).second) indeg[lin[i][j + 1]]++;
    }
  std::set<int> ready;
  for (const auto& [c, deg] : indeg)
    if (deg == 0) ready.insert(c);
  int t = 0;
  while (!ready.empty()) {
    int c = *ready.begin();
    ready.erase(ready.begin());
    out.time_of[c] = t++;
    for (int nx : succ[c])
      if (--indeg[nx] == 0) ready.insert(nx);
  }
  if (t != (int)d.crossings.size()) throw InputError("braid data: cyclic time constraints");

  out.column_events.resize(s - 1);
  for (const auto& [c, col] : out.column_of) out.column_events[col].push_back(c);
  for (auto& ev : out.column_events)
    std::sort(ev.begin(), ev.end(), [&](int a, int b) { return out.time_of[a] < out.time_of[b]; });
  return out;
}

}  // namespace

std::string SeifertMatrix::str() const {
  std::ostringstream os;
  os << rank() << "x" << rank() << " [";
  for (int i = 0; i < rank(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < rank(); ++j) {
      if (j) os << ' ';
      os << v[i][j].str();
    }
  }
  os << "]";
  return os.str();
}

SeifertMatrix seifert_matrix(const LinkDiagram& d) {
  require_valid(d, "seifert_matrix");
  if (!projection_connected(d)) throw InputError("seifert_matrix: disconnected projection");
  SeifertMatrix out;
  out.m = d.component_count();
  if (d.crossing_count() == 0) return out;  // disk spanning the unknot

  LinkDiagram bf = braid_form(d);
  DiagramIndex ix(bf);
  Circles circ = seifert_circles_impl(bf, ix);
  BraidData braid = extract_braid(bf, ix, circ);

  struct Loop {
    int t1, t2;    // times of the consecutive bands
    int s1, s2;    // their signs
    int col;
  };
  std::vector<Loop> loops;
  for (int col = 0; col < (int)braid.column_events.size(); ++col) {
    const auto& ev = braid.column_events[col];
    for (size_t j = 0; j + 1 < ev.size(); ++j)
      loops.push_back({braid.time_of[ev[j]], braid.time_of[ev[j + 1]], braid.sign_of[ev[j]],
                       braid.sign_of[ev[j + 1]], col});
  }
  int g = (int)loops.size();
  out.v.assign(g, std::vector<Int>(g, 0));
  for (int a = 0; a < g; ++a) {
    out.v[a][a] = -(loops[a].s1 + loops[a].s2) / 2;
    for (int b = 0; b < g; ++b) {
      if (a == b) continue;
      const Loop& x = loops[a];
      const Loop& y = loops[b];
      if (x.col == y.col) {
        // ladder loops sharing a band of sign e: the pushoff links the
        // earlier loop by (e-1)/2 and the later one by (e+1)/2
        if (x.t2 == y.t1) out.v[a][b] = (y.s1 - 1) / 2;
        if (y.t2 == x.t1) out.v[a][b] = (x.s1 + 1) / 2;
      } else if (std::abs(x.col - y.col) == 1) {
        // interleaved intervals in adjacent columns intersect once on the
        // shared disk; only the pushoff of the loop entered second sees it
        bool x_left = x.col < y.col;
        if (x.t1 < y.t1 && y.t1 < x.t2 && x.t2 < y.t2) out.v[a][b] = x_left ? 0 : -1;
        if (y.t1 < x.t1 && x.t1 < y.t2 && y.t2 < x.t2) out.v[a][b] = x_left ? 0 : 1;
      }
    }
  }
  return out;
}

std::vector<Int> seifert_char_poly(const SeifertMatrix& V) {
  int g = V.rank();
  std::vector<std::vector<Poly>> mat(g, std::vector<Poly>(g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      Poly p = {V.v[i][j], -V.v[j][i]};  // V - x V^T
      ptrim(p);
      mat[i][j] = p;
    }
  Poly det = pdet(std::move(mat));
  ptrim(det);
  return det;
}

ConwayPolynomial conway_from_seifert(const SeifertMatrix& V) {
  int g = V.rank();
  Poly det = seifert_char_poly(V);
  ConwayPolynomial out;
  out.m = V.m;
  if (det.empty()) return out;  // nabla = 0

  // det(t^{-1/2} V - t^{1/2} V^T) = u^{-g} det(V - u^2 V^T), u = t^{1/2};
  // rewrite the Laurent polynomial sum_d det_d u^{2d-g} in z = u - u^{-1}
  std::map<int, Int> laurent;
  for (int dd = 0; dd < (int)det.size(); ++dd)
    if (det[dd] != 0) laurent[2 * dd - g] += det[dd];
  std::vector<Int> zc(g + 1, 0);
  for (int deg = g; deg >= 1; --deg) {
    Int c = laurent.count(deg) ? laurent[deg] : 0;
    if (c == 0) continue;
    zc[deg] += c;
    // subtract c * (u - u^{-1})^deg
    Int binom = 1;
    for (int j = 0; j <= deg; ++j) {
      Int term = c * binom * ((j % 2) ? -1 : 1);
      laurent[deg - 2 * j] -= term;
      if (laurent[deg - 2 * j] == 0) laurent.erase(deg - 2 * j);
      binom = binom * (deg - j) / (j + 1);
    }
  }
  if (laurent.count(0)) {
    zc[0] += laurent[0];
    laurent.erase(0);
  }
  for (const auto& [e, c] : laurent)
    if (c != 0)
      throw InputError("conway_from_seifert: rewrite residue at exponent " + std::to_string(e) +
                       " (inconsistent Seifert matrix)");
  out.raw = zc;
  out.trim();
  if (!out.normal_form_ok())
    throw InputError("conway_from_seifert: result violates the parity normal form");
  return out;
}

ConwayPolynomial conway(const LinkDiagram& d) {
  require_valid(d, "conway");
  LinkDiagram cd = projection_connected(d) ? d : connect_projection(d);
  if (cd.crossing_count() == 0) {
    return cd.component_count() == 1 ? ConwayPolynomial::unknot()
                                     : ConwayPolynomial::zero(cd.component_count());
  }
  return conway_from_seifert(seifert_matrix(cd));
}

}  // namespace linkinv
