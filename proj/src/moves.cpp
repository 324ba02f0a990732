#include "linkinv/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace linkinv {

namespace {

int crossing_index(const LinkDiagram& d, int id) {
  for (int c = 0; c < (int)d.crossings.size(); ++c)
    if (d.crossings[c].id == id) return c;
  throw InputError("invalid site: no crossing with id " + std::to_string(id));
}

int max_edge_id(const LinkDiagram& d) {
  int m = -1;
  for (const auto& comp : d.components)
    for (EdgeId e : comp.cycle) m = std::max(m, e);
  return m;
}

int next_crossing_id(const LinkDiagram& d) {
  int m = -1;
  for (const auto& x : d.crossings) m = std::max(m, x.id);
  return m + 1;
}

// Removes the given crossings, fusing edges along the listed flow pairs
// (u,v): u ran into a removed crossing and continues as v.  Chains of fused
// edges collapse to their first edge; closed chains become free loops.
// New components are ordered by (smallest contributing old component, id).
LinkDiagram splice(const LinkDiagram& d, const std::set<int>& removed,
                   const std::vector<std::pair<EdgeId, EdgeId>>& pairs) {
  DiagramIndex ix(d);
  std::map<EdgeId, EdgeId> pair_next;
  std::set<EdgeId> absorbed;
  for (const auto& [u, v] : pairs) {
    if (!pair_next.insert({u, v}).second) throw InputError("splice: duplicate fuse source");
    absorbed.insert(v);
  }

  std::map<EdgeId, EdgeId> rep_of;    // absorbed edge -> chain representative
  std::map<EdgeId, EdgeId> chain_last;
  std::vector<EdgeId> free_loop_reps;
  std::set<EdgeId> visited;
  std::vector<EdgeId> all_edges;
  for (const auto& comp : d.components)
    for (EdgeId e : comp.cycle) all_edges.push_back(e);
  std::sort(all_edges.begin(), all_edges.end());

  for (EdgeId e : all_edges) {
    if (absorbed.count(e) || visited.count(e)) continue;
    EdgeId cur = e;
    visited.insert(cur);
    while (pair_next.count(cur)) {
      cur = pair_next.at(cur);
      rep_of[cur] = e;
      visited.insert(cur);
    }
    chain_last[e] = cur;
  }
  // closed chains not touched above (entirely absorbed edges)
  for (EdgeId e : all_edges) {
    if (visited.count(e)) continue;
    std::vector<EdgeId> cyc;
    EdgeId cur = e;
    while (!visited.count(cur)) {
      visited.insert(cur);
      cyc.push_back(cur);
      cur = pair_next.at(cur);
    }
    EdgeId rep = *std::min_element(cyc.begin(), cyc.end());
    for (EdgeId x : cyc) rep_of[x] = rep;
    free_loop_reps.push_back(rep);
  }

  auto rep = [&](EdgeId e) {
    auto it = rep_of.find(e);
    return it == rep_of.end() ? e : it->second;
  };

  LinkDiagram out;
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    if (removed.count(c)) continue;
    Crossing x = d.crossings[c];
    for (auto& e : x.pd) e = rep(e);
    out.crossings.push_back(x);
  }

  // successor relation on chain representatives
  auto chain_succ = [&](EdgeId r) -> EdgeId {
    EdgeId last = chain_last.at(r);
    const EdgeInfo& ei = ix.edge(last);
    int c = ei.head.crossing;
    int out_slot = ei.head.slot == 0 ? 2 : (ei.head.slot ^ 2);
    return rep(d.crossings[c].pd[out_slot]);
  };

  struct NewComp {
    std::vector<EdgeId> cycle;
    int old_comp;
    std::string label;
  };
  std::vector<NewComp> comps;
  std::set<EdgeId> placed;
  for (EdgeId e : all_edges) {
    if (absorbed.count(e) && rep(e) != e) continue;
    if (placed.count(e)) continue;
    bool is_free = std::count(free_loop_reps.begin(), free_loop_reps.end(), e) > 0 ||
                   ix.edge(e).free_loop;
    NewComp nc;
    nc.old_comp = d.component_count();
    if (is_free) {
      nc.cycle = {e};
      placed.insert(e);
      nc.old_comp = ix.edge(e).component;
    } else {
      EdgeId cur = e;
      do {
        placed.insert(cur);
        nc.cycle.push_back(cur);
        nc.old_comp = std::min(nc.old_comp, ix.edge(cur).component);
        cur = chain_succ(cur);
        if (nc.cycle.size() > all_edges.size())
          throw InputError("splice: cycle walk failed to close");
      } while (cur != e);
    }
    nc.label = d.components[nc.old_comp].label;
    comps.push_back(std::move(nc));
  }
  std::stable_sort(comps.begin(), comps.end(), [](const NewComp& a, const NewComp& b) {
    if (a.old_comp != b.old_comp) return a.old_comp < b.old_comp;
    return a.cycle.front() < b.cycle.front();
  });
  for (auto& nc : comps) {
    Component comp;
    comp.cycle = std::move(nc.cycle);
    comp.label = std::move(nc.label);
    out.components.push_back(std::move(comp));
  }
  return out;
}

void replace_in_cycle(std::vector<EdgeId>& cycle, EdgeId e, const std::vector<EdgeId>& repl) {
  auto it = std::find(cycle.begin(), cycle.end(), e);
  if (it == cycle.end()) throw InputError("invalid site: edge not found in its component");
  size_t pos = it - cycle.begin();
  cycle.erase(it);
  cycle.insert(cycle.begin() + pos, repl.begin(), repl.end());
}

LinkDiagram do_switch(const LinkDiagram& d, int c) {
  LinkDiagram out = d;
  Crossing& x = out.crossings[c];
  if (x.sign > 0)
    x.pd = {x.pd[3], x.pd[0], x.pd[1], x.pd[2]};
  else
    x.pd = {x.pd[1], x.pd[2], x.pd[3], x.pd[0]};
  x.sign = -x.sign;
  return out;
}

LinkDiagram do_smooth(const LinkDiagram& d, int c) {
  const auto& pd = d.crossings[c].pd;
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  if (d.crossings[c].sign > 0)
    pairs = {{pd[0], pd[1]}, {pd[3], pd[2]}};
  else
    pairs = {{pd[0], pd[3]}, {pd[1], pd[2]}};
  return splice(d, {c}, pairs);
}

// straight-through fusion, shared by R1- and R2-
void straight_pairs(const LinkDiagram& d, const DiagramIndex& ix, int c,
                    std::vector<std::pair<EdgeId, EdgeId>>& pairs) {
  const auto& pd = d.crossings[c].pd;
  auto ov = ix.over_slots(c);
  pairs.push_back({pd[0], pd[2]});
  pairs.push_back({pd[ov[0]], pd[ov[1]]});
}

bool is_kink(const LinkDiagram& d, int c) {
  const auto& pd = d.crossings[c].pd;
  for (int i = 0; i < 4; ++i)
    if (pd[i] == pd[(i + 1) % 4]) return true;
  return false;
}

LinkDiagram do_r1_minus(const LinkDiagram& d, int c) {
  if (!is_kink(d, c))
    throw InputError("invalid site: crossing " + std::to_string(d.crossings[c].id) + " is not a kink");
  DiagramIndex ix(d);
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  straight_pairs(d, ix, c, pairs);
  return splice(d, {c}, pairs);
}

LinkDiagram do_r1_plus(const LinkDiagram& d, EdgeId e, int sign, int side) {
  DiagramIndex ix(d);
  if (!ix.has_edge(e)) throw InputError("invalid site: unknown edge " + std::to_string(e));
  const EdgeInfo& ei = ix.edge(e);
  int base = max_edge_id(d);
  EdgeId loop = base + 1;
  EdgeId f = ei.free_loop ? e : base + 2;  // a free loop closes back onto e
  LinkDiagram out = d;
  if (ei.free_loop)
    out.components[ei.component].cycle = {e, loop};
  else
    replace_in_cycle(out.components[ei.component].cycle, e, {e, loop, f});
  // relabel e's old head occurrence to f
  if (ei.head.crossing != -1) out.crossings[ei.head.crossing].pd[ei.head.slot] = f;
  Crossing x;
  x.id = next_crossing_id(d);
  x.sign = sign;
  if (sign > 0)
    x.pd = side == 0 ? std::array<EdgeId, 4>{loop, loop, f, e} : std::array<EdgeId, 4>{e, f, loop, loop};
  else
    x.pd = side == 0 ? std::array<EdgeId, 4>{loop, e, f, loop} : std::array<EdgeId, 4>{e, loop, loop, f};
  out.crossings.push_back(x);
  return out;
}

// R2 push: e goes over f.  antiparallel gadget; `flip` selects the variant
// for face darts running against the edge orientations.
LinkDiagram do_r2_plus_raw(const LinkDiagram& d, EdgeId e, EdgeId f, bool flip) {
  DiagramIndex ix(d);
  if (e == f) throw InputError("invalid site: R2 needs two distinct edges");
  const EdgeInfo& einfo = ix.edge(e);
  const EdgeInfo& finfo = ix.edge(f);
  int base = max_edge_id(d);
  EdgeId p = base + 1, q = base + 2;
  EdgeId e2 = einfo.free_loop ? e : base + 3;
  EdgeId f2 = finfo.free_loop ? f : base + 4;
  LinkDiagram out = d;
  if (einfo.free_loop)
    out.components[einfo.component].cycle = {e, p};
  else
    replace_in_cycle(out.components[einfo.component].cycle, e, {e, p, e2});
  if (finfo.free_loop)
    out.components[finfo.component].cycle = {f, q};
  else
    replace_in_cycle(out.components[finfo.component].cycle, f, {f, q, f2});
  if (einfo.head.crossing != -1) out.crossings[einfo.head.crossing].pd[einfo.head.slot] = e2;
  if (finfo.head.crossing != -1) out.crossings[finfo.head.crossing].pd[finfo.head.slot] = f2;
  Crossing x1, x2;
  x1.id = next_crossing_id(d);
  x2.id = x1.id + 1;
  if (!flip) {
    x1.pd = {q, p, f2, e};
    x1.sign = +1;
    x2.pd = {f, p, q, e2};
    x2.sign = -1;
  } else {
    x1.pd = {f, e2, q, p};
    x1.sign = +1;
    x2.pd = {q, e, f2, p};
    x2.sign = -1;
  }
  out.crossings.push_back(x1);
  out.crossings.push_back(x2);
  return out;
}

// Locates a face where e and f appear with equal dart signs (strands
// antiparallel across the face); returns the shared dart sign.
std::optional<int> r2_face_darts(const LinkDiagram& d, EdgeId e, EdgeId f) {
  for (const Face& face : faces(d)) {
    for (const FaceEdge& a : face.boundary) {
      if (a.edge != e) continue;
      for (const FaceEdge& b : face.boundary) {
        if (b.edge != f) continue;
        if (a.dir == b.dir) return a.dir;
      }
    }
  }
  return std::nullopt;
}

LinkDiagram do_r2_plus(const LinkDiagram& d, EdgeId e, EdgeId f) {
  DiagramIndex ix(d);
  if (!ix.has_edge(e) || !ix.has_edge(f)) throw InputError("invalid site: unknown edge");
  auto piece = projection_pieces(d);
  if (piece[ix.edge(e).component] != piece[ix.edge(f).component])
    return do_r2_plus_raw(d, e, f, false);
  auto dart = r2_face_darts(d, e, f);
  if (!dart)
    throw InputError("invalid site: edges " + std::to_string(e) + "," + std::to_string(f) +
                     " do not cobound a face antiparallel");
  // face tracing keeps the region on the right of travel, so darts running
  // with the edge orientations place e east of the region flowing down
  return do_r2_plus_raw(d, e, f, *dart > 0);
}

struct Bigon {
  int c1, c2;  // crossing indices
};

std::optional<Bigon> match_bigon(const LinkDiagram& d, const DiagramIndex& ix, int c1, int c2) {
  if (c1 == c2) return std::nullopt;
  // shared edges between the two crossings
  std::vector<EdgeId> shared;
  for (int s1 = 0; s1 < 4; ++s1)
    for (int s2 = 0; s2 < 4; ++s2)
      if (d.crossings[c1].pd[s1] == d.crossings[c2].pd[s2]) shared.push_back(d.crossings[c1].pd[s1]);
  std::sort(shared.begin(), shared.end());
  shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
  if (shared.size() != 2) return std::nullopt;
  EdgeId pe = shared[0], qe = shared[1];
  if (pe == qe) return std::nullopt;
  auto slot_of = [&](int c, EdgeId e) {
    for (int s = 0; s < 4; ++s)
      if (d.crossings[c].pd[s] == e) return s;
    return -1;
  };
  auto is_over = [&](int c, EdgeId e) {
    int s = slot_of(c, e);
    return s == 1 || s == 3;
  };
  // removable pattern: one strand over at both crossings
  bool p_over = is_over(c1, pe) && is_over(c2, pe);
  bool q_over = is_over(c1, qe) && is_over(c2, qe);
  bool p_under = !is_over(c1, pe) && !is_over(c2, pe);
  bool q_under = !is_over(c1, qe) && !is_over(c2, qe);
  if (!((p_over && q_under) || (q_over && p_under))) return std::nullopt;
  // the bigon must be an actual face
  (void)ix;
  for (const Face& face : faces(d)) {
    if (face.boundary.size() != 2) continue;
    std::set<EdgeId> fe = {face.boundary[0].edge, face.boundary[1].edge};
    if (fe == std::set<EdgeId>{pe, qe}) return Bigon{c1, c2};
  }
  return std::nullopt;
}

LinkDiagram do_r2_minus(const LinkDiagram& d, int c1, int c2) {
  DiagramIndex ix(d);
  auto big = match_bigon(d, ix, c1, c2);
  if (!big) throw InputError("invalid site: crossings do not bound a removable bigon");
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  straight_pairs(d, ix, c1, pairs);
  straight_pairs(d, ix, c2, pairs);
  return splice(d, {c1, c2}, pairs);
}

struct TrianglePattern {
  EdgeId e, p, q;   // slider, X1-X3 side, X2-X3 side
  int x1, x2, x3;   // crossing indices
  bool over;        // slider strand passes over both its crossings
};

std::optional<TrianglePattern> match_triangle(const LinkDiagram& d, const DiagramIndex& ix, EdgeId e,
                                              int x1, int x2, int x3) {
  auto slots_of = [&](int c, EdgeId ed) {
    std::vector<int> out;
    for (int s = 0; s < 4; ++s)
      if (d.crossings[c].pd[s] == ed) out.push_back(s);
    return out;
  };
  auto at = [&](int c, EdgeId ed) { return !slots_of(c, ed).empty(); };
  if (!(at(x1, e) && at(x2, e)) || at(x3, e)) return std::nullopt;
  auto s1 = slots_of(x1, e), s2 = slots_of(x2, e);
  if (s1.size() != 1 || s2.size() != 1) return std::nullopt;
  auto over_slot = [](int s) { return s == 1 || s == 3; };
  bool over1 = over_slot(s1[0]), over2 = over_slot(s2[0]);
  if (over1 != over2) return std::nullopt;
  // sides p (x1-x3) and q (x2-x3) on the other strands; several parallel
  // candidates can exist, so pick the pair bounding an actual face with e
  auto side_candidates = [&](int xa, int xb, EdgeId avoid) {
    std::vector<EdgeId> out;
    for (int s = 0; s < 4; ++s) {
      EdgeId cand = d.crossings[xa].pd[s];
      if (cand != avoid && at(xb, cand)) out.push_back(cand);
    }
    return out;
  };
  std::set<std::set<EdgeId>> triangle_faces;
  for (const Face& face : faces(d)) {
    if (face.boundary.size() != 3) continue;
    std::set<EdgeId> fe;
    for (const auto& fd : face.boundary) fe.insert(fd.edge);
    if (fe.size() == 3 && fe.count(e)) triangle_faces.insert(fe);
  }
  (void)ix;
  for (EdgeId p : side_candidates(x1, x3, e))
    for (EdgeId q : side_candidates(x2, x3, e)) {
      if (p == q || p == e || q == e) continue;
      if (triangle_faces.count(std::set<EdgeId>{e, p, q}))
        return TrianglePattern{e, p, q, x1, x2, x3, over1};
    }
  return std::nullopt;
}

LinkDiagram do_r3(const LinkDiagram& d, EdgeId e, int x1, int x2, int x3) {
  DiagramIndex ix(d);
  auto pat = match_triangle(d, ix, e, x1, x2, x3);
  if (!pat) throw InputError("R3 pattern not present at site");

  struct Strand {
    EdgeId mid;        // triangle side
    int first, second; // crossing indices in flow order
    EdgeId in_leg, out_leg;
  };
  auto make_strand = [&](EdgeId mid) {
    Strand s;
    s.mid = mid;
    const EdgeInfo& mi = ix.edge(mid);
    s.first = mi.tail.crossing;
    s.second = mi.head.crossing;
    // in-leg: edge entering s.first on this strand; the strand's slots pair
    // under-in<->under-out, over-in<->over-out
    auto strand_in = [&](int c, int out_slot) {
      int in_slot = out_slot == 2 ? 0 : (out_slot ^ 2);
      return d.crossings[c].pd[in_slot];
    };
    auto strand_out = [&](int c, int in_slot) {
      int out_slot = in_slot == 0 ? 2 : (in_slot ^ 2);
      return d.crossings[c].pd[out_slot];
    };
    s.in_leg = strand_in(s.first, mi.tail.slot);
    s.out_leg = strand_out(s.second, mi.head.slot);
    return s;
  };
  Strand E = make_strand(pat->e);
  Strand A = make_strand(pat->p);
  Strand B = make_strand(pat->q);

  // new crossing for each old partner pair, same sign; ids preserved
  struct NewCross {
    EdgeId u_in, u_out, o_in, o_out;
    int sign, id;
  };
  std::map<int, NewCross> nc;  // keyed by old crossing index
  for (int xc : {pat->x1, pat->x2, pat->x3}) {
    NewCross c;
    c.sign = d.crossings[xc].sign;
    c.id = d.crossings[xc].id;
    nc[xc] = c;
  }
  // each strand visits its two crossings in swapped order
  auto route = [&](const Strand& s, bool strand_over_at_first, bool strand_over_at_second) {
    // new order: old second's pair first
    int cfirst = s.second, csecond = s.first;
    bool over_first = strand_over_at_second, over_second = strand_over_at_first;
    auto put = [&](int cx, bool over, EdgeId in_e, EdgeId out_e) {
      NewCross& c = nc[cx];
      if (over) {
        c.o_in = in_e;
        c.o_out = out_e;
      } else {
        c.u_in = in_e;
        c.u_out = out_e;
      }
    };
    put(cfirst, over_first, s.in_leg, s.mid);
    put(csecond, over_second, s.mid, s.out_leg);
  };
  // over/under roles per (strand, crossing) in the old diagram
  auto role = [&](const Strand& s, int cx) {
    const EdgeInfo& mi = ix.edge(s.mid);
    int slot = (mi.tail.crossing == cx) ? mi.tail.slot : mi.head.slot;
    return slot == 1 || slot == 3;
  };
  route(E, role(E, E.first), role(E, E.second));
  route(A, role(A, A.first), role(A, A.second));
  route(B, role(B, B.first), role(B, B.second));

  LinkDiagram out = d;
  for (auto& [xc, c] : nc) {
    Crossing& x = out.crossings[xc];
    x.id = c.id;
    x.sign = c.sign;
    if (c.sign > 0)
      x.pd = {c.u_in, c.o_out, c.u_out, c.o_in};
    else
      x.pd = {c.u_in, c.o_in, c.u_out, c.o_out};
  }
  return out;
}

}  // namespace

std::string to_string(const MoveSpec& mv) {
  std::ostringstream os;
  switch (mv.kind) {
    case MoveKind::R1Plus:
      os << "R1+(edge " << mv.edge_a << ", sign " << mv.sign << ", side " << mv.side << ")";
      break;
    case MoveKind::R1Minus:
      os << "R1-(crossing " << mv.crossing_a << ")";
      break;
    case MoveKind::R2Plus:
      os << "R2+(edge " << mv.edge_a << " over " << mv.edge_b << ")";
      break;
    case MoveKind::R2Minus:
      os << "R2-(crossings " << mv.crossing_a << "," << mv.crossing_b << ")";
      break;
    case MoveKind::R3:
      os << "R3(edge " << mv.edge_a << " across " << mv.crossing_c << ")";
      break;
    case MoveKind::Switch:
      os << "switch(" << mv.crossing_a << ")";
      break;
    case MoveKind::Smooth:
      os << "smooth(" << mv.crossing_a << ")";
      break;
  }
  return os.str();
}

LinkDiagram apply_move(const LinkDiagram& d, const MoveSpec& mv) {
  require_valid(d, "apply_move");
  LinkDiagram out;
  switch (mv.kind) {
    case MoveKind::Switch:
      out = do_switch(d, crossing_index(d, mv.crossing_a));
      break;
    case MoveKind::Smooth:
      out = do_smooth(d, crossing_index(d, mv.crossing_a));
      break;
    case MoveKind::R1Minus:
      out = do_r1_minus(d, crossing_index(d, mv.crossing_a));
      break;
    case MoveKind::R1Plus:
      out = do_r1_plus(d, mv.edge_a, mv.sign, mv.side);
      break;
    case MoveKind::R2Plus:
      out = do_r2_plus(d, mv.edge_a, mv.edge_b);
      break;
    case MoveKind::R2Minus:
      out = do_r2_minus(d, crossing_index(d, mv.crossing_a), crossing_index(d, mv.crossing_b));
      break;
    case MoveKind::R3:
      out = do_r3(d, mv.edge_a, crossing_index(d, mv.crossing_a), crossing_index(d, mv.crossing_b),
                  crossing_index(d, mv.crossing_c));
      break;
  }
  require_valid(out, "apply_move result (" + to_string(mv) + ")");
  return out;
}

std::vector<MoveSpec> enumerate_moves(const LinkDiagram& d, const std::vector<MoveKind>& kinds) {
  DiagramIndex ix(d);
  std::vector<MoveSpec> out;
  std::vector<EdgeId> edges = ix.edges();
  for (MoveKind k : kinds) {
    switch (k) {
      case MoveKind::Switch:
      case MoveKind::Smooth:
        for (const auto& x : d.crossings) {
          MoveSpec mv;
          mv.kind = k;
          mv.crossing_a = x.id;
          out.push_back(mv);
        }
        break;
      case MoveKind::R1Minus:
        for (int c = 0; c < (int)d.crossings.size(); ++c)
          if (is_kink(d, c)) {
            MoveSpec mv;
            mv.kind = k;
            mv.crossing_a = d.crossings[c].id;
            out.push_back(mv);
          }
        break;
      case MoveKind::R1Plus:
        for (EdgeId e : edges)
          for (int sign : {+1, -1})
            for (int side : {0, 1}) {
              MoveSpec mv;
              mv.kind = k;
              mv.edge_a = e;
              mv.sign = sign;
              mv.side = side;
              out.push_back(mv);
            }
        break;
      case MoveKind::R2Plus: {
        if (d.crossing_count() == 0) break;
        std::set<std::pair<EdgeId, EdgeId>> seen;
        for (const Face& face : faces(d))
          for (const FaceEdge& a : face.boundary)
            for (const FaceEdge& b : face.boundary) {
              if (a.edge == b.edge || a.dir != b.dir) continue;
              if (!seen.insert({a.edge, b.edge}).second) continue;
              MoveSpec mv;
              mv.kind = k;
              mv.edge_a = a.edge;
              mv.edge_b = b.edge;
              out.push_back(mv);
            }
        break;
      }
      case MoveKind::R2Minus:
        for (int c1 = 0; c1 < (int)d.crossings.size(); ++c1)
          for (int c2 = c1 + 1; c2 < (int)d.crossings.size(); ++c2)
            if (match_bigon(d, ix, c1, c2)) {
              MoveSpec mv;
              mv.kind = k;
              mv.crossing_a = d.crossings[c1].id;
              mv.crossing_b = d.crossings[c2].id;
              out.push_back(mv);
            }
        break;
      case MoveKind::R3: {
        std::set<std::tuple<EdgeId, int, int, int>> seen;
        for (const Face& face : faces(d)) {
          if (face.boundary.size() != 3) continue;
          for (const FaceEdge& fe : face.boundary) {
            EdgeId e = fe.edge;
            const EdgeInfo& einfo = ix.edge(e);
            int x1 = einfo.tail.crossing, x2 = einfo.head.crossing;
            // the crossing not on e
            int x3 = -1;
            for (const FaceEdge& other : face.boundary) {
              const EdgeInfo& oi = ix.edge(other.edge);
              for (int c : {oi.tail.crossing, oi.head.crossing})
                if (c != x1 && c != x2) x3 = c;
            }
            if (x3 < 0) continue;
            if (match_triangle(d, ix, e, x1, x2, x3)) {
              auto key = std::make_tuple(e, x1, x2, x3);
              if (!seen.insert(key).second) continue;
              MoveSpec mv;
              mv.kind = k;
              mv.edge_a = e;
              mv.crossing_a = d.crossings[x1].id;
              mv.crossing_b = d.crossings[x2].id;
              mv.crossing_c = d.crossings[x3].id;
              out.push_back(mv);
            }
          }
        }
        break;
      }
    }
  }
  return out;
}

LinkDiagram connect_projection(const LinkDiagram& d) {
  require_valid(d, "connect_projection");
  LinkDiagram cur = d;
  for (;;) {
    auto piece = projection_pieces(cur);
    int pieces = 1 + *std::max_element(piece.begin(), piece.end());
    if (pieces <= 1) return cur;
    DiagramIndex ix(cur);
    EdgeId e = -1, f = -1;
    for (EdgeId x : ix.edges()) {
      int p = piece[ix.edge(x).component];
      if (p == 0 && (e < 0 || x < e)) e = x;
      if (p == 1 && (f < 0 || x < f)) f = x;
    }
    MoveSpec mv;
    mv.kind = MoveKind::R2Plus;
    mv.edge_a = e;
    mv.edge_b = f;
    cur = apply_move(cur, mv);
  }
}

}  // namespace linkinv
