#include "linkinv/families.hpp"

#include "linkinv/builder.hpp"
#include "linkinv/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace linkinv {

namespace {

// ---------------------------------------------------------------------------
// Assembly: crossings carrying explicit strand directions, assembled into a
// LinkDiagram at the end.  The successor relation is implied by the
// crossings; edges appearing in none become free loops.  Component order is
// controlled by (hint, sub) provenance keys.
// ---------------------------------------------------------------------------
struct DirCrossing {
  EdgeId u_in, u_out, o_in, o_out;
  int sign;
};

struct Assembly {
  std::vector<DirCrossing> xs;
  std::map<EdgeId, std::pair<int, int>> comp_hint;
  std::map<std::pair<int, int>, std::string> labels;
  int next_edge = 0;

  EdgeId fresh(std::pair<int, int> hint) {
    EdgeId e = next_edge++;
    comp_hint[e] = hint;
    return e;
  }

  void add_crossing(EdgeId u_in, EdgeId u_out, EdgeId o_in, EdgeId o_out, int sign) {
    xs.push_back({u_in, u_out, o_in, o_out, sign});
  }

  // replace every occurrence of edge b by a (a fused cut, no crossing)
  void fuse(EdgeId a, EdgeId b) {
    if (a == b) return;
    for (auto& x : xs) {
      if (x.u_in == b) x.u_in = a;
      if (x.u_out == b) x.u_out = a;
      if (x.o_in == b) x.o_in = a;
      if (x.o_out == b) x.o_out = a;
    }
    comp_hint.erase(b);
  }

  std::map<EdgeId, EdgeId> successor() const {
    std::map<EdgeId, EdgeId> succ;
    for (const auto& x : xs) {
      if (!succ.insert({x.u_in, x.u_out}).second)
        throw InputError("assembly: edge " + std::to_string(x.u_in) + " with two outgoing flows");
      if (!succ.insert({x.o_in, x.o_out}).second)
        throw InputError("assembly: edge " + std::to_string(x.o_in) + " with two outgoing flows");
    }
    return succ;
  }

  LinkDiagram finish() {
    auto succ = successor();
    std::map<std::pair<int, int>, std::vector<std::vector<EdgeId>>> by_hint;
    std::set<EdgeId> seen;
    for (const auto& [e, h] : comp_hint) {
      if (seen.count(e)) continue;
      std::vector<EdgeId> cyc;
      if (!succ.count(e)) {
        cyc = {e};
        seen.insert(e);
      } else {
        EdgeId cur = e;
        do {
          if (!seen.insert(cur).second) throw InputError("assembly: tangled successor relation");
          cyc.push_back(cur);
          auto it = succ.find(cur);
          if (it == succ.end()) throw InputError("assembly: flow runs into a dead end");
          cur = it->second;
        } while (cur != e);
      }
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      by_hint[comp_hint.at(cyc.front())].push_back(std::move(cyc));
    }
    std::map<EdgeId, EdgeId> rename;
    LinkDiagram d;
    int next = 0;
    for (auto& [hint, cycles] : by_hint) {
      if (cycles.size() != 1) throw InputError("assembly: component hint split into several curves");
      Component comp;
      for (EdgeId e : cycles.front()) {
        rename[e] = next;
        comp.cycle.push_back(next);
        ++next;
      }
      auto lit = labels.find(hint);
      if (lit != labels.end()) comp.label = lit->second;
      d.components.push_back(std::move(comp));
    }
    for (int i = 0; i < (int)xs.size(); ++i) {
      const DirCrossing& c = xs[i];
      Crossing x;
      x.id = i;
      x.sign = c.sign;
      if (c.sign > 0)
        x.pd = {rename.at(c.u_in), rename.at(c.o_out), rename.at(c.u_out), rename.at(c.o_in)};
      else
        x.pd = {rename.at(c.u_in), rename.at(c.o_in), rename.at(c.u_out), rename.at(c.o_out)};
      d.crossings.push_back(x);
    }
#ifdef LINKINV_ASSEMBLY_DEBUG
    try {
      require_valid(d, "assembly");
    } catch (const std::exception& ex) {
      fprintf(stderr, "assembly dump:\n");
      for (const auto& x : d.crossings)
        fprintf(stderr, "  pd(%d %d %d %d) sign %d\n", x.pd[0], x.pd[1], x.pd[2], x.pd[3], x.sign);
      for (const auto& comp : d.components) {
        fprintf(stderr, "  cycle:");
        for (auto e : comp.cycle) fprintf(stderr, " %d", e);
        fprintf(stderr, "\n");
      }
      throw;
    }
#else
    require_valid(d, "assembly");
#endif
    return d;
  }

  // finish, reporting where marked edges ended up
  LinkDiagram finish_tracking(std::vector<EdgeId>& marks) {
    // the rename map is reproduced by a dry run of the cycle walk
    LinkDiagram d = finish();
    // recover rename by replaying: cheaper to recompute directly
    auto succ = successor();
    std::map<std::pair<int, int>, std::vector<std::vector<EdgeId>>> by_hint;
    std::set<EdgeId> seen;
    for (const auto& [e, h] : comp_hint) {
      if (seen.count(e)) continue;
      std::vector<EdgeId> cyc;
      if (!succ.count(e)) {
        cyc = {e};
        seen.insert(e);
      } else {
        EdgeId cur = e;
        do {
          seen.insert(cur);
          cyc.push_back(cur);
          cur = succ.at(cur);
        } while (cur != e);
      }
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      by_hint[comp_hint.at(cyc.front())].push_back(std::move(cyc));
    }
    std::map<EdgeId, EdgeId> rename;
    int next = 0;
    for (auto& [hint, cycles] : by_hint)
      for (EdgeId e : cycles.front()) rename[e] = next++;
    for (auto& m : marks) m = rename.at(m);
    return d;
  }
};

// Import an existing diagram (identity transform).
Assembly import_diagram(const LinkDiagram& d) {
  DiagramIndex ix(d);
  Assembly a;
  for (int i = 0; i < d.component_count(); ++i) {
    for (EdgeId e : d.components[i].cycle) {
      a.comp_hint[e] = {i, 0};
      a.next_edge = std::max(a.next_edge, e + 1);
    }
    a.labels[{i, 0}] = d.components[i].label;
  }
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    auto ov = ix.over_slots(c);
    const auto& pd = d.crossings[c].pd;
    a.add_crossing(pd[0], pd[2], pd[ov[0]], pd[ov[1]], d.crossings[c].sign);
  }
  return a;
}

// Braid insertion on coherently oriented parallel strands given by their
// current edges (pushoff order, left to right).  Letters +-t act on
// positions t,t+1 with crossing sign +-1.  Returns the outgoing edges.
std::vector<EdgeId> insert_parallel_braid(Assembly& a, std::vector<EdgeId> strands,
                                          const std::vector<int>& word) {
  int n = (int)strands.size();
  for (int letter : word) {
    int t = std::abs(letter) - 1;
    if (t < 0 || t + 1 >= n) throw InputError("parallel braid: letter out of range");
    EdgeId lt = strands[t], rt = strands[t + 1];
    EdgeId bl = a.fresh(a.comp_hint.at(rt)), br = a.fresh(a.comp_hint.at(lt));
    if (letter > 0)
      a.add_crossing(lt, br, rt, bl, +1);
    else
      a.add_crossing(rt, bl, lt, br, -1);
    strands[t] = bl;
    strands[t + 1] = br;
  }
  return strands;
}

std::vector<int> full_twist_word(int n, int count, int sign) {
  std::vector<int> w;
  for (int rep = 0; rep < count; ++rep)
    for (int r = 0; r < n; ++r)
      for (int t = 1; t < n; ++t) w.push_back(sign * t);
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// cable
// ---------------------------------------------------------------------------
namespace {

struct CableResult {
  Assembly assembly;
  std::vector<EdgeId> site;  // copies of the lowest edge of the cabled component
};

CableResult blackboard_cable(const LinkDiagram& d, int comp, int n) {
  DiagramIndex ix(d);
  Assembly a;
  std::map<EdgeId, std::vector<EdgeId>> copy;
  for (int i = 0; i < d.component_count(); ++i) {
    const std::string& base_label = d.components[i].label;
    if (i == comp) {
      for (int j = 1; j <= n; ++j) {
        std::ostringstream lab;
        lab << (base_label.empty() ? "c" + std::to_string(i + 1) : base_label) << "." << j;
        a.labels[{i, j}] = lab.str();
      }
    } else {
      a.labels[{i, 0}] = base_label;
    }
    for (EdgeId e : d.components[i].cycle) {
      auto& v = copy[e];
      if (i == comp)
        for (int j = 1; j <= n; ++j) v.push_back(a.fresh({i, j}));
      else
        v.push_back(a.fresh({i, 0}));
    }
  }

  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    auto ov = ix.over_slots(c);
    const auto& pd = d.crossings[c].pd;
    EdgeId a0 = pd[0], a2 = pd[2], oin = pd[ov[0]], oout = pd[ov[1]];
    int cu = ix.edge(a0).component, co = ix.edge(oin).component;
    int s = d.crossings[c].sign;
    bool under_i = (cu == comp), over_i = (co == comp);
    if (!under_i && !over_i) {
      a.add_crossing(copy[a0][0], copy[a2][0], copy[oin][0], copy[oout][0], s);
    } else if (under_i && !over_i) {
      // over path subdivides: o_in, m_1..m_{n-1}, o_out
      std::vector<EdgeId> path = {copy[oin][0]};
      for (int t = 1; t < n; ++t) path.push_back(a.fresh({co, 0}));
      path.push_back(copy[oout][0]);
      for (int t = 1; t <= n; ++t) {
        int k = s > 0 ? t : n + 1 - t;  // which copy is met at step t
        a.add_crossing(copy[a0][k - 1], copy[a2][k - 1], path[t - 1], path[t], s);
      }
    } else if (!under_i && over_i) {
      std::vector<EdgeId> path = {copy[a0][0]};
      for (int t = 1; t < n; ++t) path.push_back(a.fresh({cu, 0}));
      path.push_back(copy[a2][0]);
      for (int t = 1; t <= n; ++t) {
        int j = s > 0 ? n + 1 - t : t;
        a.add_crossing(path[t - 1], path[t], copy[oin][j - 1], copy[oout][j - 1], s);
      }
    } else {
      // self-crossing: n x n grid
      std::vector<std::vector<EdgeId>> U(n + 1), V(n + 1);
      for (int k = 1; k <= n; ++k) {
        U[k].push_back(copy[a0][k - 1]);
        for (int t = 1; t < n; ++t) U[k].push_back(a.fresh({comp, k}));
        U[k].push_back(copy[a2][k - 1]);
      }
      for (int j = 1; j <= n; ++j) {
        V[j].push_back(copy[oin][j - 1]);
        for (int t = 1; t < n; ++t) V[j].push_back(a.fresh({comp, j}));
        V[j].push_back(copy[oout][j - 1]);
      }
      for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j) {
          if (s > 0)
            a.add_crossing(U[k][n - j], U[k][n - j + 1], V[j][k - 1], V[j][k], s);
          else
            a.add_crossing(U[k][j - 1], U[k][j], V[j][n - k], V[j][n - k + 1], s);
        }
    }
  }

  EdgeId site_edge = *std::min_element(d.components[comp].cycle.begin(), d.components[comp].cycle.end());
  return CableResult{std::move(a), copy.at(site_edge)};
}

// Reroute flows after a braid was inserted on `site` edges: every crossing
// other than the braid's own must consume the braid outputs instead of the
// original edges wherever those edges were flowing onward.
void rewire_after_braid(Assembly& a, size_t braid_start, const std::vector<EdgeId>& site,
                        const std::vector<EdgeId>& outs) {
  for (size_t xi = 0; xi < a.xs.size(); ++xi) {
    if (xi >= braid_start) continue;  // braid crossings keep their wiring
    for (size_t j = 0; j < site.size(); ++j) {
      if (a.xs[xi].u_in == site[j]) a.xs[xi].u_in = outs[j];
      if (a.xs[xi].o_in == site[j]) a.xs[xi].o_in = outs[j];
    }
  }
}

}  // namespace

LinkDiagram cable(const LinkDiagram& d, int comp, int n) {
  require_valid(d, "cable");
  if (comp < 0 || comp >= d.component_count()) throw InputError("cable: invalid component");
  if (n < 1) throw InputError("cable: need n >= 1");
  if (n == 1) return d;

  CableResult r = blackboard_cable(d, comp, n);
  int w = writhe(d, comp);
  if (w != 0 && d.crossing_count() > 0) {
    size_t braid_start = r.assembly.xs.size();
    // copies run left to right on the page in reverse pushoff order
    std::vector<EdgeId> page(r.site.rbegin(), r.site.rend());
    std::vector<EdgeId> outs_page =
        insert_parallel_braid(r.assembly, page, full_twist_word(n, std::abs(w), w > 0 ? -1 : +1));
    std::vector<EdgeId> outs(outs_page.rbegin(), outs_page.rend());
    rewire_after_braid(r.assembly, braid_start, r.site, outs);
  }
  return r.assembly.finish();
}

// ---------------------------------------------------------------------------
// whitehead double
// ---------------------------------------------------------------------------
namespace {

// Morse-style strip of strand ends emitting into an assembly; corner logic
// identical to MorseBuilder but operating on pre-existing edges.
struct Weaver {
  Assembly& a;
  struct End {
    EdgeId e;
    bool down;
  };
  std::vector<End> ends;

  void cross(int pos, bool right_over) {
    End l = ends.at(pos), r = ends.at(pos + 1);
    EdgeId bl = a.fresh(a.comp_hint.at(r.e)), br = a.fresh(a.comp_hint.at(l.e));
    EdgeId l_in = l.down ? l.e : br, l_out = l.down ? br : l.e;
    EdgeId r_in = r.down ? r.e : bl, r_out = r.down ? bl : r.e;
    // sign via the corner layout (TL=l, TR=r, BL=bl, BR=br; ccw = TR,TL,BL,BR)
    enum { TL, TR, BL, BR };
    int under_in = right_over ? (l.down ? TL : BR) : (r.down ? TR : BL);
    int over_in = right_over ? (r.down ? TR : BL) : (l.down ? TL : BR);
    static const int ccw[4] = {TR, TL, BL, BR};
    int start = 0;
    while (ccw[start] != under_in) ++start;
    int over_slot = 0;
    for (int k = 0; k < 4; ++k)
      if (ccw[(start + k) % 4] == over_in) over_slot = k;
    int sign = over_slot == 3 ? +1 : -1;
    if (right_over)
      a.add_crossing(l_in, l_out, r_in, r_out, sign);
    else
      a.add_crossing(r_in, r_out, l_in, l_out, sign);
    ends[pos] = {bl, r.down};
    ends[pos + 1] = {br, l.down};
  }

  // crossing with a prescribed sign, whatever the current flows
  void cross_signed(int pos, int s) {
    bool same = ends.at(pos).down == ends.at(pos + 1).down;
    cross(pos, same ? (s > 0) : (s < 0));
  }

  void cup(int pos, std::pair<int, int> hint, bool left_down) {
    EdgeId l = a.fresh(hint), r = a.fresh(hint);
    a.fuse(l, r);  // one edge over the local maximum
    ends.insert(ends.begin() + pos, {End{l, left_down}, End{l, !left_down}});
  }

  void cap(int pos) {
    End x = ends.at(pos), y = ends.at(pos + 1);
    if (x.down == y.down) throw InputError("weave: cap on coherent flows");
    a.fuse(x.e, y.e);
    ends.erase(ends.begin() + pos, ends.begin() + pos + 2);
  }
};

// Doubling-pattern tile between an antiparallel pair of sheet edges.  After
// `half_twists` twist crossings, a bight of the continuation pokes up
// between the sheets and the descending sheet threads across it with
// crossing signs (sign1, sign2), then turns back into the ascending sheet.
// Equal signs hook the bight (a clasp); opposite signs let it slip.
// Returns the bight's outgoing ends {down, up}.
std::array<EdgeId, 2> pattern_tile(Assembly& a, EdgeId down_edge, EdgeId up_edge, bool down_on_left,
                                   int half_twists, int sign1, int sign2, int base_sign) {
  Weaver w{a, {}};
  if (down_on_left)
    w.ends = {{down_edge, true}, {up_edge, false}};
  else
    w.ends = {{up_edge, false}, {down_edge, true}};
  // half twists of the sheet pair, all of sign(half_twists)
  for (int t = 0; t < std::abs(half_twists); ++t) w.cross_signed(0, half_twists > 0 ? +1 : -1);
  int down_pos = w.ends[0].down ? 0 : 1;
  if (down_pos == 0) {
    w.cup(1, a.comp_hint.at(down_edge), /*left_down=*/true);  // [D, c v, d ^, U]
    if (base_sign) w.cross_signed(1, base_sign);              // close the eye
    w.cross_signed(0, sign1);                                 // D x near leg
    w.cross_signed(1, sign2);                                 // D x far leg
    w.cap(2);                                                 // D turns into U
    bool first_down = w.ends[0].down;
    return {first_down ? w.ends[0].e : w.ends[1].e, first_down ? w.ends[1].e : w.ends[0].e};
  }
  w.cup(1, a.comp_hint.at(down_edge), /*left_down=*/false);  // [U, d ^, c v, D]
  if (base_sign) w.cross_signed(1, base_sign);
  w.cross_signed(2, sign1);                                  // near leg x D
  w.cross_signed(1, sign2);                                  // far leg x D
  w.cap(0);                                                  // U takes the turned D
  bool first_down = w.ends[0].down;
  return {first_down ? w.ends[0].e : w.ends[1].e, first_down ? w.ends[1].e : w.ends[0].e};
}

// Blackboard-double a component and expose the pattern site: the sheet pair
// (ae descending, be ascending) and the stubs (a2, b2) continuing them.
struct SheetSite {
  Assembly assembly;
  EdgeId ae, be, a2, b2;
};

SheetSite prepare_sheets(const LinkDiagram& d, int comp) {
  CableResult r = blackboard_cable(d, comp, 2);
  int w = writhe(d, comp);
  std::vector<EdgeId> site = r.site;
  if (w != 0) {
    size_t braid_start = r.assembly.xs.size();
    std::vector<EdgeId> page(site.rbegin(), site.rend());
    std::vector<EdgeId> outs_page =
        insert_parallel_braid(r.assembly, page, full_twist_word(2, std::abs(w), w > 0 ? -1 : +1));
    std::vector<EdgeId> outs(outs_page.rbegin(), outs_page.rend());
    rewire_after_braid(r.assembly, braid_start, site, outs);
    site = outs;
  }
  std::vector<EdgeId> marks = site;
  LinkDiagram cabled = r.assembly.finish_tracking(marks);

  // orientation of the second copy reverses so the pattern winds to zero
  LinkDiagram reversed = reverse_component(cabled, comp + 1);

  SheetSite s{import_diagram(reversed), marks[0], marks[1], -1, -1};
  Assembly& a = s.assembly;
  s.a2 = a.fresh(a.comp_hint.at(s.ae));
  {
    bool done = false;
    for (auto& x : a.xs) {
      if (!done && x.u_in == s.ae) {
        x.u_in = s.a2;
        done = true;
      } else if (!done && x.o_in == s.ae) {
        x.o_in = s.a2;
        done = true;
      }
    }
    if (!done) throw InputError("doubling: lost track of the pattern site");
  }
  s.b2 = a.fresh(a.comp_hint.at(s.be));
  {
    bool done = false;
    for (auto& x : a.xs) {
      if (!done && x.u_out == s.be) {
        x.u_out = s.b2;
        done = true;
      } else if (!done && x.o_out == s.be) {
        x.o_out = s.b2;
        done = true;
      }
    }
    if (!done) throw InputError("doubling: lost track of the pattern site");
  }
  return s;
}

}  // namespace

LinkDiagram whitehead_double(const LinkDiagram& d, int comp, int clasp_sign, int half_twists) {
  require_valid(d, "whitehead_double");
  if (comp < 0 || comp >= d.component_count()) throw InputError("whitehead_double: invalid component");
  if (clasp_sign != 1 && clasp_sign != -1) throw InputError("whitehead_double: clasp sign must be +-1");

  bool free_loop = true;
  {
    DiagramIndex ix(d);
    for (EdgeId e : d.components[comp].cycle)
      if (!ix.edge(e).free_loop) free_loop = false;
  }

  if (free_loop) {
    // doubled unknot with no crossings: the pattern circle on its own
    Assembly a = import_diagram(d);
    a.labels[{comp, 0}] = d.components[comp].label;
    EdgeId old = d.components[comp].cycle.front();
    a.comp_hint.erase(old);  // replaced by the pattern circle
    EdgeId t1 = a.fresh({comp, 0});  // descending sheet
    EdgeId t2 = a.fresh({comp, 0});  // ascending sheet
    auto hooks = pattern_tile(a, t1, t2, /*down_on_left=*/false, half_twists, clasp_sign, clasp_sign, 0);
    a.fuse(t1, hooks[0]);  // the bight wraps around into the sheets
    a.fuse(t2, hooks[1]);
    return a.finish();
  }

  // the pattern tile: ae descends on the page right of be (pushoff order
  // runs right to left); the bight ends splice into the bottom stubs
  SheetSite s = prepare_sheets(d, comp);
  auto hooks = pattern_tile(s.assembly, s.ae, s.be, /*down_on_left=*/false, half_twists, clasp_sign,
                            clasp_sign, 0);
  s.assembly.fuse(s.a2, hooks[0]);
  s.assembly.fuse(s.b2, hooks[1]);
  return s.assembly.finish();
}

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------
namespace {

LinkDiagram unlink_diagram(int m) {
  if (m < 1) throw InputError("unlink: need m >= 1");
  LinkDiagram d;
  d.components.resize(m);
  for (int i = 0; i < m; ++i) d.components[i].cycle = {i};
  return d;
}

// One chain stage past the first: the current descender crosses a fresh
// bight and turns up into that bight's ascending side; the bight's
// descending side becomes the next descender.
EdgeId chain_stage(Assembly& a, EdgeId descender, int half_twists, int sign1, int sign2,
                   int base_sign) {
  Weaver w{a, {}};
  w.ends = {{descender, true}};
  w.cup(1, a.comp_hint.at(descender), /*left_down=*/true);  // [X v, c v, d ^]
  // half twists of the bight pair (the stage's disk)
  for (int t = 0; t < std::abs(half_twists); ++t) w.cross_signed(1, half_twists > 0 ? +1 : -1);
  if (base_sign) w.cross_signed(1, base_sign);  // close the eye
  w.cross_signed(0, sign1);  // X x near leg
  w.cross_signed(1, sign2);  // X x far leg
  // X turns up into whichever remaining end ascends
  if (w.ends[1].down != w.ends[2].down)
    w.cap(1);
  else
    w.cap(0);
  if (!w.ends[0].down) throw InputError("chain stage: descender lost its flow");
  return w.ends[0].e;        // the next descender
}

// k-stage chain through the ring of a Hopf link: the doubled sheet threads
// a nested zigzag of bights, each slipping across the next, the innermost
// hooked by the rightmost clasp.  Undoing that clasp unravels the chain
// stage by stage.
}  // namespace

// k-stage chain threading the ring: the descending sheet and the legs of
// the first k-1 bights all pass through the ring; each descender slips
// across the next bight and turns up into it, and the innermost descender
// hooks a final local bight with the rightmost clasp.  Undoing that clasp
// lets every bight retract in turn.
LinkDiagram milnor_chain_signed(int k, const std::vector<int>& half_twists, int clasp_sign,
                                int clasp_extra_half_twists, std::array<int, 2> slip) {
  if (k < 1) throw InputError("milnor family: need k >= 1");
  MorseBuilder b;
  b.cup(0, 0, /*left_down=*/false);  // [wL ^, A v]
  b.cup(2, 0, /*left_down=*/false);  // [wL, A, Z ^, wR v]
  for (int j = k - 1; j >= 1; --j) b.cup(2, 0, /*left_down=*/true);
  // ends: [wL, A, c_1 v, d_1 ^, ..., c_{k-1}, d_{k-1}, Z, wR]
  int inner = 2 * k;  // strands the ring encircles
  b.cup(1, 1, /*left_down=*/true);  // ring ends ra v, rb ^
  for (int t = 0; t < inner; ++t) b.cross(2 + t, /*right_over=*/false);  // top arc over
  for (int t = 0; t < inner; ++t) b.cross(1 + t, /*right_over=*/true);   // bottom arc under
  b.cap(inner + 1);

  auto cross_signed = [&](int pos, int s) {
    bool same = b.end_flows_down(pos) == b.end_flows_down(pos + 1);
    b.cross(pos, same ? (s > 0) : (s < 0));
  };
  auto stage_twists = [&](int j) {
    int h = (j - 1) < (int)half_twists.size() ? half_twists[j - 1] : 0;
    if (j == k) h += clasp_extra_half_twists;
    return h;
  };
  // stages: the descender at position 1 crosses the bight at (2,3) and
  // turns up into its ascending leg
  for (int j = 1; j <= k; ++j) {
    if (j == k) b.cup(2, 0, /*left_down=*/true);  // the clasp bight is local
    int h = stage_twists(j);
    for (int t = 0; t < std::abs(h); ++t) cross_signed(2, h > 0 ? +1 : -1);
    int s1 = (j == k) ? clasp_sign : slip[0];
    int s2 = (j == k) ? clasp_sign : slip[1];
    cross_signed(1, s1);
    cross_signed(2, s2);
    b.cap(2);  // descender turns up into the bight
  }
  b.cap(1);  // the last descender turns up into Z
  b.cap(0);  // wraps close around the outside
  return b.finish({"chain", "ring"});
}

namespace {

LinkDiagram milnor_chain(int k, const std::vector<int>& half_twists, int clasp_sign,
                         int clasp_extra_half_twists) {
  return milnor_chain_signed(k, half_twists, clasp_sign, clasp_extra_half_twists, {+1, -1});
}

}  // namespace

std::optional<FamilySpec> FamilySpec::parse(const std::string& family, int k,
                                            const std::vector<int>& twists,
                                            const std::vector<int>& clasps) {
  FamilySpec s;
  s.k = k;
  s.twists = twists;
  s.clasp_signs = clasps;
  if (family == "unlink")
    s.family = Family::Unlink;
  else if (family == "hopf")
    s.family = Family::Hopf;
  else if (family == "borromean")
    s.family = Family::Borromean;
  else if (family == "milnor")
    s.family = Family::Milnor;
  else if (family == "whitehead_iter")
    s.family = Family::WhiteheadIter;
  else
    return std::nullopt;
  return s;
}

std::string FamilySpec::str() const {
  std::ostringstream os;
  switch (family) {
    case Family::Unlink: os << "unlink"; break;
    case Family::Hopf: os << "hopf"; break;
    case Family::Borromean: os << "borromean"; break;
    case Family::Milnor: os << "milnor"; break;
    case Family::WhiteheadIter: os << "whitehead_iter"; break;
  }
  os << " k=" << k;
  if (!twists.empty()) {
    os << " twists=";
    for (size_t i = 0; i < twists.size(); ++i) os << (i ? "," : "") << twists[i];
  }
  return os.str();
}

LinkDiagram generate(const FamilySpec& spec) {
  auto clasp_at = [&](int stage) {
    if (stage < (int)spec.clasp_signs.size()) return spec.clasp_signs[stage];
    return -1;  // left-handed by default
  };
  switch (spec.family) {
    case Family::Unlink:
      return unlink_diagram(std::max(1, spec.k));
    case Family::Hopf: {
      int s = spec.clasp_signs.empty() ? +1 : spec.clasp_signs[0];
      return braid_closure(2, {s > 0 ? 1 : -1, s > 0 ? 1 : -1});
    }
    case Family::Borromean:
      return braid_closure(3, {1, -2, 1, -2, 1, -2});
    case Family::Milnor: {
      if ((int)spec.twists.size() > spec.k)
        throw InputError("milnor family: twists vector longer than stage count");
      return milnor_chain(spec.k, spec.twists, clasp_at(spec.k - 1), 0);
    }
    case Family::WhiteheadIter: {
      if ((int)spec.twists.size() > std::max(spec.k, 1))
        throw InputError("whitehead family: twists vector longer than stage count");
      LinkDiagram d = braid_closure(2, {1, 1});
      for (int j = 0; j < spec.k; ++j) {
        int h = j < (int)spec.twists.size() ? spec.twists[j] : 0;
        d = whitehead_double(d, 0, clasp_at(j), h);
      }
      return d;
    }
  }
  throw InputError("generate: unsupported family");
}

std::vector<LinkDiagram> clasp_twist_family(int k, const std::vector<int>& t_range) {
  if (k < 1) throw InputError("clasp_twist_family: need k >= 1");
  std::vector<LinkDiagram> out;
  std::vector<int> half_twists(k, 1);  // one half-twist along each disk
  for (int t : t_range) out.push_back(milnor_chain(k, half_twists, -1, 2 * t));
  return out;
}

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](const std::string& name, LinkDiagram d) { out.push_back({name, std::move(d)}); };
  add("unknot", braid_closure(1, {}));
  add("unlink2", unlink_diagram(2));
  add("unlink3", unlink_diagram(3));
  add("hopf+", braid_closure(2, {1, 1}));
  add("hopf-", braid_closure(2, {-1, -1}));
  add("trefoil", braid_closure(2, {1, 1, 1}));
  add("figure8", braid_closure(3, {1, -2, 1, -2}));
  add("borromean", braid_closure(3, {1, -2, 1, -2, 1, -2}));
  FamilySpec w1{Family::WhiteheadIter, 1, {}, {}};
  add("W1", generate(w1));
  FamilySpec w2{Family::WhiteheadIter, 2, {}, {}};
  add("W2", generate(w2));
  for (int k = 1; k <= 3; ++k) {
    FamilySpec mk{Family::Milnor, k, {}, {}};
    add("M" + std::to_string(k), generate(mk));
  }
  add("M1~t1", clasp_twist_family(1, {1}).front());
  add("M2~t1", clasp_twist_family(2, {1}).front());
  return out;
}

}  // namespace linkinv
