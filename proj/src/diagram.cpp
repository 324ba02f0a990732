#include "linkinv/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace linkinv {

std::string ValidationReport::joined() const {
  std::ostringstream os;
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

namespace {

struct RawIndex {
  // edge -> (component, position) and occurrence slots
  std::map<EdgeId, std::pair<int, int>> cyc_pos;
  std::map<EdgeId, std::vector<std::pair<int, int>>> occ;  // (crossing, slot)
  bool built = false;
};

RawIndex scan(const LinkDiagram& d, ValidationReport* rep) {
  RawIndex ix;
  if (d.components.empty() && rep)
    rep->violations.push_back("component count must be >= 1");
  for (int ci = 0; ci < (int)d.components.size(); ++ci) {
    const auto& cyc = d.components[ci].cycle;
    if (cyc.empty()) {
      if (rep) rep->violations.push_back("component " + std::to_string(ci) + " has empty arc cycle");
      continue;
    }
    for (int p = 0; p < (int)cyc.size(); ++p) {
      auto [it, fresh] = ix.cyc_pos.insert({cyc[p], {ci, p}});
      if (!fresh && rep)
        rep->violations.push_back("edge " + std::to_string(cyc[p]) + " appears in more than one cycle position");
    }
  }
  std::set<int> ids;
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    const Crossing& x = d.crossings[c];
    if (!ids.insert(x.id).second && rep)
      rep->violations.push_back("duplicate crossing id " + std::to_string(x.id));
    if (x.sign != 1 && x.sign != -1 && rep)
      rep->violations.push_back("crossing " + std::to_string(x.id) + " has sign outside {+1,-1}");
    for (int s = 0; s < 4; ++s) {
      ix.occ[x.pd[s]].push_back({c, s});
      if (!ix.cyc_pos.count(x.pd[s]) && rep)
        rep->violations.push_back("crossing " + std::to_string(x.id) + " references dangling edge " +
                                  std::to_string(x.pd[s]));
    }
  }
  // closed 1-manifold condition: each edge twice in crossings, except a
  // free loop (single-edge crossingless component) which appears 0 times
  for (const auto& [e, cp] : ix.cyc_pos) {
    auto it = ix.occ.find(e);
    size_t n = it == ix.occ.end() ? 0 : it->second.size();
    if (n == 2) continue;
    bool free_loop = (n == 0) && d.components[cp.first].cycle.size() == 1;
    if (!free_loop && rep)
      rep->violations.push_back("edge multiplicity: edge " + std::to_string(e) + " appears " +
                                std::to_string(n) + " times in crossings (expected 2)");
  }
  ix.built = true;
  return ix;
}

EdgeId succ_of(const LinkDiagram& d, const RawIndex& ix, EdgeId e) {
  auto [ci, p] = ix.cyc_pos.at(e);
  const auto& cyc = d.components[ci].cycle;
  return cyc[(p + 1) % cyc.size()];
}

// Resolve the over-strand direction of crossing c.  Returns {in_slot,out_slot}
// over slots {1,3}; {-1,-1} when contradictory.
std::array<int, 2> resolve_over(const LinkDiagram& d, const RawIndex& ix, int c) {
  const auto& pd = d.crossings[c].pd;
  if (pd[1] == pd[3]) return {-1, -1};
  // loop patterns pin the direction via head/tail uniqueness
  if (pd[0] == pd[1]) return {3, 1};
  if (pd[0] == pd[3]) return {1, 3};
  if (pd[2] == pd[1]) return {1, 3};
  if (pd[2] == pd[3]) return {3, 1};
  bool fwd31 = succ_of(d, ix, pd[3]) == pd[1];
  bool fwd13 = succ_of(d, ix, pd[1]) == pd[3];
  if (fwd31 && fwd13) {
    // two-edge component passing over twice; stored sign breaks the tie
    return d.crossings[c].sign >= 0 ? std::array<int, 2>{3, 1} : std::array<int, 2>{1, 3};
  }
  if (fwd31) return {3, 1};
  if (fwd13) return {1, 3};
  return {-1, -1};
}

int sign_from_over(const std::array<int, 2>& over) {
  return over[0] == 3 ? +1 : -1;
}

}  // namespace

DiagramIndex::DiagramIndex(const LinkDiagram& d) : d_(&d) {
  ValidationReport rep;
  RawIndex ix = scan(d, &rep);
  if (!rep.ok()) throw InputError("ill-formed diagram: " + rep.joined());
  over_.resize(d.crossings.size());
  std::map<EdgeId, EdgeInfo> info;
  for (const auto& [e, cp] : ix.cyc_pos) {
    EdgeInfo ei;
    ei.component = cp.first;
    ei.pos = cp.second;
    ei.free_loop = !ix.occ.count(e);
    info[e] = ei;
  }
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    auto ov = resolve_over(d, ix, c);
    if (ov[0] < 0) throw InputError("orientation contradiction at crossing " + std::to_string(d.crossings[c].id));
    over_[c] = ov;
    const auto& pd = d.crossings[c].pd;
    auto set_end = [&](EdgeId e, bool incoming, int slot) {
      EdgeEnd& end = incoming ? info[e].head : info[e].tail;
      if (end.crossing != -1)
        throw InputError("orientation contradiction: edge " + std::to_string(e) +
                         " has two " + (incoming ? std::string("heads") : std::string("tails")));
      end = {c, slot};
    };
    set_end(pd[0], true, 0);
    set_end(pd[2], false, 2);
    set_end(pd[ov[0]], true, ov[0]);
    set_end(pd[ov[1]], false, ov[1]);
  }
  for (auto& [e, ei] : info) {
    if (ei.free_loop) continue;
    if (ei.head.crossing == -1 || ei.tail.crossing == -1)
      throw InputError("orientation contradiction: edge " + std::to_string(e) + " lacks a head or tail");
  }
  // cycles must agree with the crossing-level successor relation
  for (const auto& [e, ei] : info) {
    if (ei.free_loop) continue;
    const Crossing& x = d.crossings[ei.head.crossing];
    int out_slot = ei.head.slot == 0 ? 2 : over_[ei.head.crossing][1];
    EdgeId expect = x.pd[out_slot];
    if (succ_of(d, ix, e) != expect)
      throw InputError("arc cycle does not traverse crossing " + std::to_string(x.id) +
                       " consistently at edge " + std::to_string(e));
  }
  info_.assign(info.begin(), info.end());
}

const EdgeInfo& DiagramIndex::edge(EdgeId e) const {
  auto it = std::lower_bound(info_.begin(), info_.end(), e,
                             [](const auto& p, EdgeId v) { return p.first < v; });
  if (it == info_.end() || it->first != e) throw InputError("unknown edge " + std::to_string(e));
  return it->second;
}

bool DiagramIndex::has_edge(EdgeId e) const {
  auto it = std::lower_bound(info_.begin(), info_.end(), e,
                             [](const auto& p, EdgeId v) { return p.first < v; });
  return it != info_.end() && it->first == e;
}

EdgeId DiagramIndex::succ(EdgeId e) const {
  const EdgeInfo& ei = edge(e);
  const auto& cyc = d_->components[ei.component].cycle;
  return cyc[(ei.pos + 1) % cyc.size()];
}

EdgeId DiagramIndex::pred(EdgeId e) const {
  const EdgeInfo& ei = edge(e);
  const auto& cyc = d_->components[ei.component].cycle;
  return cyc[(ei.pos + cyc.size() - 1) % cyc.size()];
}

std::array<int, 2> DiagramIndex::over_slots(int c) const { return over_[c]; }

int DiagramIndex::computed_sign(int c) const { return sign_from_over(over_[c]); }

bool DiagramIndex::slot_is_incoming(int c, int s) const {
  if (s == 0) return true;
  if (s == 2) return false;
  return over_[c][0] == s;
}

std::vector<EdgeId> DiagramIndex::edges() const {
  std::vector<EdgeId> out;
  out.reserve(info_.size());
  for (const auto& p : info_) out.push_back(p.first);
  return out;
}

ValidationReport validate(const LinkDiagram& d) {
  ValidationReport rep;
  RawIndex ix = scan(d, &rep);
  if (!rep.ok()) return rep;
  // direction resolution + sign consistency
  bool directions_ok = true;
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    auto ov = resolve_over(d, ix, c);
    if (ov[0] < 0) {
      rep.violations.push_back("orientation contradiction at crossing " + std::to_string(d.crossings[c].id));
      directions_ok = false;
      continue;
    }
    if (sign_from_over(ov) != d.crossings[c].sign)
      rep.violations.push_back("stored sign disagrees with orientations at crossing " +
                               std::to_string(d.crossings[c].id));
  }
  if (!directions_ok) return rep;
  try {
    DiagramIndex full(d);
    (void)full;
  } catch (const InputError& e) {
    rep.violations.push_back(e.what());
    return rep;
  }
  // planarity: Euler characteristic 2 on every connected piece
  try {
    faces(d);
  } catch (const InputError& e) {
    rep.violations.push_back(e.what());
  }
  return rep;
}

void require_valid(const LinkDiagram& d, const std::string& where) {
  ValidationReport rep = validate(d);
  if (!rep.ok()) throw InputError(where + ": " + rep.joined());
}

int writhe(const LinkDiagram& d, int comp) {
  DiagramIndex ix(d);
  int w = 0;
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    const auto& pd = d.crossings[c].pd;
    int under_comp = ix.edge(pd[0]).component;
    int over_comp = ix.edge(pd[ix.over_slots(c)[0]]).component;
    if (under_comp == comp && over_comp == comp) w += d.crossings[c].sign;
  }
  return w;
}

std::vector<std::vector<Int>> linking_matrix(const LinkDiagram& d) {
  DiagramIndex ix(d);
  int m = d.component_count();
  std::vector<std::vector<Int>> lk(m, std::vector<Int>(m, 0));
  std::vector<std::vector<int>> cross_sum(m, std::vector<int>(m, 0));
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    const auto& pd = d.crossings[c].pd;
    int u = ix.edge(pd[0]).component;
    int o = ix.edge(pd[ix.over_slots(c)[0]]).component;
    cross_sum[u][o] += d.crossings[c].sign;
    if (u != o) cross_sum[o][u] += d.crossings[c].sign;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j)
        lk[i][j] = cross_sum[i][i];
      else
        lk[i][j] = cross_sum[i][j] / 2;  // half-sum of signs
    }
  return lk;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (auto& x : out.crossings) {
    x.pd = {x.pd[0], x.pd[3], x.pd[2], x.pd[1]};
    x.sign = -x.sign;
  }
  return out;
}

LinkDiagram reverse_component(const LinkDiagram& d, int comp) {
  DiagramIndex ix(d);
  LinkDiagram out = d;
  auto& cyc = out.components[comp].cycle;
  std::reverse(cyc.begin(), cyc.end());
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    const auto& pd = d.crossings[c].pd;
    int u = ix.edge(pd[0]).component;
    int o = ix.edge(pd[ix.over_slots(c)[0]]).component;
    bool flip_under = (u == comp);
    bool flip_over = (o == comp);
    if (flip_under)
      out.crossings[c].pd = {pd[2], pd[3], pd[0], pd[1]};
    if (flip_under != flip_over) out.crossings[c].sign = -out.crossings[c].sign;
  }
  return out;
}

std::vector<int> projection_pieces(const LinkDiagram& d) {
  DiagramIndex ix(d);
  int m = d.component_count();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    const auto& pd = d.crossings[c].pd;
    int u = ix.edge(pd[0]).component;
    int o = ix.edge(pd[ix.over_slots(c)[0]]).component;
    parent[find(u)] = find(o);
  }
  std::vector<int> piece(m);
  std::map<int, int> order;
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    auto [it, fresh] = order.insert({r, (int)order.size()});
    piece[i] = it->second;
  }
  return piece;
}

bool projection_connected(const LinkDiagram& d) {
  auto p = projection_pieces(d);
  return std::all_of(p.begin(), p.end(), [](int x) { return x == 0; });
}

std::vector<Face> faces(const LinkDiagram& d) {
  DiagramIndex ix(d);
  // darts: (edge, dir); dir +1 runs tail->head
  struct Dart {
    EdgeId e;
    int dir;
    bool operator<(const Dart& o) const { return e != o.e ? e < o.e : dir < o.dir; }
  };
  std::set<Dart> todo;
  for (EdgeId e : ix.edges()) {
    if (ix.edge(e).free_loop) continue;
    todo.insert({e, +1});
    todo.insert({e, -1});
  }
  std::vector<Face> out;
  while (!todo.empty()) {
    Dart start = *todo.begin();
    Face f;
    Dart cur = start;
    do {
      todo.erase(cur);
      f.boundary.push_back({cur.e, cur.dir});
      const EdgeInfo& ei = ix.edge(cur.e);
      EdgeEnd arrive = cur.dir > 0 ? ei.head : ei.tail;
      int c = arrive.crossing;
      int next_slot = (arrive.slot + 1) % 4;
      EdgeId f_edge = d.crossings[c].pd[next_slot];
      int dir = ix.slot_is_incoming(c, next_slot) ? -1 : +1;
      cur = {f_edge, dir};
      if (f.boundary.size() > 8 * d.crossings.size() + 8)
        throw InputError("face traversal failed to close (corrupt rotation data)");
    } while (!(cur.e == start.e && cur.dir == start.dir));
    out.push_back(std::move(f));
  }
  // Euler characteristic per connected piece of the projection
  auto piece = projection_pieces(d);
  std::map<int, std::array<long, 3>> vef;  // piece -> V,E,F
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    int p = piece[ix.edge(d.crossings[c].pd[0]).component];
    vef[p][0] += 1;
    vef[p][1] += 2;  // 4 ends / 2
  }
  for (const auto& f : out) {
    int p = piece[ix.edge(f.boundary.front().edge).component];
    vef[p][2] += 1;
  }
  for (const auto& [p, t] : vef) {
    if (t[0] - t[1] + t[2] != 2)
      throw InputError("projection piece " + std::to_string(p) +
                       " is not planar (Euler characteristic " + std::to_string(t[0] - t[1] + t[2]) + ")");
  }
  return out;
}

namespace {

// Relabel edges by traversal order given start offsets, return flattened
// crossing table for lexicographic comparison.
struct RelabelResult {
  std::vector<std::array<int, 6>> table;  // pd(4), sign, original index
  std::map<EdgeId, int> map;
};

RelabelResult relabel_with_offsets(const LinkDiagram& d, const std::vector<int>& off) {
  RelabelResult r;
  int next = 0;
  for (int ci = 0; ci < (int)d.components.size(); ++ci) {
    const auto& cyc = d.components[ci].cycle;
    for (int p = 0; p < (int)cyc.size(); ++p)
      r.map[cyc[(off[ci] + p) % cyc.size()]] = next++;
  }
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    r.table.push_back({r.map.at(x.pd[0]), r.map.at(x.pd[1]), r.map.at(x.pd[2]), r.map.at(x.pd[3]), x.sign, c});
  }
  std::sort(r.table.begin(), r.table.end());
  return r;
}

std::vector<std::array<int, 5>> strip(const RelabelResult& r) {
  std::vector<std::array<int, 5>> t;
  for (const auto& row : r.table) t.push_back({row[0], row[1], row[2], row[3], row[4]});
  return t;
}

}  // namespace

LinkDiagram canonical_form(const LinkDiagram& d) {
  require_valid(d, "canonical_form");
  long combos = 1;
  for (const auto& c : d.components) combos *= std::max<long>(1, (long)c.cycle.size());
  std::vector<int> best(d.components.size(), 0);
  if (combos <= (1 << 20)) {
    std::vector<int> off(d.components.size(), 0);
    std::optional<std::vector<std::array<int, 5>>> best_tab;
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == off.size()) {
        auto t = strip(relabel_with_offsets(d, off));
        if (!best_tab || t < *best_tab) {
          best_tab = t;
          best = off;
        }
        return;
      }
      for (int o = 0; o < (int)d.components[i].cycle.size(); ++o) {
        off[i] = o;
        rec(i + 1);
      }
    };
    rec(0);
  } else {
    // greedy fallback for very large diagrams: fix offsets one component at
    // a time, minimizing the partial table
    std::vector<int> off(d.components.size(), 0);
    for (size_t i = 0; i < off.size(); ++i) {
      std::optional<std::vector<std::array<int, 5>>> best_tab;
      int arg = 0;
      for (int o = 0; o < (int)d.components[i].cycle.size(); ++o) {
        off[i] = o;
        auto t = strip(relabel_with_offsets(d, off));
        if (!best_tab || t < *best_tab) {
          best_tab = t;
          arg = o;
        }
      }
      off[i] = arg;
    }
    best = off;
  }
  auto r = relabel_with_offsets(d, best);
  LinkDiagram out;
  out.components.resize(d.components.size());
  for (int ci = 0; ci < (int)d.components.size(); ++ci) {
    out.components[ci].label = d.components[ci].label;
    for (EdgeId e : d.components[ci].cycle) out.components[ci].cycle.push_back(r.map.at(e));
    std::rotate(out.components[ci].cycle.begin(),
                std::min_element(out.components[ci].cycle.begin(), out.components[ci].cycle.end()),
                out.components[ci].cycle.end());
  }
  for (int i = 0; i < (int)r.table.size(); ++i) {
    const auto& row = r.table[i];
    Crossing x;
    x.id = i;
    x.pd = {row[0], row[1], row[2], row[3]};
    x.sign = row[4];
    out.crossings.push_back(x);
  }
  return out;
}

bool equal_up_to_relabeling(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.components.size() != b.components.size()) return false;
  if (a.crossings.size() != b.crossings.size()) return false;
  for (size_t i = 0; i < a.components.size(); ++i)
    if (a.components[i].cycle.size() != b.components[i].cycle.size()) return false;
  auto ca = canonical_form(a);
  auto cb = canonical_form(b);
  if (ca.components.size() != cb.components.size()) return false;
  for (size_t i = 0; i < ca.components.size(); ++i)
    if (ca.components[i].cycle != cb.components[i].cycle) return false;
  for (size_t i = 0; i < ca.crossings.size(); ++i) {
    if (ca.crossings[i].pd != cb.crossings[i].pd) return false;
    if (ca.crossings[i].sign != cb.crossings[i].sign) return false;
  }
  return true;
}

}  // namespace linkinv
