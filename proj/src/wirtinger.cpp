#include "linkinv/wirtinger.hpp"

#include "linkinv/types.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace linkinv {

WirtingerPresentation wirtinger(const LinkDiagram& d) {
  require_valid(d, "wirtinger");
  if (!projection_connected(d)) throw InputError("wirtinger: disconnected projection");
  DiagramIndex ix(d);

  // arcs: edges merged across over-passages
  std::map<EdgeId, EdgeId> parent;
  for (EdgeId e : ix.edges()) parent[e] = e;
  std::function<EdgeId(EdgeId)> find = [&](EdgeId a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    auto ov = ix.over_slots(c);
    EdgeId a = find(d.crossings[c].pd[ov[0]]), b = find(d.crossings[c].pd[ov[1]]);
    parent[a] = b;
  }
  std::map<EdgeId, int> arc_of_rep;
  WirtingerPresentation p;
  for (EdgeId e : ix.edges()) {
    EdgeId r = find(e);
    if (!arc_of_rep.count(r)) {
      arc_of_rep[r] = -1;  // placeholder; number below by min edge
    }
  }
  // deterministic arc ids: sort classes by their minimal edge
  std::map<EdgeId, EdgeId> class_min;
  for (EdgeId e : ix.edges()) {
    EdgeId r = find(e);
    auto it = class_min.find(r);
    if (it == class_min.end() || e < it->second) class_min[r] = e;
  }
  std::vector<std::pair<EdgeId, EdgeId>> order(class_min.begin(), class_min.end());
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  for (const auto& [rep, mn] : order) {
    arc_of_rep[rep] = p.arc_count++;
    p.arc_min_edge.push_back(mn);
  }
  auto arc_of = [&](EdgeId e) { return arc_of_rep.at(find(e)); };

  p.arc_component.resize(p.arc_count);
  for (EdgeId e : ix.edges()) p.arc_component[arc_of(e)] = ix.edge(e).component;

  int m = d.component_count();
  p.base_arc.resize(m);
  p.self_writhe.resize(m);
  p.passages.resize(m);
  for (int i = 0; i < m; ++i) {
    EdgeId mn = *std::min_element(d.components[i].cycle.begin(), d.components[i].cycle.end());
    p.base_arc[i] = arc_of(mn);
    p.self_writhe[i] = writhe(d, i);

    // start the traversal at the first edge of the base arc: the member
    // edge leaving an under-passage (tail slot 2), if any
    const auto& cyc = d.components[i].cycle;
    int start_pos = -1;
    bool has_under = false;
    for (int pos = 0; pos < (int)cyc.size(); ++pos) {
      const EdgeInfo& ei = ix.edge(cyc[pos]);
      if (ei.head.crossing != -1 && ei.head.slot == 0) has_under = true;
      if (arc_of(cyc[pos]) == p.base_arc[i] && ei.tail.crossing != -1 && ei.tail.slot == 2)
        start_pos = pos;
    }
    if (!has_under) continue;  // single closed arc, no passages
    if (start_pos < 0) throw InputError("wirtinger: base arc has no under-exit");
    for (int k = 0; k < (int)cyc.size(); ++k) {
      EdgeId e = cyc[(start_pos + k) % cyc.size()];
      const EdgeInfo& ei = ix.edge(e);
      if (ei.head.crossing == -1 || ei.head.slot != 0) continue;
      int c = ei.head.crossing;
      auto ov = ix.over_slots(c);
      UnderPassage up;
      up.over_arc = arc_of(d.crossings[c].pd[ov[0]]);
      up.eps = d.crossings[c].sign;
      up.crossing = c;
      up.next_arc = arc_of(d.crossings[c].pd[2]);
      p.passages[i].push_back(up);
    }
    if (!p.passages[i].empty() && p.passages[i].back().next_arc != p.base_arc[i])
      throw InputError("wirtinger: traversal did not close at the base arc");
  }

  for (int c = 0; c < (int)d.crossings.size(); ++c) {
    auto ov = ix.over_slots(c);
    WirtingerRelation r;
    r.in_arc = arc_of(d.crossings[c].pd[0]);
    r.out_arc = arc_of(d.crossings[c].pd[2]);
    r.over_arc = arc_of(d.crossings[c].pd[ov[0]]);
    r.eps = d.crossings[c].sign;
    p.relations.push_back(r);
  }
  return p;
}

FreeWord relator(const WirtingerRelation& r) {
  FreeWord out = FreeWord::generator(r.out_arc, -1);
  out = out * FreeWord::generator(r.over_arc, -r.eps);
  out = out * FreeWord::generator(r.in_arc, 1);
  out = out * FreeWord::generator(r.over_arc, r.eps);
  return out;
}

FreeWord longitude_word(const WirtingerPresentation& p, int comp) {
  if (comp < 0 || comp >= (int)p.passages.size()) throw InputError("longitude: invalid component");
  FreeWord out;
  for (const UnderPassage& up : p.passages[comp]) out = out * FreeWord::generator(up.over_arc, up.eps);
  out = out * FreeWord::generator(p.base_arc[comp]).pow(-p.self_writhe[comp]);
  return out.reduced();
}

int abelianized_rank(const WirtingerPresentation& p) {
  // rows: relations abelianized (over-generator cancels): e_out - e_in
  std::vector<std::vector<Int>> rows;
  for (const auto& r : p.relations) {
    if (r.out_arc == r.in_arc) continue;
    std::vector<Int> row(p.arc_count, 0);
    row[r.out_arc] = 1;
    row[r.in_arc] = -1;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  int cols = p.arc_count;
  size_t rix = 0;
  for (int col = 0; col < cols && rix < rows.size(); ++col) {
    size_t piv = rix;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rix], rows[piv]);
    for (size_t rr = rix + 1; rr < rows.size(); ++rr) {
      if (rows[rr][col] == 0) continue;
      Int a = rows[rix][col], b = rows[rr][col];
      for (int cc = col; cc < cols; ++cc) rows[rr][cc] = rows[rr][cc] * a - rows[rix][cc] * b;
    }
    ++rix;
    ++rank;
  }
  return rank;
}

}  // namespace linkinv
