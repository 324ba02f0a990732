#include "linkinv/builder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace linkinv {

int MorseBuilder::find(int s) {
  while (uf_[s] != s) s = uf_[s] = uf_[uf_[s]];
  return s;
}

void MorseBuilder::unite(int a, int b) { uf_[find(a)] = find(b); }

void MorseBuilder::cup(int pos, int comp_tag, bool left_down) {
  if (pos < 0 || pos > (int)ends_.size()) throw std::logic_error("cup: bad position");
  int l = new_seg(), r = new_seg();
  uf_.push_back(l);
  uf_.push_back(r);
  seg_comp_.push_back(comp_tag);
  seg_comp_.push_back(comp_tag);
  unite(l, r);  // joined over the local maximum
  ends_.insert(ends_.begin() + pos, {{l, left_down, comp_tag}, {r, !left_down, comp_tag}});
}

void MorseBuilder::cap(int pos) {
  if (pos < 0 || pos + 1 >= (int)ends_.size()) throw std::logic_error("cap: bad position");
  End a = ends_[pos], b = ends_[pos + 1];
  if (a.down == b.down) throw std::logic_error("cap: incoherent orientations");
  if (a.comp != b.comp) throw std::logic_error("cap: joining different component tags");
  unite(a.seg, b.seg);
  ends_.erase(ends_.begin() + pos, ends_.begin() + pos + 2);
}

void MorseBuilder::cross(int pos, bool right_over) {
  if (pos < 0 || pos + 1 >= (int)ends_.size()) throw std::logic_error("cross: bad position");
  End l = ends_[pos], r = ends_[pos + 1];
  int bl = new_seg(), br = new_seg();
  uf_.push_back(bl);
  uf_.push_back(br);
  seg_comp_.push_back(r.comp);  // bottom-left continues the right strand
  seg_comp_.push_back(l.comp);
  // ends around the crossing: TL = l.seg, TR = r.seg, BL = bl, BR = br.
  // Flow: left strand TL->BR when l.down, else BR->TL; right strand TR->BL
  // when r.down, else BL->TR.
  enum { TL, TR, BL, BR };
  int seg_at[4] = {l.seg, r.seg, bl, br};
  int under_in;
  if (right_over)
    under_in = l.down ? TL : BR;
  else
    under_in = r.down ? TR : BL;
  // ccw order of corners in the plane (y up): TR -> TL -> BL -> BR
  static const int ccw[4] = {TR, TL, BL, BR};
  int start = 0;
  while (ccw[start] != under_in) ++start;
  SegCrossing x;
  for (int k = 0; k < 4; ++k) x.pd[k] = seg_at[ccw[(start + k) % 4]];
  // over-strand incoming corner
  int over_in = right_over ? (r.down ? TR : BL) : (l.down ? TL : BR);
  int over_slot = 0;
  for (int k = 0; k < 4; ++k)
    if (ccw[(start + k) % 4] == over_in) over_slot = k;
  if (over_slot != 1 && over_slot != 3) throw std::logic_error("cross: internal slot error");
  x.sign = over_slot == 3 ? +1 : -1;
  crossings_.push_back(x);
  ends_[pos] = {bl, r.down, r.comp};
  ends_[pos + 1] = {br, l.down, l.comp};
}

void MorseBuilder::loop(int comp_tag) {
  int s = new_seg();
  uf_.push_back(s);
  seg_comp_.push_back(comp_tag);
}

LinkDiagram MorseBuilder::finish(std::vector<std::string> labels) {
  if (!ends_.empty()) throw std::logic_error("finish: " + std::to_string(ends_.size()) + " open ends");

  // chain extremities per segment class
  struct Ends {
    int head_cross = -1, head_slot = -1;
    int tail_cross = -1, tail_slot = -1;
  };
  std::map<int, Ends> cls;
  for (int c = 0; c < (int)crossings_.size(); ++c) {
    const auto& x = crossings_[c];
    auto in_out = [&](int slot, bool incoming) {
      int rep = find(x.pd[slot]);
      Ends& e = cls[rep];
      if (incoming) {
        if (e.head_cross != -1) throw std::logic_error("finish: segment class with two heads");
        e.head_cross = c;
        e.head_slot = slot;
      } else {
        if (e.tail_cross != -1) throw std::logic_error("finish: segment class with two tails");
        e.tail_cross = c;
        e.tail_slot = slot;
      }
    };
    int over_in_slot = x.sign > 0 ? 3 : 1;
    in_out(0, true);
    in_out(2, false);
    in_out(over_in_slot, true);
    in_out(over_in_slot ^ 2, false);
  }
  for (auto& [rep, e] : cls) {
    if ((e.head_cross == -1) != (e.tail_cross == -1))
      throw std::logic_error("finish: dangling segment class");
  }

  // successor along the flow: exit slot paired with entry slot
  auto succ_rep = [&](int rep) {
    const Ends& e = cls.at(rep);
    const auto& x = crossings_[e.head_cross];
    int out_slot = e.head_slot == 0 ? 2 : (e.head_slot ^ 2);
    return find(x.pd[out_slot]);
  };

  // walk cycles, grouped by component tag
  std::map<int, std::vector<std::vector<int>>> cycles_by_tag;  // tag -> cycles of reps
  std::set<int> seen;
  std::set<int> reps;
  for (int s = 0; s < seg_count_; ++s) reps.insert(find(s));
  for (int rep : reps) {
    if (seen.count(rep)) continue;
    if (!cls.count(rep)) {  // circle that meets no crossing
      cycles_by_tag[seg_comp_[rep]].push_back({rep});
      seen.insert(rep);
      continue;
    }
    std::vector<int> cyc;
    int cur = rep;
    do {
      if (!seen.insert(cur).second) throw std::logic_error("finish: cycle walk revisited a segment");
      cyc.push_back(cur);
      cur = succ_rep(cur);
    } while (cur != rep);
    int start = (int)(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    std::rotate(cyc.begin(), cyc.begin() + start, cyc.end());
    cycles_by_tag[seg_comp_[rep]].push_back(cyc);
  }
  for (auto& [tag, cycs] : cycles_by_tag) {
    if (cycs.size() > 1) throw std::logic_error("finish: component tag " + std::to_string(tag) + " split into " +
                                                std::to_string(cycs.size()) + " curves");
  }

  // renumber edges along traversal, components in tag order
  std::map<int, EdgeId> rename;
  LinkDiagram d;
  int next_edge = 0;
  for (auto& [tag, cycs] : cycles_by_tag) {
    Component comp;
    for (int rep : cycs.front()) {
      rename[rep] = next_edge;
      comp.cycle.push_back(next_edge);
      ++next_edge;
    }
    d.components.push_back(std::move(comp));
  }
  for (int c = 0; c < (int)crossings_.size(); ++c) {
    Crossing x;
    x.id = c;
    for (int k = 0; k < 4; ++k) x.pd[k] = rename.at(find(crossings_[c].pd[k]));
    x.sign = crossings_[c].sign;
    d.crossings.push_back(x);
  }
  for (size_t i = 0; i < labels.size() && i < d.components.size(); ++i) d.components[i].label = labels[i];
  require_valid(d, "MorseBuilder::finish");
  return d;
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::logic_error("braid_closure: need at least one strand");
  // permutation of the word, top to bottom
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : word) {
    int i = std::abs(letter);
    if (i < 1 || i >= strands) throw std::logic_error("braid_closure: letter out of range");
    std::swap(perm[i - 1], perm[i]);
  }
  // component tag per strand = cycle of the permutation, ordered by min strand
  std::vector<int> tag(strands, -1);
  int tags = 0;
  for (int s = 0; s < strands; ++s) {
    if (tag[s] != -1) continue;
    int cur = s;
    while (tag[cur] == -1) {
      tag[cur] = tags;
      cur = perm[cur];
    }
    ++tags;
  }
  MorseBuilder b;
  // nested cups: returns at 0..n-1 (flowing up), braid strands at n..2n-1;
  // braid top position p corresponds to cup n-1-p
  for (int i = 0; i < strands; ++i) b.cup(i, tag[strands - 1 - i], /*left_down=*/false);
  for (int letter : word) {
    int i = std::abs(letter);
    b.cross(strands - 1 + i, /*right_over=*/letter > 0);
  }
  for (int i = strands - 1; i >= 0; --i) b.cap(i);
  return b.finish();
}

}  // namespace linkinv
