#pragma once

#include "linkinv/diagram.hpp"

#include <vector>

namespace linkinv {

// ---------------------------------------------------------------------------
// Assembles diagrams from Morse events (cups, caps, crossings) read top to
// bottom.  Strand ends are tracked left to right; every end knows its flow
// direction (down = the curve flows toward the bottom of the page) and the
// component tag it belongs to.  Tags become component indices in tag order.
//
// Crossing convention matches diagram.hpp: with both strands flowing down,
// crossing the right strand over the left yields sign +1.
// ---------------------------------------------------------------------------
class MorseBuilder {
 public:
  // Insert a local maximum at position pos (two new adjacent ends).
  // left_down: the left of the two new ends flows downward.
  void cup(int pos, int comp_tag, bool left_down);

  // Join the ends at positions pos and pos+1 by a local minimum.
  void cap(int pos);

  // Cross the strands at positions pos and pos+1.
  void cross(int pos, bool right_over);

  // Crossingless unknot component.
  void loop(int comp_tag);

  int width() const { return static_cast<int>(ends_.size()); }
  int end_component(int pos) const { return ends_.at(pos).comp; }
  bool end_flows_down(int pos) const { return ends_.at(pos).down; }

  // All ends must be capped.  Components are emitted in tag order; edge ids
  // are renumbered along each component traversal.
  LinkDiagram finish(std::vector<std::string> labels = {});

 private:
  struct End {
    int seg;
    bool down;
    int comp;
  };
  struct SegCrossing {
    std::array<int, 4> pd;  // segment ids, ccw from incoming under
    int sign;
  };
  int new_seg() { return seg_count_++; }
  int find(int s);
  void unite(int a, int b);

  std::vector<End> ends_;
  std::vector<SegCrossing> crossings_;
  std::vector<int> uf_;
  int seg_count_ = 0;
  std::vector<int> seg_comp_;
};

// Closure of a braid word on `strands` strands.  Letters are +-i for the
// elementary crossing between strands i and i+1 (1-based); positive letters
// give sign +1 crossings.  Components are ordered by their smallest strand.
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

}  // namespace linkinv
