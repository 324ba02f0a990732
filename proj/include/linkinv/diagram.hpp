#pragma once

#include "linkinv/types.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace linkinv {

// ---------------------------------------------------------------------------
// Oriented link diagrams as signed PD codes.
//
// Convention (documented with a picture in docs/file-formats.md):
// the PD tuple of a crossing lists the four incident edge ends in
// counterclockwise order starting from the incoming under-strand.
//
//        pd[2]
//          ^
//          |
//  pd[3] --+--> pd[1]        under-strand: pd[0] -> pd[2]
//          |                 over-strand:  pd[3] -> pd[1]  (sign +1)
//        pd[0]                             pd[1] -> pd[3]  (sign -1)
//
// Sign +1 means (over direction, under direction) is a positively oriented
// frame of the plane.
// ---------------------------------------------------------------------------

using EdgeId = int;

struct Crossing {
  int id = 0;
  std::array<EdgeId, 4> pd{};  // ccw from incoming under-strand
  int sign = 0;                // +1 or -1
};

struct Component {
  std::vector<EdgeId> cycle;  // edges in traversal order; closed
  std::string label;
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  std::vector<Component> components;

  int component_count() const { return static_cast<int>(components.size()); }
  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string joined() const;
};

// Every invariant below this line works on the indexed view.  Building the
// index resolves edge directions (head = end where the edge runs into a
// crossing) from the component cycles; inconsistencies surface as
// exceptions, so callers validate first.
struct EdgeEnd {
  int crossing = -1;  // index into crossings, -1 = free end (free loop)
  int slot = -1;      // 0..3
};

struct EdgeInfo {
  EdgeEnd tail;       // where the edge leaves a crossing
  EdgeEnd head;       // where the edge enters a crossing
  int component = -1;
  int pos = -1;       // index within the component cycle
  bool free_loop = false;
};

class DiagramIndex {
 public:
  explicit DiagramIndex(const LinkDiagram& d);

  const LinkDiagram& diagram() const { return *d_; }
  const EdgeInfo& edge(EdgeId e) const;
  bool has_edge(EdgeId e) const;
  EdgeId succ(EdgeId e) const;  // next edge along the component
  EdgeId pred(EdgeId e) const;

  // Over-strand direction at crossing c: returns {over_in_slot, over_out_slot}
  // (either {3,1} or {1,3}).
  std::array<int, 2> over_slots(int c) const;
  int computed_sign(int c) const;

  // Edge entering / leaving crossing c at slot s (slot semantics resolved).
  bool slot_is_incoming(int c, int s) const;

  std::vector<EdgeId> edges() const;  // sorted

 private:
  const LinkDiagram* d_;
  std::vector<std::pair<EdgeId, EdgeInfo>> info_;  // sorted by edge id
  std::vector<std::array<int, 2>> over_;           // per crossing
};

// Report-style validation: lists every violated invariant.
ValidationReport validate(const LinkDiagram& d);

// Throws InputError unless validate(d) is clean.
void require_valid(const LinkDiagram& d, const std::string& where);

// Self-writhe of component i (sum of signs of its self-crossings).
int writhe(const LinkDiagram& d, int comp);

// m x m matrix: off-diagonal lk(i,j), diagonal self-writhe.
std::vector<std::vector<Int>> linking_matrix(const LinkDiagram& d);

// Mirror image: reverses the cyclic order at every crossing, flips signs.
LinkDiagram mirror(const LinkDiagram& d);

// Reverse the orientation of one component.
LinkDiagram reverse_component(const LinkDiagram& d, int comp);

// Canonical relabeling: edges renumbered 0..E-1 by a deterministic traversal
// that does not depend on the incoming labels (per component, the rotation
// producing the lexicographically least crossing table is chosen).
// Component order is preserved -- equality is up to relabeling only.
LinkDiagram canonical_form(const LinkDiagram& d);

bool equal_up_to_relabeling(const LinkDiagram& a, const LinkDiagram& b);

// Connected pieces of the underlying projection (components joined by
// shared crossings).  Returns, per diagram component, a piece id.
std::vector<int> projection_pieces(const LinkDiagram& d);
bool projection_connected(const LinkDiagram& d);

// ---------------------------------------------------------------------------
// Faces of the projection (per connected piece; free loops excluded).
// A face is a cyclic sequence of signed edge traversals: dir = +1 when the
// face boundary runs along the edge orientation.
// ---------------------------------------------------------------------------
struct FaceEdge {
  EdgeId edge;
  int dir;  // +1 with the edge orientation, -1 against
};

struct Face {
  std::vector<FaceEdge> boundary;
};

// Faces of the piece containing at least one crossing.  Asserts Euler
// characteristic 2 per piece (detects non-planar PD input).
std::vector<Face> faces(const LinkDiagram& d);

}  // namespace linkinv
