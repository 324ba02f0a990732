#pragma once

#include "linkinv/diagram.hpp"
#include "linkinv/freeword.hpp"

#include <vector>

namespace linkinv {

// Wirtinger presentation of the link group: one generator per arc (maximal
// over-path), one conjugation relation per crossing.  With s the crossing
// sign, the relation used here is
//
//     x_out = x_over^-s  x_in  x_over^s
//
// so that the arc reached after travelling a prefix P of under-passages
// carries the meridian P^-1 x_base P, and the longitude letter at an
// under-passage is x_over^s.  Under these conventions mu(ij) equals lk(i,j).

struct UnderPassage {
  int over_arc;
  int eps;       // crossing sign
  int crossing;  // index into crossings
  int next_arc;  // arc entered after the passage
};

struct WirtingerRelation {
  int out_arc, over_arc, in_arc;
  int eps;
};

struct WirtingerPresentation {
  int arc_count = 0;
  std::vector<int> arc_component;
  std::vector<EdgeId> arc_min_edge;
  std::vector<int> base_arc;                        // per component
  std::vector<std::vector<UnderPassage>> passages;  // per component, cyclically from the base arc
  std::vector<int> self_writhe;                     // per component
  std::vector<WirtingerRelation> relations;         // one per crossing
};

// Requires a connected projection (apply connect_projection first).
WirtingerPresentation wirtinger(const LinkDiagram& d);

// Relator x_out^-1 x_over^-eps x_in x_over^eps of one crossing.
FreeWord relator(const WirtingerRelation& r);

// Zero-framed longitude of component i as a word in arc generators:
// the product of over-arc letters along the component times
// (base meridian)^(-self writhe).
FreeWord longitude_word(const WirtingerPresentation& p, int comp);

// Rank of the abelianized relation matrix (exact integer arithmetic).
// Equals arc_count - component_count for a well-formed presentation.
int abelianized_rank(const WirtingerPresentation& p);

}  // namespace linkinv
