#pragma once

#include "linkinv/diagram.hpp"
#include "linkinv/magnus.hpp"
#include "linkinv/wirtinger.hpp"

#include <map>
#include <string>
#include <vector>

namespace linkinv {

// Milnor invariants.  Index sequences use 1-based component indices.
struct MuValue {
  std::vector<int> indices;
  Int mu;       // Magnus coefficient of the longitude after iterated substitution
  Int delta;    // gcd indeterminacy; 0 means a well-defined integer
  Int residue;  // mu mod delta when delta > 0, else mu

  std::string str() const;
};

// Iterated-substitution engine for a fixed diagram.  The projection is
// connected internally; arc images and longitude expansions are cached per
// (depth, truncation) when no monomial filter applies.
class MilnorEngine {
 public:
  explicit MilnorEngine(const LinkDiagram& d);

  int component_count() const { return diagram_.component_count(); }
  const LinkDiagram& connected_diagram() const { return diagram_; }
  const WirtingerPresentation& presentation() const { return pres_; }

  // Magnus coefficient mu(I): coefficient of X_{i_1}..X_{i_{k-1}} in the
  // expansion of the longitude of component i_k at substitution depth
  // `depth` (default |I|).
  Int mu(const std::vector<int>& I);
  Int mu_at_depth(const std::vector<int>& I, int depth);

  // mu with the gcd indeterminacy over cyclically permuted proper
  // subsequences, per the standard definition; gcd() of nothing is 0.
  MuValue mu_bar(const std::vector<int>& I);

  // Expansion of the zero-framed longitude of component i (0-based) at the
  // given substitution depth and truncation.
  MagnusSeries longitude_series(int comp, int depth, int trunc);

 private:
  MagnusSeries longitude_series_filtered(int comp, int depth, int trunc, const MonomialFilter& f);
  std::vector<MagnusSeries> arc_images(int depth, int trunc, const MonomialFilter& f) const;

  LinkDiagram diagram_;
  WirtingerPresentation pres_;
  bool use_filter_ = false;  // large component counts get per-query pruning
  std::map<std::tuple<int, int, int>, MagnusSeries> longitude_cache_;  // (comp,depth,trunc)
  std::map<std::vector<int>, Int> mu_cache_;
};

struct MuTable {
  std::vector<MuValue> values;  // cyclic-orbit representatives, sorted
  bool truncated = false;       // budget marker
};

MuValue mu_bar(const LinkDiagram& d, const std::vector<int>& I);

// All MuValues for index sequences of length 2..max_len, one representative
// per cyclic orbit (lexicographically least rotation), sorted by length then
// lexicographically.  max_len > 9 requires allow_deep (cost guard); the
// orbit budget reports partial results with the truncated marker.
MuTable mu_table(const LinkDiagram& d, int max_len, bool allow_deep = false,
                 long orbit_budget = 1 << 16);

// Sato-Levine invariant mu_bar(1122) of a 2-component link with lk = 0.
Int sato_levine(const LinkDiagram& d);

// Cochran derived invariant: mu_bar(1^{2i} 2 2) in the regime where every
// shorter invariant vanishes with delta 0; throws InputError naming the
// obstructing MuValue otherwise.
Int cochran_beta(const LinkDiagram& d, int i);

std::string indices_str(const std::vector<int>& I);

}  // namespace linkinv
