#pragma once

#include "linkinv/diagram.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linkinv {

// Generators for the link families used throughout, plus the satellite
// operators (parallel cabling, Whitehead doubling) they are built from.

enum class Family { Unlink, Hopf, Borromean, Milnor, WhiteheadIter };

struct FamilySpec {
  Family family = Family::Unlink;
  int k = 0;                      // stage index (milnor, whitehead_iter); m for unlink
  std::vector<int> twists;        // half-twists per stage/disk
  std::vector<int> clasp_signs;   // per stage; empty means all -1 (left-handed)

  static std::optional<FamilySpec> parse(const std::string& family, int k,
                                         const std::vector<int>& twists,
                                         const std::vector<int>& clasps);
  std::string str() const;
};

LinkDiagram generate(const FamilySpec& spec);

// Zero-framed n-parallel of component i: copies are pairwise unlinked and
// keep the original linking numbers with the other components.  Copies are
// emitted in pushoff order in place of component i.
LinkDiagram cable(const LinkDiagram& d, int comp, int n);

// Satellite with the doubling pattern on component i: blackboard parallel,
// -w(i) compensating full twists, `half_twists` extra half-twists, then a
// clasp of the given sign.  The new component has zero linking number with
// every other component.
LinkDiagram whitehead_double(const LinkDiagram& d, int comp, int clasp_sign, int half_twists);

// Twisted chain-clasp family: variants of the k-stage chain link indexed by
// t full twists in the rightmost clasp (one half-twist along each disk).
std::vector<LinkDiagram> clasp_twist_family(int k, const std::vector<int>& t_range);

// Named corpus used by the cross-validation suites.
struct CorpusEntry {
  std::string name;
  LinkDiagram diagram;
};
std::vector<CorpusEntry> corpus();

}  // namespace linkinv
