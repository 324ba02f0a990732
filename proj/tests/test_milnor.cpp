#include "doctest.h"

#include "generators.hpp"
#include "linkinv/builder.hpp"
#include "linkinv/magnus.hpp"
#include "linkinv/milnor.hpp"
#include "linkinv/moves.hpp"

using namespace linkinv;

namespace {
LinkDiagram hopf_pos() { return braid_closure(2, {1, 1}); }
LinkDiagram borromean() { return braid_closure(3, {1, -2, 1, -2, 1, -2}); }
LinkDiagram unlink(int m) {
  LinkDiagram d;
  d.components.resize(m);
  for (int i = 0; i < m; ++i) d.components[i].cycle = {i};
  return d;
}

// cyclically shift all edge labels; changes which arc carries the minimal
// edge and therefore the base-arc choices
LinkDiagram rotate_labels(const LinkDiagram& d, int r) {
  int n = 0;
  for (const auto& c : d.components) n += (int)c.cycle.size();
  auto f = [&](EdgeId e) { return (e + r) % n; };
  LinkDiagram out = d;
  for (auto& c : out.components)
    for (auto& e : c.cycle) e = f(e);
  for (auto& x : out.crossings)
    for (auto& e : x.pd) e = f(e);
  return out;
}
}  // namespace

TEST_CASE("wirtinger presentation shapes") {
  // kinked unknot: one arc, relation collapses
  LinkDiagram k = braid_closure(1, {});
  MoveSpec r1;
  r1.kind = MoveKind::R1Plus;
  r1.edge_a = 0;
  r1.sign = 1;
  r1.side = 0;
  k = apply_move(k, r1);
  WirtingerPresentation pk = wirtinger(k);
  CHECK(pk.arc_count == 1);
  CHECK(pk.relations.size() == 1);

  WirtingerPresentation ph = wirtinger(hopf_pos());
  CHECK(ph.arc_count == 2);
  CHECK(ph.relations.size() == 2);
  CHECK(abelianized_rank(ph) == 0);  // arc_count - m

  WirtingerPresentation pt = wirtinger(braid_closure(2, {1, 1, 1}));
  CHECK(pt.arc_count == 3);
  CHECK(pt.relations.size() == 3);
  CHECK(abelianized_rank(pt) == 2);  // deficiency one after dropping a relation
}

TEST_CASE("relators expand to 1 + O(degree 2) under component meridians") {
  for (const LinkDiagram& d : {hopf_pos(), borromean(), braid_closure(2, {1, 1, 1})}) {
    WirtingerPresentation p = wirtinger(d);
    std::map<int, MagnusSeries> images;
    for (int a = 0; a < p.arc_count; ++a)
      images.emplace(a, MagnusSeries::meridian(p.arc_component[a] + 1, 4));
    for (const auto& r : p.relations) {
      MagnusSeries s = expand(relator(r), images, 4);
      CHECK(s.coeff(monom::one) == 1);
      for (const auto& [mo, c] : s.terms()) CHECK(monom::deg(mo) != 1);
    }
  }
}

TEST_CASE("longitudes: unknot trivial, hopf detects the other meridian") {
  LinkDiagram k = braid_closure(1, {});
  MoveSpec r1;
  r1.kind = MoveKind::R1Plus;
  r1.edge_a = 0;
  r1.sign = 1;
  r1.side = 0;
  k = apply_move(k, r1);
  MilnorEngine ek(k);
  CHECK(ek.longitude_series(0, 6, 6).is_unit());

  MilnorEngine eh(hopf_pos());
  MagnusSeries l0 = eh.longitude_series(0, 2, 2);
  CHECK(l0.coeff(monom::variable(2)) == 1);
  CHECK(l0.coeff(monom::variable(1)) == 0);
}

TEST_CASE("mu(ij) equals the linking number") {
  CHECK(mu_bar(hopf_pos(), {1, 2}).mu == 1);
  CHECK(mu_bar(hopf_pos(), {2, 1}).mu == 1);
  CHECK(mu_bar(braid_closure(2, {-1, -1}), {1, 2}).mu == -1);
  CHECK(mu_bar(braid_closure(2, {1, 1, 1, 1}), {1, 2}).mu == 2);
  for (const auto& I : {std::vector<int>{1, 2}, {1, 3}, {2, 3}})
    CHECK(mu_bar(borromean(), I).mu == 0);
}

TEST_CASE("borromean rings: triple invariant is +-1 with no indeterminacy") {
  MilnorEngine eng(borromean());
  MuValue v = eng.mu_bar({1, 2, 3});
  CHECK(v.delta == 0);
  CHECK((v.mu == 1 || v.mu == -1));
  // first nonvanishing invariants are cyclically symmetric
  CHECK(eng.mu_bar({2, 3, 1}).mu == v.mu);
  CHECK(eng.mu_bar({3, 1, 2}).mu == v.mu);
  // degree-2 part of the longitude is the commutator pattern
  MagnusSeries l0 = eng.longitude_series(0, 3, 2);
  Monomial xy = monom::from_letters({2, 3}), yx = monom::from_letters({3, 2});
  CHECK(l0.coeff(xy) == -l0.coeff(yx));
  CHECK((l0.coeff(xy) == 1 || l0.coeff(xy) == -1));
}

TEST_CASE("mu is stable under deeper substitution") {
  MilnorEngine eng(borromean());
  CHECK(eng.mu_at_depth({1, 2, 3}, 3) == eng.mu_at_depth({1, 2, 3}, 5));
  MilnorEngine eh(hopf_pos());
  CHECK(eh.mu_at_depth({1, 1, 2, 2}, 4) == eh.mu_at_depth({1, 1, 2, 2}, 6));
}

TEST_CASE("mu table of the 2-unlink vanishes") {
  MuTable t = mu_table(unlink(2), 6);
  CHECK(!t.truncated);
  for (const auto& v : t.values) {
    CHECK(v.mu == 0);
    CHECK(v.delta == 0);
  }
}

TEST_CASE("mu table of hopf: lk entry plus fully indeterminate length 3") {
  MuTable t = mu_table(hopf_pos(), 3);
  bool saw12 = false;
  for (const auto& v : t.values) {
    if (v.indices == std::vector<int>{1, 2}) {
      saw12 = true;
      CHECK(v.mu == 1);
      CHECK(v.delta == 0);
    }
    if (v.indices.size() == 3) {
      bool mixed = std::count(v.indices.begin(), v.indices.end(), 1) > 0 &&
                   std::count(v.indices.begin(), v.indices.end(), 2) > 0;
      if (mixed) {
        // any deletion chain reaches mu(12)=1, so the gcd is 1
        CHECK(v.delta == 1);
        CHECK(v.residue == 0);
      } else {
        CHECK(v.mu == 0);
        CHECK(v.delta == 0);
      }
    }
  }
  CHECK(saw12);
}

TEST_CASE("rebasing changes mu only within delta") {
  for (const LinkDiagram& d : {borromean(), hopf_pos()}) {
    for (const auto& I : {std::vector<int>{1, 2, 3}, {1, 1, 2, 2}, {1, 2, 2}}) {
      if ((int)*std::max_element(I.begin(), I.end()) > d.component_count()) continue;
      MuValue base = mu_bar(d, I);
      for (int r : {1, 3, 5}) {
        MuValue rot = mu_bar(rotate_labels(d, r), I);
        CHECK(rot.delta == base.delta);
        CHECK(rot.residue == base.residue);
      }
    }
  }
}

TEST_CASE("sato_levine rejects linked inputs") {
  CHECK_THROWS_AS(sato_levine(hopf_pos()), InputError);
  CHECK(sato_levine(unlink(2)) == 0);
}

TEST_CASE("cochran_beta on the unlink vanishes") {
  CHECK(cochran_beta(unlink(2), 1) == 0);
  CHECK(cochran_beta(unlink(2), 2) == 0);
  CHECK(cochran_beta(unlink(2), 3) == 0);
}
