#include "doctest.h"

#include "linkinv/builder.hpp"
#include "linkinv/diagram.hpp"

using namespace linkinv;

namespace {
LinkDiagram hopf_pos() { return braid_closure(2, {1, 1}); }
}  // namespace

TEST_CASE("hopf closure validates and links") {
  LinkDiagram d = hopf_pos();
  CHECK(validate(d).ok());
  CHECK(d.component_count() == 2);
  CHECK(d.crossing_count() == 2);
  auto lk = linking_matrix(d);
  CHECK(lk[0][1] == 1);
  CHECK(lk[1][0] == 1);
  CHECK(lk[0][0] == 0);
  CHECK(lk[1][1] == 0);
}

TEST_CASE("negative hopf and mirror") {
  LinkDiagram d = braid_closure(2, {-1, -1});
  CHECK(validate(d).ok());
  CHECK(linking_matrix(d)[0][1] == -1);
  LinkDiagram m = mirror(hopf_pos());
  CHECK(validate(m).ok());
  CHECK(linking_matrix(m)[0][1] == -1);
}

TEST_CASE("empty-crossing unlink is valid") {
  LinkDiagram d;
  d.components.resize(2);
  d.components[0].cycle = {0};
  d.components[1].cycle = {1};
  CHECK(validate(d).ok());
  auto lk = linking_matrix(d);
  CHECK(lk[0][1] == 0);
  CHECK(!projection_connected(d));
}

TEST_CASE("edge multiplicity violation is reported") {
  LinkDiagram d = hopf_pos();
  d.crossings[0].pd[1] = d.crossings[0].pd[0];  // duplicate an edge 3x overall
  ValidationReport rep = validate(d);
  CHECK(!rep.ok());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.find("edge multiplicity") != std::string::npos || v.find("orientation") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("sign consistency violation is reported") {
  LinkDiagram d = hopf_pos();
  d.crossings[0].sign = -d.crossings[0].sign;
  ValidationReport rep = validate(d);
  CHECK(!rep.ok());
}

TEST_CASE("faces satisfy Euler formula") {
  LinkDiagram d = hopf_pos();
  auto fs = faces(d);
  CHECK(fs.size() == 4);  // V=2, E=4, F=4
  LinkDiagram t = braid_closure(2, {1, 1, 1});
  CHECK(faces(t).size() == 5);
}

TEST_CASE("trefoil and figure-eight validate") {
  LinkDiagram t = braid_closure(2, {1, 1, 1});
  CHECK(validate(t).ok());
  CHECK(t.component_count() == 1);
  CHECK(writhe(t, 0) == 3);
  LinkDiagram f8 = braid_closure(3, {1, -2, 1, -2});
  CHECK(validate(f8).ok());
  CHECK(f8.component_count() == 1);
  CHECK(writhe(f8, 0) == 0);
}

TEST_CASE("borromean rings: all pairwise linking numbers vanish") {
  LinkDiagram b = braid_closure(3, {1, -2, 1, -2, 1, -2});
  CHECK(validate(b).ok());
  CHECK(b.component_count() == 3);
  auto lk = linking_matrix(b);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(lk[i][j] == 0);
}

TEST_CASE("canonical form and relabeling equality") {
  LinkDiagram a = hopf_pos();
  LinkDiagram b = hopf_pos();
  for (auto& c : b.components)
    for (auto& e : c.cycle) e += 100;
  for (auto& x : b.crossings)
    for (auto& e : x.pd) e += 100;
  CHECK(equal_up_to_relabeling(a, b));
  CHECK(!equal_up_to_relabeling(a, braid_closure(2, {-1, -1})));
}

TEST_CASE("reverse component flips inter-component signs") {
  LinkDiagram d = hopf_pos();
  LinkDiagram r = reverse_component(d, 0);
  CHECK(validate(r).ok());
  CHECK(linking_matrix(r)[0][1] == -1);
  LinkDiagram rr = reverse_component(r, 0);
  CHECK(equal_up_to_relabeling(rr, d));
}
