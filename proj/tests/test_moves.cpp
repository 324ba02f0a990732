#include "doctest.h"

#include "generators.hpp"
#include "linkinv/builder.hpp"
#include "linkinv/moves.hpp"

#include <random>

using namespace linkinv;

namespace {
LinkDiagram hopf_pos() { return braid_closure(2, {1, 1}); }

LinkDiagram unlink(int m) {
  LinkDiagram d;
  d.components.resize(m);
  for (int i = 0; i < m; ++i) d.components[i].cycle = {i};
  return d;
}

MoveSpec switch_at(const LinkDiagram& d, int idx) {
  MoveSpec mv;
  mv.kind = MoveKind::Switch;
  mv.crossing_a = d.crossings[idx].id;
  return mv;
}
}  // namespace

TEST_CASE("switch flips one crossing and kills hopf linking") {
  LinkDiagram d = hopf_pos();
  LinkDiagram s = apply_move(d, switch_at(d, 0));
  CHECK(s.crossing_count() == 2);
  CHECK(linking_matrix(s)[0][1] == 0);
}

TEST_CASE("smooth merges hopf into one component") {
  LinkDiagram d = hopf_pos();
  MoveSpec mv;
  mv.kind = MoveKind::Smooth;
  mv.crossing_a = d.crossings[0].id;
  LinkDiagram s = apply_move(d, mv);
  CHECK(s.component_count() == 1);
  CHECK(s.crossing_count() == 1);
  CHECK(validate(s).ok());
}

TEST_CASE("smoothing a kink splits off a free circle") {
  LinkDiagram k = braid_closure(1, {});  // 0-crossing unknot
  MoveSpec r1;
  r1.kind = MoveKind::R1Plus;
  r1.edge_a = 0;
  r1.sign = +1;
  r1.side = 0;
  LinkDiagram kinked = apply_move(k, r1);
  CHECK(kinked.crossing_count() == 1);
  CHECK(writhe(kinked, 0) == 1);
  MoveSpec sm;
  sm.kind = MoveKind::Smooth;
  sm.crossing_a = kinked.crossings[0].id;
  LinkDiagram s = apply_move(kinked, sm);
  CHECK(s.component_count() == 2);
  CHECK(s.crossing_count() == 0);
}

TEST_CASE("R1+ then R1- returns the diagram up to relabeling") {
  LinkDiagram d = hopf_pos();
  for (int sign : {+1, -1})
    for (int side : {0, 1}) {
      MoveSpec r1;
      r1.kind = MoveKind::R1Plus;
      r1.edge_a = d.components[0].cycle[0];
      r1.sign = sign;
      r1.side = side;
      LinkDiagram k = apply_move(d, r1);
      CHECK(k.crossing_count() == 3);
      CHECK(writhe(k, 0) == sign);
      MoveSpec r1m;
      r1m.kind = MoveKind::R1Minus;
      r1m.crossing_a = k.crossings.back().id;
      LinkDiagram back = apply_move(k, r1m);
      CHECK(equal_up_to_relabeling(back, d));
    }
}

TEST_CASE("R2+ then R2- is the identity up to relabeling") {
  LinkDiagram d = braid_closure(2, {1, 1, 1});  // trefoil
  auto sites = enumerate_moves(d, {MoveKind::R2Plus});
  REQUIRE(!sites.empty());
  for (size_t i = 0; i < sites.size(); ++i) {
    LinkDiagram big = apply_move(d, sites[i]);
    CHECK(big.crossing_count() == d.crossing_count() + 2);
    MoveSpec undo;
    undo.kind = MoveKind::R2Minus;
    undo.crossing_a = big.crossings[big.crossing_count() - 2].id;
    undo.crossing_b = big.crossings[big.crossing_count() - 1].id;
    LinkDiagram back = apply_move(big, undo);
    CHECK(equal_up_to_relabeling(back, d));
  }
}

TEST_CASE("connect_projection joins unlinks with R2 pairs") {
  LinkDiagram u2 = connect_projection(unlink(2));
  CHECK(u2.crossing_count() == 2);
  CHECK(projection_connected(u2));
  CHECK(linking_matrix(u2)[0][1] == 0);
  LinkDiagram u3 = connect_projection(unlink(3));
  CHECK(u3.crossing_count() == 4);
  CHECK(projection_connected(u3));
  LinkDiagram h = hopf_pos();
  CHECK(equal_up_to_relabeling(connect_projection(h), h));
}

TEST_CASE("alternating diagrams admit no R3 slide") {
  LinkDiagram b = braid_closure(3, {1, -2, 1, -2, 1, -2});
  CHECK(enumerate_moves(b, {MoveKind::R3}).empty());
}

TEST_CASE("R3 at the braid-relation triangle, applied twice, is the identity") {
  LinkDiagram d = braid_closure(3, {1, 2, 1});
  auto moves = enumerate_moves(d, {MoveKind::R3});
  REQUIRE(!moves.empty());
  auto lk0 = linking_matrix(d);
  for (const auto& mv : moves) {
    LinkDiagram after = apply_move(d, mv);
    CHECK(validate(after).ok());
    CHECK(after.crossing_count() == d.crossing_count());
    CHECK(linking_matrix(after) == lk0);
    // slide back at the image site
    auto back_moves = enumerate_moves(after, {MoveKind::R3});
    bool restored = false;
    for (const auto& bm : back_moves)
      if (bm.edge_a == mv.edge_a && equal_up_to_relabeling(apply_move(after, bm), d)) restored = true;
    CHECK(restored);
  }
}

TEST_CASE("random move sequences preserve linking matrix off-diagonal") {
  testgen::Rng rng(101);
  std::vector<LinkDiagram> seeds = {hopf_pos(), braid_closure(2, {1, 1, 1}),
                                    braid_closure(3, {1, -2, 1, -2, 1, -2}),
                                    braid_closure(3, {1, 1, 2, 2})};
  for (const auto& seed : seeds) {
    auto lk0 = linking_matrix(seed);
    LinkDiagram cur = seed;
    for (int step = 0; step < 40; ++step) {
      std::vector<MoveKind> kinds = {MoveKind::R1Plus, MoveKind::R1Minus, MoveKind::R2Plus,
                                     MoveKind::R2Minus, MoveKind::R3};
      if (cur.crossing_count() > 14) kinds = {MoveKind::R1Minus, MoveKind::R2Minus, MoveKind::R3};
      auto moves = enumerate_moves(cur, kinds);
      if (moves.empty()) break;
      cur = apply_move(cur, moves[rng() % moves.size()]);
      CHECK(validate(cur).ok());
    }
    auto lk1 = linking_matrix(cur);
    for (size_t i = 0; i < lk0.size(); ++i)
      for (size_t j = 0; j < lk0.size(); ++j)
        if (i != j) CHECK(lk0[i][j] == lk1[i][j]);
  }
}
