#pragma once

#include "linkinv/diagram.hpp"

#include <vector>

namespace linkinv {

// Diagram rewriting: Reidemeister moves plus the skein-triple operations
// (switch = crossing change, smooth = oriented resolution).

enum class MoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3, Switch, Smooth };

struct MoveSpec {
  MoveKind kind;
  EdgeId edge_a = -1;   // R1+: kinked edge; R2+: strand pushed over; R3: sliding edge
  EdgeId edge_b = -1;   // R2+: strand pushed across (goes under)
  int crossing_a = -1;  // crossing id: R1-, R2-, R3, switch, smooth
  int crossing_b = -1;  // R2-: partner; R3: second crossing of the slider
  int crossing_c = -1;  // R3: the crossing slid across
  int sign = 0;         // R1+: sign of the created crossing
  int side = 0;         // R1+: which of the two kink shapes (0/1)
};

std::string to_string(const MoveSpec& mv);

// Applies one move; throws InputError for invalid sites or missing patterns.
LinkDiagram apply_move(const LinkDiagram& d, const MoveSpec& mv);

// All admissible moves of the given kinds, deterministically ordered
// (scans local patterns; ties broken by lowest edge/crossing id).
std::vector<MoveSpec> enumerate_moves(const LinkDiagram& d, const std::vector<MoveKind>& kinds);

// R2-joins projection pieces until the projection graph is connected.
// The output is R2-equivalent to the input (same link); no-op when already
// connected.
LinkDiagram connect_projection(const LinkDiagram& d);

}  // namespace linkinv
