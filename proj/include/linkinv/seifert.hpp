#pragma once

#include "linkinv/conway.hpp"
#include "linkinv/diagram.hpp"
#include "linkinv/types.hpp"

#include <string>
#include <vector>

namespace linkinv {

// Seifert matrix of the surface from Seifert's algorithm.  The diagram is
// first brought to braid form (coherently nested Seifert circles) by
// R2 moves across incoherent faces; on a braided diagram the genus basis is
// the ladder of consecutive bands in each column and the linking form has a
// local description.
struct SeifertMatrix {
  std::vector<std::vector<Int>> v;
  int m = 1;  // component count of the source link

  int rank() const { return (int)v.size(); }
  std::string str() const;
};

// Requires a connected projection; throws InputError otherwise.
SeifertMatrix seifert_matrix(const LinkDiagram& d);

// nabla(z) = det(t^{-1/2} V - t^{1/2} V^T) rewritten in z = t^{1/2} - t^{-1/2},
// computed exactly over integer polynomials.  Throws InputError when the
// rewrite leaves a residue (an inconsistent matrix).
ConwayPolynomial conway_from_seifert(const SeifertMatrix& V);

// Seifert-route Conway polynomial; connects the projection if necessary.
ConwayPolynomial conway(const LinkDiagram& d);

// Exposed for diagnostics: number of Seifert circles of a diagram.
int seifert_circle_count(const LinkDiagram& d);

// Braid-form normalization (Vogel moves); returns an R2-equivalent diagram
// whose Seifert circles are coherently nested.
LinkDiagram braid_form(const LinkDiagram& d);

// det(V - x V^T) as integer polynomial coefficients in x (for tests).
std::vector<Int> seifert_char_poly(const SeifertMatrix& V);

}  // namespace linkinv
