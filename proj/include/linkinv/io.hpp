#pragma once

#include "linkinv/diagram.hpp"

#include <optional>
#include <string>

namespace linkinv {

// Diagram files.  The structured format is JSON with fields
// {format_version, m, components, crossings, labels, provenance}; the text
// format is Gauss code, one component per line with tokens like O1+ U2-.
// Both round-trip up to edge relabeling.

struct Provenance {
  std::string family;
  int k = 0;
  std::vector<int> twists;
  bool present = false;
};

std::string to_json(const LinkDiagram& d, const Provenance* prov = nullptr);
LinkDiagram from_json(const std::string& text);

std::string to_gauss(const LinkDiagram& d);
LinkDiagram from_gauss(const std::string& text);

// Dispatch by content (JSON object vs Gauss lines).
LinkDiagram parse_diagram(const std::string& text);

LinkDiagram load_diagram_file(const std::string& path);
void save_diagram_file(const std::string& path, const LinkDiagram& d,
                       const Provenance* prov = nullptr);

}  // namespace linkinv
