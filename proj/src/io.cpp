#include "linkinv/io.hpp"

#include "json.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace linkinv {

using nlohmann::json;

std::string to_json(const LinkDiagram& d, const Provenance* prov) {
  json j;
  j["format_version"] = 1;
  j["m"] = d.component_count();
  json comps = json::array();
  json labels = json::array();
  for (const auto& c : d.components) {
    comps.push_back(c.cycle);
    labels.push_back(c.label);
  }
  j["components"] = comps;
  j["labels"] = labels;
  json xs = json::array();
  for (const auto& x : d.crossings) {
    json e;
    e["id"] = x.id;
    e["pd"] = x.pd;
    e["sign"] = x.sign;
    xs.push_back(e);
  }
  j["crossings"] = xs;
  if (prov && prov->present) {
    json p;
    p["family"] = prov->family;
    p["k"] = prov->k;
    p["twists"] = prov->twists;
    j["provenance"] = p;
  }
  return j.dump(2) + "\n";
}

LinkDiagram from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("diagram file: ") + e.what());
  }
  if (!j.is_object()) throw InputError("diagram file: expected a JSON object");
  if (!j.contains("components") || !j["components"].is_array())
    throw InputError("diagram file: missing components array");
  LinkDiagram d;
  int ci = 0;
  for (const auto& c : j["components"]) {
    if (!c.is_array()) throw InputError("diagram file: component " + std::to_string(ci) + " is not an array");
    Component comp;
    for (const auto& e : c) comp.cycle.push_back(e.get<EdgeId>());
    d.components.push_back(std::move(comp));
    ++ci;
  }
  if (j.contains("labels") && j["labels"].is_array()) {
    size_t i = 0;
    for (const auto& l : j["labels"]) {
      if (i < d.components.size() && l.is_string()) d.components[i].label = l.get<std::string>();
      ++i;
    }
  }
  int xi = 0;
  if (j.contains("crossings")) {
    for (const auto& x : j["crossings"]) {
      Crossing c;
      if (!x.contains("pd") || !x["pd"].is_array() || x["pd"].size() != 4)
        throw InputError("diagram file: crossing " + std::to_string(xi) + ": pd must have 4 entries");
      for (int s = 0; s < 4; ++s) c.pd[s] = x["pd"][s].get<EdgeId>();
      c.id = x.contains("id") ? x["id"].get<int>() : xi;
      if (!x.contains("sign")) throw InputError("diagram file: crossing " + std::to_string(xi) + ": missing sign");
      c.sign = x["sign"].get<int>();
      d.crossings.push_back(c);
      ++xi;
    }
  }
  ValidationReport rep = validate(d);
  if (!rep.ok()) throw InputError("diagram file: " + rep.joined());
  if (j.contains("m") && j["m"].get<int>() != d.component_count())
    throw InputError("diagram file: m disagrees with the component list");
  return d;
}

std::string to_gauss(const LinkDiagram& d) {
  DiagramIndex ix(d);
  // crossing numbers 1..n by position
  std::map<int, int> number;
  for (int c = 0; c < (int)d.crossings.size(); ++c) number[c] = c + 1;
  std::ostringstream os;
  for (const auto& comp : d.components) {
    bool first = true;
    bool any = false;
    for (EdgeId e : comp.cycle) {
      const EdgeInfo& ei = ix.edge(e);
      if (ei.head.crossing == -1) continue;
      int c = ei.head.crossing;
      bool under = ei.head.slot == 0;
      if (!first) os << ' ';
      os << (under ? 'U' : 'O') << number[c] << (d.crossings[c].sign > 0 ? '+' : '-');
      first = false;
      any = true;
    }
    if (!any) os << '.';  // crossingless component
    os << '\n';
  }
  return os.str();
}

LinkDiagram from_gauss(const std::string& text) {
  struct Tok {
    bool over;
    int num;
    int sign;
    int line;
  };
  std::vector<std::vector<Tok>> comps;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    // strip comments and whitespace-only lines
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace((unsigned char)ch)) blank = false;
    if (blank) continue;
    std::vector<Tok> toks;
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
    };
    skip_ws();
    if (i < line.size() && line[i] == '.') {
      comps.push_back({});  // crossingless unknot component
      continue;
    }
    while (i < line.size()) {
      skip_ws();
      if (i >= line.size()) break;
      char c = line[i];
      if (c != 'O' && c != 'U' && c != 'o' && c != 'u')
        throw InputError("gauss code line " + std::to_string(lineno) + ": expected O or U at '" +
                         line.substr(i) + "'");
      Tok t;
      t.over = (c == 'O' || c == 'o');
      t.line = lineno;
      ++i;
      size_t start = i;
      while (i < line.size() && std::isdigit((unsigned char)line[i])) ++i;
      if (start == i) throw InputError("gauss code line " + std::to_string(lineno) + ": missing crossing number");
      t.num = std::stoi(line.substr(start, i - start));
      if (i >= line.size() || (line[i] != '+' && line[i] != '-'))
        throw InputError("gauss code line " + std::to_string(lineno) + ": crossing " + std::to_string(t.num) +
                         " needs a sign (+/-)");
      t.sign = line[i] == '+' ? 1 : -1;
      ++i;
      toks.push_back(t);
    }
    comps.push_back(std::move(toks));
  }
  if (comps.empty()) throw InputError("gauss code: no components");

  // edges: one per token position (edge enters the token's crossing)
  LinkDiagram d;
  int next_edge = 0;
  struct Occ {
    EdgeId in, out;
    int sign;
    bool seen = false;
  };
  std::map<int, std::pair<std::optional<Occ>, std::optional<Occ>>> table;  // num -> (over, under)
  for (const auto& toks : comps) {
    Component comp;
    if (toks.empty()) {
      comp.cycle = {next_edge++};
      d.components.push_back(std::move(comp));
      continue;
    }
    int n = (int)toks.size();
    std::vector<EdgeId> edges(n);
    for (int i = 0; i < n; ++i) edges[i] = next_edge++;
    for (int i = 0; i < n; ++i) {
      const Tok& t = toks[i];
      Occ occ;
      occ.in = edges[i];
      occ.out = edges[(i + 1) % n];
      occ.sign = t.sign;
      occ.seen = true;
      auto& slot = t.over ? table[t.num].first : table[t.num].second;
      if (slot)
        throw InputError("gauss code: crossing " + std::to_string(t.num) + " visited twice as " +
                         (t.over ? "over" : "under"));
      slot = occ;
      comp.cycle.push_back(edges[i]);
    }
    d.components.push_back(std::move(comp));
  }
  for (auto& [num, occ] : table) {
    if (!occ.first || !occ.second)
      throw InputError("gauss code: crossing " + std::to_string(num) + " lacks an over or under passage");
    if (occ.first->sign != occ.second->sign)
      throw InputError("gauss code: crossing " + std::to_string(num) + " has contradictory signs");
    Crossing x;
    x.id = num;
    x.sign = occ.first->sign;
    if (x.sign > 0)
      x.pd = {occ.second->in, occ.first->out, occ.second->out, occ.first->in};
    else
      x.pd = {occ.second->in, occ.first->in, occ.second->out, occ.first->out};
    d.crossings.push_back(x);
  }
  ValidationReport rep = validate(d);
  if (!rep.ok()) throw InputError("gauss code: " + rep.joined());
  return d;
}

LinkDiagram parse_diagram(const std::string& text) {
  for (char c : text) {
    if (std::isspace((unsigned char)c)) continue;
    if (c == '{') return from_json(text);
    break;
  }
  return from_gauss(text);
}

LinkDiagram load_diagram_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_diagram(ss.str());
}

void save_diagram_file(const std::string& path, const LinkDiagram& d, const Provenance* prov) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << to_json(d, prov);
}

}  // namespace linkinv
