#include "rainbow/family_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rainbow {

using nlohmann::json;

std::string format_family(const GraphFamily& family, FamilyFormat format) {
  if (format == FamilyFormat::json) {
    json doc;
    doc["n"] = family.order();
    doc["graphs"] = json::array();
    for (const auto& g : family.graphs()) {
      json edges = json::array();
      for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
      doc["graphs"].push_back(std::move(edges));
    }
    return doc.dump() + "\n";
  }
  std::ostringstream os;
  os << "n=" << family.order() << "\n";
  for (int c = 1; c <= family.size(); ++c) {
    os << "\ngraph " << c << ":\n";
    for (const auto& e : family.member(c).edges()) os << e.u << " " << e.v << "\n";
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& token, int line, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw FamilyFormatError(line, "expected an integer " + what + ", got '" + token + "'");
  }
}

void check_edge(int n, int u, int v, int line, int graph) {
  if (u < 1 || u > n || v < 1 || v > n) {
    throw FamilyFormatError(line, "graph " + std::to_string(graph) + ": edge " + std::to_string(u) + " " +
                                      std::to_string(v) + " has a label outside [1, " + std::to_string(n) + "]");
  }
  if (u == v) throw FamilyFormatError(line, "graph " + std::to_string(graph) + ": loop at vertex " + std::to_string(u));
}

GraphFamily parse_text(const std::string& content) {
  std::istringstream in(content);
  std::string raw;
  int line = 0;
  int n = -1;
  std::vector<Graph> graphs;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (n < 0) {
      if (s.rfind("n=", 0) != 0) throw FamilyFormatError(line, "expected header 'n=<int>'");
      n = parse_int(trim(s.substr(2)), line, "vertex count");
      if (n < 1 || n > kMaxVertices) throw FamilyFormatError(line, "vertex count " + std::to_string(n) + " out of range");
      continue;
    }
    if (s.rfind("graph", 0) == 0) {
      if (s.back() != ':') throw FamilyFormatError(line, "graph header must end with ':'");
      const int index = parse_int(trim(s.substr(5, s.size() - 6)), line, "graph index");
      const int expected = static_cast<int>(graphs.size()) + 1;
      if (index != expected) {
        throw FamilyFormatError(line, "graph " + std::to_string(index) + " out of order, expected graph " +
                                          std::to_string(expected));
      }
      if (index > n) throw FamilyFormatError(line, "graph " + std::to_string(index) + " exceeds n=" + std::to_string(n));
      graphs.emplace_back(n);
      continue;
    }
    if (graphs.empty()) throw FamilyFormatError(line, "edge before the first 'graph <i>:' header");
    std::istringstream fields(s);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) throw FamilyFormatError(line, "expected an edge 'u v'");
    const int u = parse_int(a, line, "vertex label");
    const int v = parse_int(b, line, "vertex label");
    const int gi = static_cast<int>(graphs.size());
    check_edge(n, u, v, line, gi);
    graphs.back().add_edge(u, v);
  }
  if (n < 0) throw FamilyFormatError(0, "missing header 'n=<int>'");
  if (static_cast<int>(graphs.size()) != n) {
    throw FamilyFormatError(0, "family declares n=" + std::to_string(n) + " but contains " +
                                   std::to_string(graphs.size()) + " graphs");
  }
  return GraphFamily(std::move(graphs));
}

GraphFamily parse_json(const std::string& content) {
  json doc;
  try {
    doc = json::parse(content);
  } catch (const json::parse_error& e) {
    throw FamilyFormatError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw FamilyFormatError(0, "JSON family needs an integer field 'n'");
  }
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxVertices) throw FamilyFormatError(0, "vertex count " + std::to_string(n) + " out of range");
  if (!doc.contains("graphs") || !doc["graphs"].is_array()) throw FamilyFormatError(0, "JSON family needs an array 'graphs'");
  const auto& list = doc["graphs"];
  if (static_cast<int>(list.size()) != n) {
    throw FamilyFormatError(0, "family declares n=" + std::to_string(n) + " but contains " +
                                   std::to_string(list.size()) + " graphs");
  }
  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < list.size(); ++i) {
    Graph g(n);
    if (!list[i].is_array()) throw FamilyFormatError(0, "graph " + std::to_string(i + 1) + " is not an edge array");
    for (const auto& e : list[i]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw FamilyFormatError(0, "graph " + std::to_string(i + 1) + ": edges must be [u, v] integer pairs");
      }
      const int u = e[0].get<int>();
      const int v = e[1].get<int>();
      check_edge(n, u, v, 0, static_cast<int>(i) + 1);
      g.add_edge(u, v);
    }
    graphs.push_back(std::move(g));
  }
  return GraphFamily(std::move(graphs));
}

}  // namespace

GraphFamily parse_family(const std::string& content, FamilyFormat format) {
  return format == FamilyFormat::json ? parse_json(content) : parse_text(content);
}

GraphFamily parse_family(const std::string& content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  const bool is_json = first != std::string::npos && content[first] == '{';
  return parse_family(content, is_json ? FamilyFormat::json : FamilyFormat::text);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

GraphFamily read_family(const std::filesystem::path& path) { return parse_family(read_text_file(path)); }

void write_family(const GraphFamily& family, const std::filesystem::path& path, FamilyFormat format) {
  write_text_file(path, format_family(family, format));
}

std::string format_cycle_json(const RainbowCycle& cycle) {
  json doc;
  doc["vertices"] = cycle.vertices;
  doc["colors"] = cycle.colors;
  return doc.dump();
}

RainbowCycle parse_cycle_json(const std::string& content) {
  try {
    const json doc = json::parse(content);
    RainbowCycle c{doc.at("vertices").get<std::vector<int>>(), doc.at("colors").get<std::vector<int>>()};
    if (c.vertices.size() != c.colors.size()) {
      throw FamilyFormatError(0, "cycle has " + std::to_string(c.vertices.size()) + " vertices but " +
                                     std::to_string(c.colors.size()) + " colors");
    }
    return c;
  } catch (const json::exception& e) {
    throw FamilyFormatError(0, std::string("invalid cycle document: ") + e.what());
  }
}

}  // namespace rainbow
