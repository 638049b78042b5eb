#include "raagqi/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace raagqi {
namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

SimplicialGraph parse_edge_list(std::string_view text) {
  std::set<std::string> names;
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<LabelEdge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;

    auto tokens = split_line(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected two labels or 'v <label>', got " +
                           std::to_string(tokens.size()) + " tokens",
                       line_no, tokens.front().column);
    }
    const auto& a = tokens[0];
    const auto& b = tokens[1];
    if (a.text == "v") {
      names.insert(b.text);
      continue;
    }
    if (a.text == b.text) {
      throw ParseError("line " + std::to_string(line_no) + ": self-loop at '" + a.text + "'",
                       line_no, b.column);
    }
    auto key = a.text < b.text ? std::make_pair(a.text, b.text) : std::make_pair(b.text, a.text);
    if (!seen.insert(key).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate edge '" + a.text +
                           "' - '" + b.text + "'",
                       line_no, a.column);
    }
    names.insert(a.text);
    names.insert(b.text);
    edges.emplace_back(a.text, b.text);
  }
  try {
    return SimplicialGraph::from_labels({names.begin(), names.end()}, edges);
  } catch (const GraphError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

SimplicialGraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), 0, e.byte);
  }
  if (!doc.is_object()) throw ParseError("graph JSON must be an object", 0, 0);
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("graph JSON needs a \"vertices\" array", 0, 0);
  }
  std::vector<std::string> vertices;
  std::set<std::string> declared;
  const auto& vs = doc["vertices"];
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) {
      throw ParseError("vertices[" + std::to_string(i) + "] is not a string", 0, i);
    }
    auto name = vs[i].get<std::string>();
    if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos) {
      throw ParseError("vertices[" + std::to_string(i) + "] is not a valid label", 0, i);
    }
    if (!declared.insert(name).second) {
      throw ParseError("vertices[" + std::to_string(i) + "] repeats '" + name + "'", 0, i);
    }
    vertices.push_back(std::move(name));
  }
  std::vector<LabelEdge> edges;
  std::set<std::pair<std::string, std::string>> seen;
  if (doc.contains("edges")) {
    const auto& es = doc["edges"];
    if (!es.is_array()) throw ParseError("\"edges\" must be an array", 0, 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto& e = es[i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw ParseError(where + " must be a pair of labels", 0, i);
      }
      auto a = e[0].get<std::string>();
      auto b = e[1].get<std::string>();
      if (a == b) throw ParseError(where + ": self-loop at '" + a + "'", 0, i);
      for (const auto& end : {a, b}) {
        if (!declared.count(end)) {
          throw ParseError(where + ": undeclared endpoint '" + end + "'", 0, i);
        }
      }
      auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      if (!seen.insert(key).second) {
        throw ParseError(where + ": duplicate edge '" + a + "' - '" + b + "'", 0, i);
      }
      edges.emplace_back(std::move(a), std::move(b));
    }
  }
  try {
    return SimplicialGraph::from_labels(std::move(vertices), edges);
  } catch (const GraphError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

}  // namespace

SimplicialGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::json ? parse_json(text) : parse_edge_list(text);
}

GraphFormat format_for(const std::filesystem::path& path) {
  return path.extension() == ".json" ? GraphFormat::json : GraphFormat::edge_list;
}

SimplicialGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format_for(path));
}

std::string to_edge_list(const SimplicialGraph& g) {
  std::ostringstream out;
  VertexSet touched;
  for (auto [a, b] : g.edges()) {
    touched.insert(a);
    touched.insert(b);
  }
  for (Vertex v : g.vertices() - touched) out << "v " << g.label(v) << '\n';
  for (const auto& [a, b] : g.label_edges()) out << a << ' ' << b << '\n';
  return out.str();
}

std::string to_json_text(const SimplicialGraph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.labels();
  doc["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.label_edges()) doc["edges"].push_back({a, b});
  return doc.dump() + "\n";
}

}  // namespace raagqi
