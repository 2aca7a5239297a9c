#include <json.hpp>
#include <sstream>

#include "qgr/errors.hpp"
#include "qgr/quiver.hpp"

namespace qgr {

namespace {

using nlohmann::json;

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) toks.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

void check_identifier(const std::string& id, int line) {
  if (id.empty() || id == "->" || id.find(':') != std::string::npos)
    throw ParseError("invalid identifier '" + id + "'", line);
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  bool saw_any = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "quiver") {
      if (saw_any) throw ParseError("'quiver' header must come first", lineno);
      if (toks.size() != 2) throw ParseError("expected 'quiver <name>'", lineno);
      name = toks[1];
      saw_any = true;
    } else if (kw == "vertex") {
      if (toks.size() != 2) throw ParseError("expected 'vertex <id>'", lineno);
      check_identifier(toks[1], lineno);
      for (const auto& v : vertices)
        if (v == toks[1]) throw ParseError("duplicate vertex identifier '" + toks[1] + "'", lineno);
      vertices.push_back(toks[1]);
      saw_any = true;
    } else if (kw == "arrow") {
      // arrow <id>: <src> -> <tgt>, colon may stick to the id
      std::vector<std::string> rest(toks.begin() + 1, toks.end());
      std::string id;
      if (!rest.empty()) {
        if (rest[0].size() > 1 && rest[0].back() == ':') {
          id = rest[0].substr(0, rest[0].size() - 1);
          rest.erase(rest.begin());
        } else if (rest.size() >= 2 && rest[1] == ":") {
          id = rest[0];
          rest.erase(rest.begin(), rest.begin() + 2);
        }
      }
      if (id.empty() || rest.size() != 3 || rest[1] != "->")
        throw ParseError("expected 'arrow <id>: <src> -> <tgt>'", lineno);
      check_identifier(id, lineno);
      check_identifier(rest[0], lineno);
      check_identifier(rest[2], lineno);
      for (const auto& [aid, s, t] : arrows)
        if (aid == id) throw ParseError("duplicate arrow identifier '" + id + "'", lineno);
      bool src_ok = false, tgt_ok = false;
      for (const auto& v : vertices) {
        if (v == rest[0]) src_ok = true;
        if (v == rest[2]) tgt_ok = true;
      }
      if (!src_ok)
        throw ParseError("arrow '" + id + "': dangling endpoint, vertex '" + rest[0] +
                             "' not declared",
                         lineno);
      if (!tgt_ok)
        throw ParseError("arrow '" + id + "': dangling endpoint, vertex '" + rest[2] +
                             "' not declared",
                         lineno);
      arrows.emplace_back(id, rest[0], rest[2]);
      saw_any = true;
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineno);
    }
  }
  return Quiver(name, std::move(vertices), std::move(arrows));
}

Quiver quiver_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  std::string name = j.value("name", "");
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& a : j.at("arrows"))
    arrows.emplace_back(a.at("id").get<std::string>(), a.at("src").get<std::string>(),
                        a.at("tgt").get<std::string>());
  return Quiver(std::move(name), std::move(vertices), std::move(arrows));
}

std::string serialize(const Quiver& q, QuiverFormat format) {
  switch (format) {
    case QuiverFormat::Text: {
      std::string out;
      if (!q.name().empty()) out += "quiver " + q.name() + "\n";
      for (const auto& v : q.vertices()) out += "vertex " + v + "\n";
      for (const auto& a : q.arrows())
        out += "arrow " + a.id + ": " + q.vertex_id(a.src) + " -> " + q.vertex_id(a.tgt) + "\n";
      return out;
    }
    case QuiverFormat::Json: {
      json j;
      j["name"] = q.name();
      j["vertices"] = q.vertices();
      json arr = json::array();
      for (const auto& a : q.arrows())
        arr.push_back({{"id", a.id}, {"src", q.vertex_id(a.src)}, {"tgt", q.vertex_id(a.tgt)}});
      j["arrows"] = arr;
      return j.dump();
    }
    case QuiverFormat::Dot: {
      std::string out = "digraph \"" + (q.name().empty() ? std::string("Q") : q.name()) + "\" {\n";
      for (const auto& v : q.vertices()) out += "  \"" + v + "\";\n";
      for (const auto& a : q.arrows())
        out += "  \"" + q.vertex_id(a.src) + "\" -> \"" + q.vertex_id(a.tgt) + "\" [label=\"" +
               a.id + "\"];\n";
      out += "}\n";
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace qgr
