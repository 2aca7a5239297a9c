#include "qgr/monomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qgr/errors.hpp"

namespace qgr {

namespace {

bool contains_subword(const std::vector<int>& word, const std::vector<int>& sub) {
  if (sub.size() > word.size()) return false;
  for (std::size_t i = 0; i + sub.size() <= word.size(); ++i)
    if (std::equal(sub.begin(), sub.end(), word.begin() + i)) return true;
  return false;
}

bool ends_with_relation(const std::vector<int>& word, const std::vector<std::vector<int>>& rels) {
  for (const auto& r : rels) {
    if (r.size() > word.size()) continue;
    if (std::equal(r.begin(), r.end(), word.end() - r.size())) return true;
  }
  return false;
}

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

}  // namespace

std::string MonomialPresentation::word_string(const std::vector<int>& word) const {
  bool single = true;
  for (const auto& g : generators)
    if (g.size() != 1) single = false;
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i && !single) s += "*";
    s += generators[word[i]];
  }
  return s;
}

ParsedAlgebra parse_algebra(const std::string& text) {
  std::vector<std::string> gens;
  std::map<std::string, int> gen_index;
  std::map<char, int> char_index;
  bool all_single = true;
  std::vector<std::pair<std::vector<int>, int>> raw_relations;  // word, line

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "gens") {
      if (!raw_relations.empty()) throw ParseError("'gens' must precede relations", lineno);
      if (toks.size() < 2) throw ParseError("expected 'gens <id> ...'", lineno);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& g = toks[i];
        for (char c : g)
          if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw ParseError("non-monomial generator '" + g + "'", lineno);
        if (gen_index.count(g)) throw ParseError("duplicate generator '" + g + "'", lineno);
        gen_index[g] = static_cast<int>(gens.size());
        if (g.size() == 1)
          char_index[g[0]] = static_cast<int>(gens.size());
        else
          all_single = false;
        gens.push_back(g);
      }
    } else if (toks[0] == "rel") {
      if (gens.empty()) throw ParseError("relation before any generators", lineno);
      if (toks.size() != 2) throw ParseError("expected 'rel <word>'", lineno);
      const std::string& w = toks[1];
      std::vector<int> word;
      if (w.find('*') != std::string::npos) {
        std::stringstream ss(w);
        std::string part;
        while (std::getline(ss, part, '*')) {
          auto it = gen_index.find(part);
          if (it == gen_index.end())
            throw ParseError("unknown generator '" + part + "' in relation", lineno);
          word.push_back(it->second);
        }
      } else {
        if (!all_single)
          throw ParseError("multi-character generators require '*'-separated relations", lineno);
        for (char c : w) {
          if (c == '+' || c == '-')
            throw ParseError("non-monomial relation '" + w + "'", lineno);
          auto it = char_index.find(c);
          if (it == char_index.end())
            throw ParseError("unknown generator '" + std::string(1, c) + "' in relation", lineno);
          word.push_back(it->second);
        }
      }
      if (word.size() < 2)
        throw ParseError("relation '" + w + "' has length < 2", lineno);
      raw_relations.emplace_back(std::move(word), lineno);
    } else {
      throw ParseError("unknown directive '" + toks[0] + "'", lineno);
    }
  }

  ParsedAlgebra out;
  out.presentation.generators = gens;
  // Reduce: drop any relation containing another (or a duplicate).
  for (std::size_t i = 0; i < raw_relations.size(); ++i) {
    const auto& [word, ln] = raw_relations[i];
    bool redundant = false;
    for (std::size_t j = 0; j < raw_relations.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& other = raw_relations[j].first;
      if (other.size() < word.size() && contains_subword(word, other)) redundant = true;
      if (other == word && j < i) redundant = true;
    }
    if (redundant)
      out.warnings.push_back("line " + std::to_string(ln) + ": redundant relation '" +
                             out.presentation.word_string(word) + "' dropped");
    else
      out.presentation.relations.push_back(word);
  }
  return out;
}

Quiver ufnarovskii_graph(const MonomialPresentation& a) {
  const int g = static_cast<int>(a.generators.size());
  if (a.relations.empty()) {
    // free algebra: one vertex (the empty word), one loop per generator
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (const auto& gen : a.generators) arrows.emplace_back(gen, "1", "1");
    return Quiver("", {"1"}, std::move(arrows));
  }
  std::size_t d = 0;
  for (const auto& r : a.relations) d = std::max(d, r.size());

  // Normal words of lengths d-1 and d, grown letter by letter; a word
  // is normal iff no relation occurs as a subword, so checking new
  // suffixes while extending is enough.
  std::vector<std::vector<int>> frontier{{}};
  std::vector<std::vector<int>> words_short;
  for (std::size_t len = 1; len <= d; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int c = 0; c < g; ++c) {
        std::vector<int> w2 = w;
        w2.push_back(c);
        if (!ends_with_relation(w2, a.relations)) next.push_back(std::move(w2));
      }
    if (next.size() > 1'000'000) throw ExplosionCap("too many normal words");
    if (len == d - 1) words_short = next;
    frontier = std::move(next);
  }

  std::vector<std::string> vertices;
  for (const auto& w : words_short) vertices.push_back(a.word_string(w));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& w : frontier) {
    std::vector<int> prefix(w.begin(), w.end() - 1);
    std::vector<int> suffix(w.begin() + 1, w.end());
    arrows.emplace_back(a.word_string(w), a.word_string(prefix), a.word_string(suffix));
  }
  return Quiver("", std::move(vertices), std::move(arrows));
}

ExtQuiver ext_quiver_of_algebra(const MonomialPresentation& a) {
  return ext_quiver(ufnarovskii_graph(a));
}

}  // namespace qgr
