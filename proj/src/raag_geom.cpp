#include "raagqi/raag_geom.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace raagqi {
namespace {

bool commute(const SimplicialGraph& g, Letter a, Letter b) {
  return a.vertex != b.vertex && g.adjacent(a.vertex, b.vertex);
}

Letter inverted(Letter l) { return {l.vertex, !l.inverse}; }

}  // namespace

Letter parse_letter(const SimplicialGraph& g, const std::string& token) {
  constexpr std::string_view suffix = "^-1";
  if (token.size() > suffix.size() && token.ends_with(suffix)) {
    return {g.index_of(token.substr(0, token.size() - suffix.size())), true};
  }
  return {g.index_of(token), false};
}

Word parse_word(const SimplicialGraph& g, const std::vector<std::string>& tokens) {
  Word w;
  for (const auto& t : tokens) w.push_back(parse_letter(g, t));
  return w;
}

std::vector<std::string> word_tokens(const SimplicialGraph& g, const Word& w) {
  std::vector<std::string> out;
  for (auto l : w) out.push_back(g.label(l.vertex) + (l.inverse ? "^-1" : ""));
  return out;
}

std::string format_word(const SimplicialGraph& g, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& t : word_tokens(g, w)) {
    if (!out.empty()) out += '.';
    out += t;
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverted(*it));
  return out;
}

VertexSet support(const Word& w) {
  VertexSet s;
  for (auto l : w) s.insert(l.vertex);
  return s;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Word reduce(const SimplicialGraph& g, const Word& w) {
  Word out;
  for (auto l : w) {
    check_vertex(g, l.vertex);
    bool cancelled = false;
    for (std::size_t j = out.size(); j-- > 0;) {
      if (out[j].vertex == l.vertex) {
        if (out[j].inverse != l.inverse) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
        }
        break;
      }
      if (!commute(g, out[j], l)) break;
    }
    if (!cancelled) out.push_back(l);
  }
  return out;
}

Word normal_form(const SimplicialGraph& g, const Word& w) {
  Word rest = reduce(g, w);
  Word out;
  out.reserve(rest.size());
  // Greedy lex-least linearisation of the trace: at each step take the least
  // letter that every earlier remaining letter commutes with.
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      bool available = true;
      for (std::size_t j = 0; j < i && available; ++j) available = commute(g, rest[j], rest[i]);
      if (available && rest[i] < rest[best]) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Word multiply(const SimplicialGraph& g, const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normal_form(g, w);
}

std::size_t word_distance(const SimplicialGraph& g, const Word& a, const Word& b) {
  return reduce(g, multiply(g, inverse(a), b)).size();
}

Ball ball(const SimplicialGraph& g, std::size_t radius, std::size_t cap) {
  Ball b;
  std::map<Word, std::size_t> index;
  std::vector<std::size_t> depth;
  auto add = [&](Word w, std::size_t d) {
    if (b.elements.size() >= cap) {
      throw CapExceeded("ball exceeds the cap of " + std::to_string(cap) + " elements");
    }
    index.emplace(w, b.elements.size());
    b.elements.push_back(std::move(w));
    b.adjacency.emplace_back();
    depth.push_back(d);
  };
  add({}, 0);
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    for (Vertex v = 0; v < g.order(); ++v) {
      for (bool inv : {false, true}) {
        Word next = multiply(g, b.elements[i], {{v, inv}});
        auto it = index.find(next);
        if (it == index.end()) {
          if (depth[i] == radius) continue;
          add(std::move(next), depth[i] + 1);
          it = index.find(b.elements.back());
        }
        if (it->second > i) {
          b.adjacency[i].push_back(it->second);
          b.adjacency[it->second].push_back(i);
        }
      }
    }
  }
  return b;
}

std::vector<Word> geodesic_prefixes(const SimplicialGraph& g, const Word& z, std::size_t cap) {
  const Word r = reduce(g, z);
  const std::size_t n = r.size();
  // A prefix is a downward-closed set of positions in the trace of r.
  std::set<std::vector<bool>> seen{std::vector<bool>(n, false)};
  std::deque<std::vector<bool>> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    auto taken = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      bool available = true;
      for (std::size_t j = 0; j < i && available; ++j) {
        if (!taken[j] && !commute(g, r[j], r[i])) available = false;
      }
      if (!available) continue;
      auto next = taken;
      next[i] = true;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw CapExceeded("interval exceeds the cap of " + std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Word> out;
  for (const auto& taken : seen) {
    Word p;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) p.push_back(r[i]);
    }
    out.push_back(normal_form(g, p));
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

bool is_convex(const SimplicialGraph& g, const std::vector<Word>& set, std::size_t cap) {
  std::set<Word> members;
  for (const auto& w : set) members.insert(normal_form(g, w));
  for (const auto& u : members) {
    for (const auto& w : members) {
      if (!(u < w)) continue;
      for (const auto& p : geodesic_prefixes(g, multiply(g, inverse(u), w), cap)) {
        if (!members.count(multiply(g, u, p))) return false;
      }
    }
  }
  return true;
}

std::vector<GeodesicClass> geodesic_classes(const SimplicialGraph& g,
                                            const std::vector<Word>& domain) {
  std::set<Word, decltype(&shortlex_less)> points(&shortlex_less);
  for (const auto& w : domain) points.insert(normal_form(g, w));
  std::vector<GeodesicClass> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet st = star(g, v);
    std::vector<GeodesicClass> classes;
    for (const auto& x : points) {
      auto it = std::find_if(classes.begin(), classes.end(), [&](const GeodesicClass& c) {
        return support(multiply(g, inverse(c.basepoint), x)).is_subset_of(st);
      });
      if (it == classes.end()) {
        classes.push_back({v, x, {x}});
      } else {
        it->members.push_back(x);
      }
    }
    out.insert(out.end(), classes.begin(), classes.end());
  }
  return out;
}

bool in_double_coset(const SimplicialGraph& g, const Word& z, VertexSet s1, VertexSet s2) {
  const Word r = reduce(g, z);
  std::vector<bool> prefix(r.size(), false);
  Word remainder;
  for (std::size_t i = 0; i < r.size(); ++i) {
    bool ok = s1.contains(r[i].vertex);
    for (std::size_t j = 0; j < i && ok; ++j) {
      if (!prefix[j] && !commute(g, r[j], r[i])) ok = false;
    }
    prefix[i] = ok;
    if (!ok) remainder.push_back(r[i]);
  }
  return support(remainder).is_subset_of(s2);
}

std::string generator_label(const SimplicialGraph& g, const SpecialGenerator& s) {
  return g.label(s.label) + "@" + format_word(g, s.basepoint);
}

SpecialSubgroupResult special_subgroup(const SimplicialGraph& g, const std::vector<Word>& domain,
                                       std::size_t cap) {
  if (domain.empty()) throw PreconditionError("domain is empty");
  if (!is_convex(g, domain, cap)) throw PreconditionError("domain is not convex");
  SpecialSubgroupResult r;
  std::set<Word> points;
  for (const auto& w : domain) points.insert(normal_form(g, w));
  r.domain.assign(points.begin(), points.end());
  std::sort(r.domain.begin(), r.domain.end(), shortlex_less);
  r.index = r.domain.size();

  for (const auto& c : geodesic_classes(g, r.domain)) {
    SpecialGenerator s;
    s.label = c.label;
    s.basepoint = c.basepoint;
    s.conjugate = normal_form(g, [&] {
      Word w = c.basepoint;
      w.push_back({c.label, false});
      const Word inv = inverse(c.basepoint);
      w.insert(w.end(), inv.begin(), inv.end());
      return w;
    }());
    s.power = 1;
    for (bool inv : {false, true}) {
      Word x = c.basepoint;
      while (true) {
        x = multiply(g, x, {{c.label, inv}});
        if (!points.count(x)) break;
        ++s.power;
      }
    }
    Word e;
    for (std::size_t k = 0; k < s.power; ++k) e.insert(e.end(), s.conjugate.begin(), s.conjugate.end());
    s.element = normal_form(g, e);
    r.generators.push_back(std::move(s));
  }

  std::vector<std::string> labels;
  for (const auto& s : r.generators) labels.push_back(generator_label(g, s));
  std::vector<LabelEdge> edges;
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < r.generators.size(); ++j) {
      const auto& a = r.generators[i];
      const auto& b = r.generators[j];
      if (!g.adjacent(a.label, b.label)) continue;
      const Word z = multiply(g, inverse(a.basepoint), b.basepoint);
      if (in_double_coset(g, z, star(g, a.label), star(g, b.label))) {
        edges.emplace_back(labels[i], labels[j]);
      }
    }
  }
  r.defining_graph = SimplicialGraph::from_labels(labels, edges);
  return r;
}

TilingReport tiling_check(const SimplicialGraph& g, const SpecialSubgroupResult& r) {
  std::vector<Word> letters;
  for (const auto& s : r.generators) {
    letters.push_back(s.element);
    letters.push_back(inverse(s.element));
  }
  std::set<Word> translators{Word{}};
  for (const auto& a : letters) {
    translators.insert(normal_form(g, a));
    for (const auto& b : letters) translators.insert(multiply(g, a, b));
  }

  TilingReport rep;
  rep.translates = translators.size();
  std::map<Word, std::size_t> owner;
  std::set<std::pair<std::size_t, std::size_t>> overlaps;
  std::size_t t = 0;
  for (const auto& h : translators) {
    for (const auto& k : r.domain) {
      auto [it, fresh] = owner.emplace(multiply(g, h, k), t);
      if (!fresh) overlaps.emplace(it->second, t);
    }
    ++t;
  }
  rep.overlapping_pairs = overlaps.size();
  std::set<Word> neighbourhood(r.domain.begin(), r.domain.end());
  for (const auto& k : r.domain) {
    for (Vertex v = 0; v < g.order(); ++v) {
      for (bool inv : {false, true}) neighbourhood.insert(multiply(g, k, {{v, inv}}));
    }
  }
  for (const auto& x : neighbourhood) {
    if (!owner.count(x)) ++rep.uncovered;
  }
  return rep;
}

}  // namespace raagqi
