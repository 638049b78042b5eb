#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "raagqi/graph.hpp"

namespace raagqi {

/// A generator or its inverse. Letters are ordered a < a^-1 < b < b^-1 by
/// vertex index, so the canonical letter order follows the label order.
struct Letter {
  Vertex vertex = 0;
  bool inverse = false;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Parses tokens "a" and "a^-1". Throws GraphError on an unknown label.
Word parse_word(const SimplicialGraph& g, const std::vector<std::string>& tokens);
Letter parse_letter(const SimplicialGraph& g, const std::string& token);
/// Letters joined by '.', "e" for the empty word.
std::string format_word(const SimplicialGraph& g, const Word& w);
std::vector<std::string> word_tokens(const SimplicialGraph& g, const Word& w);

Word inverse(const Word& w);
VertexSet support(const Word& w);
/// Length first, then letter order.
bool shortlex_less(const Word& a, const Word& b);

/// Reduced word equal to `w`: cancels letter pairs v^e ... v^-e whose
/// separating letters all commute with v. The result is geodesic.
Word reduce(const SimplicialGraph& g, const Word& w);

/// The lexicographically least geodesic word for the element `w`. Two words
/// are equal in the group iff their normal forms are identical.
Word normal_form(const SimplicialGraph& g, const Word& w);
Word multiply(const SimplicialGraph& g, const Word& a, const Word& b);
/// Combinatorial distance in the Salvetti complex universal cover.
std::size_t word_distance(const SimplicialGraph& g, const Word& a, const Word& b);

/// Default size guard for balls and interval enumeration.
inline constexpr std::size_t kDefaultCap = 200000;

/// Elements of word length <= radius in breadth-first order (ties in
/// generator order), with Cayley-graph adjacency by single letters.
struct Ball {
  std::vector<Word> elements;
  std::vector<std::vector<std::size_t>> adjacency;
};

/// Throws CapExceeded once more than `cap` elements would be produced.
Ball ball(const SimplicialGraph& g, std::size_t radius, std::size_t cap = kDefaultCap);

/// All prefixes of geodesic words for `z`, as normal forms: the elements x
/// with |x| + |x^-1 z| = |z|. Throws CapExceeded past `cap` prefixes.
std::vector<Word> geodesic_prefixes(const SimplicialGraph& g, const Word& z,
                                    std::size_t cap = kDefaultCap);

/// Interval closure: every vertex on a geodesic between two members is a
/// member. Elements need not be in normal form.
bool is_convex(const SimplicialGraph& g, const std::vector<Word>& set,
               std::size_t cap = kDefaultCap);

/// Standard geodesics through the domain, up to parallelism: (x, v) and
/// (y, v) are parallel iff x^-1 y lies in the subgroup generated by St(v).
struct GeodesicClass {
  Vertex label = 0;
  /// Shortlex-least basepoint among the members.
  Word basepoint;
  std::vector<Word> members;
};

std::vector<GeodesicClass> geodesic_classes(const SimplicialGraph& g,
                                            const std::vector<Word>& domain);

/// z in <S1><S2>, decided by splitting off the largest prefix of z with
/// support in S1.
bool in_double_coset(const SimplicialGraph& g, const Word& z, VertexSet s1, VertexSet s2);

struct SpecialGenerator {
  Vertex label = 0;
  Word basepoint;
  /// basepoint . label . basepoint^-1
  Word conjugate;
  /// Number of domain vertices on the representative geodesic.
  std::size_t power = 1;
  /// conjugate^power
  Word element;
};

struct SpecialSubgroupResult {
  std::vector<SpecialGenerator> generators;
  SimplicialGraph defining_graph;
  std::size_t index = 1;
  /// The domain in normal form, sorted shortlex.
  std::vector<Word> domain;
};

/// Vertex label of a generator in the defining graph: "v@basepoint".
std::string generator_label(const SimplicialGraph& g, const SpecialGenerator& s);

/// Throws PreconditionError when the domain is empty or not convex.
SpecialSubgroupResult special_subgroup(const SimplicialGraph& g, const std::vector<Word>& domain,
                                       std::size_t cap = kDefaultCap);

struct TilingReport {
  std::size_t translates = 0;
  /// Pairs of distinct translating elements whose translates share a vertex.
  std::size_t overlapping_pairs = 0;
  /// Vertices within distance 1 of the domain lying in no translate.
  std::size_t uncovered = 0;
  bool ok() const { return overlapping_pairs == 0 && uncovered == 0; }
};

/// Translates of the domain by products of at most two generator powers
/// (and their inverses): pairwise disjoint and covering the 1-neighbourhood
/// of the domain.
TilingReport tiling_check(const SimplicialGraph& g, const SpecialSubgroupResult& r);

}  // namespace raagqi
