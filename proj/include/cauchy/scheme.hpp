#ifndef CAUCHY_SCHEME_HPP
#define CAUCHY_SCHEME_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cauchy/complex.hpp"
#include "cauchy/rational.hpp"
#include "cauchy/union_find.hpp"

namespace cauchy {

/// One oriented letter of a boundary edge word. `inverted` means the label's
/// arrow runs against the boundary traversal direction.
struct WordToken {
  std::string label;
  bool inverted = false;
  bool operator==(const WordToken& o) const = default;
};

using EdgeWord = std::vector<WordToken>;

/// Parses "a b a- b-" style words: tokens are labels with an optional trailing
/// '-' marking inversion. Each label may occur at most twice.
EdgeWord parse_word(const std::string& text);
std::string word_str(const EdgeWord& w);

/// A triangulated disc with an optional straight-line embedding and an edge
/// word identifying boundary simplices. Token i belongs to boundary edge i
/// (boundary_edges[i] joins boundary_verts[i] and boundary_verts[i+1]).
/// An empty word is the trivial scheme.
struct PlanarPolygon {
  Complex cx;
  bool has_coords = false;
  std::vector<Vec2> coords;
  std::vector<VertexId> boundary_verts;
  std::vector<EdgeId> boundary_edges;
  EdgeWord word;

  bool trivial_scheme() const { return word.empty(); }
};

/// Rebuilds the boundary cycle from edge incidence. Counterclockwise when
/// coordinates are present, lowest-id deterministic orientation otherwise;
/// `start` rotates the cycle to begin at that vertex.
void rebuild_boundary(PlanarPolygon& p, std::optional<VertexId> start = std::nullopt);

/// Disc + scheme structural checks; `check_embedding` additionally verifies
/// positive triangle areas and pairwise disjoint interiors.
ValidationReport validate_polygon(const PlanarPolygon& p, bool check_embedding);

/// An edge gluing instruction: edges a and b are identified so that the arrow
/// tail of a maps to the arrow tail of b.
struct GluePair {
  EdgeId a;
  VertexId a_tail;
  EdgeId b;
  VertexId b_tail;
};

struct QuotientResult {
  Complex cx;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

Complex quotient_by_pairs(const Complex& cx, const std::vector<GluePair>& pairs,
                          QuotientResult* full = nullptr);

/// The gluing pairs induced by a polygon's word.
std::vector<GluePair> scheme_glue_pairs(const PlanarPolygon& p);

/// The quotient complex of Definition 1(3): paired boundary edges merged
/// respecting orientation, vertex identifications closed transitively,
/// triangle count unchanged.
Complex quotient(const PlanarPolygon& p);
Complex quotient(const PlanarPolygon& p, QuotientResult& full);

/// n0 - n1 over the identified classes of the boundary subcomplex K0.
std::int64_t boundary_chi(const PlanarPolygon& p);

/// A complex whose boundary edges may carry gluing labels; the intermediate
/// representation for surface cutting (a single cut of a closed surface along
/// a cycle leaves two boundary circles, which no single polygon word holds).
struct EdgeLabelRef {
  std::string label;
  VertexId tail;  // arrow tail vertex
};

struct LabeledComplex {
  Complex cx;
  std::unordered_map<EdgeId, EdgeLabelRef> labels;
};

Complex quotient_labeled(const LabeledComplex& lc, QuotientResult* full = nullptr);

LabeledComplex as_labeled(const PlanarPolygon& p);

/// Finalizes a labeled complex whose boundary is a single cycle into a
/// polygon; unlabeled boundary edges receive fresh distinct labels.
PlanarPolygon to_polygon(const LabeledComplex& lc,
                         const std::vector<Vec2>* coords = nullptr);

}  // namespace cauchy

#endif
