#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qhtoric/rational.hpp"
#include "qhtoric/symexp.hpp"

namespace qhtoric {

struct Vec2Q {
  Rational x;
  Rational y;
  bool operator==(const Vec2Q& o) const { return x == o.x && y == o.y; }
};

struct Vec2Z {
  Integer x;
  Integer y;
  bool operator==(const Vec2Z& o) const { return x == o.x && y == o.y; }
};

// Convex rational polygon with primitive inward facet normals.
//
// Vertices are stored clockwise and facet i runs from vertices[i] to
// vertices[(i+1) % size()].  When some facet has inward normal (0,-1), i.e. a
// horizontal top edge, the numbering starts there; otherwise it starts at the
// first input vertex.  supports[i] = <normals[i], p> for p on facet i, so the
// polygon is { p : <normals[i], p> >= supports[i] for all i }.
//
// sym_supports carries the same support numbers as symbolic expressions; the
// standard models override them with their size parameters (eps, delta, ...)
// so downstream rewriting stays exact in the parameters.
struct MomentPolytope {
  std::vector<Vec2Q> vertices;
  std::vector<Vec2Z> normals;
  std::vector<Rational> supports;
  std::vector<SymExp> sym_supports;

  std::size_t size() const { return vertices.size(); }
};

// Validates (>= 3 distinct vertices, strictly convex) and canonicalizes.
MomentPolytope build_polytope(std::vector<Vec2Q> vertices);

// Smoothness: at every vertex the two adjacent facet normals must span the
// integer lattice.  corner_dets[i] is det[normal_{i-1}, normal_i] at vertex i
// (always -1 at a smooth vertex in the clockwise convention).
struct DelzantReport {
  bool smooth = false;
  std::vector<Integer> corner_dets;
  std::vector<std::size_t> bad_vertices;
};

DelzantReport delzant_check(const MomentPolytope& p);

// Smooth plus: the normals, read as lattice points, are in strictly convex
// position (each one is a vertex of their convex hull).
struct FanoReport {
  bool fano = false;
  std::string reason;  // empty when fano holds
};

FanoReport fano_check(const MomentPolytope& p);

enum class FanoTag { CP2, CP2Bl1, CP2Bl2, CP2Bl3, S2xS2 };

std::string tag_name(FanoTag tag);

// Which of the five smooth Fano polygons this is, together with the witness:
// an integer matrix u (row major, det +-1) and a rotation/reflection of the
// stored normal cycle with  u * cycle[(shift + i) % l] = template[i].
struct Classification {
  FanoTag tag;
  std::array<Integer, 4> u{};
  std::size_t shift = 0;
  bool reversed = false;
};

// Throws ValidationError when the polygon is not smooth Fano.
Classification classify_fano(const MomentPolytope& p);

// The template normal cycle classify_fano matches against (clockwise).
const std::vector<Vec2Z>& fano_template(FanoTag tag);

}  // namespace qhtoric
