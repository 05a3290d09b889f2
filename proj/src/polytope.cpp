#include "qhtoric/polytope.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qhtoric/errors.hpp"

namespace qhtoric {

namespace {

Rational cross_q(const Vec2Q& a, const Vec2Q& b) { return a.x * b.y - a.y * b.x; }

Vec2Q sub(const Vec2Q& a, const Vec2Q& b) { return {a.x - b.x, a.y - b.y}; }

Integer cross_z(const Vec2Z& a, const Vec2Z& b) { return a.x * b.y - a.y * b.x; }

Vec2Z sub(const Vec2Z& a, const Vec2Z& b) { return {a.x - b.x, a.y - b.y}; }

std::string vec_str(const Vec2Q& v) { return "(" + rat_str(v.x) + ", " + rat_str(v.y) + ")"; }

std::string vec_str(const Vec2Z& v) {
  return "(" + v.x.get_str() + ", " + v.y.get_str() + ")";
}

// Primitive integer vector in the direction of the rational vector (x, y).
Vec2Z primitive_direction(const Rational& x, const Rational& y) {
  Integer den = int_lcm(x.get_den(), y.get_den());
  Integer ax = x.get_num() * (den / x.get_den());
  Integer ay = y.get_num() * (den / y.get_den());
  Integer g = int_gcd(ax, ay);
  if (g == 0) throw InternalError("primitive_direction: zero vector");
  return {ax / g, ay / g};
}

}  // namespace

MomentPolytope build_polytope(std::vector<Vec2Q> vs) {
  const std::size_t l = vs.size();
  if (l < 3) throw ValidationError("a polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      if (vs[i] == vs[j])
        throw ValidationError("repeated vertex " + vec_str(vs[i]));

  // Orientation and strict convexity from the turns at every vertex.
  int orient = 0;
  for (std::size_t i = 0; i < l; ++i) {
    Vec2Q e1 = sub(vs[(i + 1) % l], vs[i]);
    Vec2Q e2 = sub(vs[(i + 2) % l], vs[(i + 1) % l]);
    int s = rat_sign(cross_q(e1, e2));
    if (s == 0)
      throw ValidationError("vertex " + vec_str(vs[(i + 1) % l]) +
                            " is collinear with its neighbors");
    if (orient == 0) orient = s;
    else if (orient != s)
      throw ValidationError("vertices do not bound a convex polygon");
  }
  if (orient > 0) std::reverse(vs.begin() + 1, vs.end());  // make clockwise, keep vs[0]

  auto facet_normal = [&](std::size_t i) {
    Vec2Q d = sub(vs[(i + 1) % l], vs[i]);
    return primitive_direction(d.y, -d.x);  // inward for a clockwise boundary
  };

  // Start numbering at a horizontal top edge when there is one.
  for (std::size_t i = 0; i < l; ++i) {
    Vec2Z e = facet_normal(i);
    if (e.x == 0 && e.y == -1) {
      std::rotate(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(i), vs.end());
      break;
    }
  }

  MomentPolytope p;
  p.vertices = vs;
  for (std::size_t i = 0; i < l; ++i) {
    Vec2Z e = facet_normal(i);
    Rational eta = Rational(e.x) * vs[i].x + Rational(e.y) * vs[i].y;
    Rational eta2 = Rational(e.x) * vs[(i + 1) % l].x + Rational(e.y) * vs[(i + 1) % l].y;
    if (eta != eta2) throw InternalError("facet support mismatch");
    p.normals.push_back(e);
    p.supports.push_back(eta);
    p.sym_supports.push_back(SymExp::constant(eta));
  }
  return p;
}

DelzantReport delzant_check(const MomentPolytope& p) {
  const std::size_t l = p.size();
  DelzantReport r;
  r.smooth = true;
  for (std::size_t i = 0; i < l; ++i) {
    const Vec2Z& prev = p.normals[(i + l - 1) % l];
    Integer det = cross_z(prev, p.normals[i]);
    r.corner_dets.push_back(det);
    if (det != 1 && det != -1) {
      r.smooth = false;
      r.bad_vertices.push_back(i);
    }
  }
  return r;
}

FanoReport fano_check(const MomentPolytope& p) {
  auto dz = delzant_check(p);
  if (!dz.smooth) {
    std::ostringstream os;
    os << "not smooth at vertex " << dz.bad_vertices.front() << " "
       << vec_str(p.vertices[dz.bad_vertices.front()]) << " (corner determinant "
       << dz.corner_dets[dz.bad_vertices.front()].get_str() << ")";
    return {false, os.str()};
  }
  const std::size_t l = p.size();
  for (std::size_t i = 0; i < l; ++i) {
    const Vec2Z& a = p.normals[(i + l - 1) % l];
    const Vec2Z& b = p.normals[i];
    const Vec2Z& c = p.normals[(i + 1) % l];
    Integer turn = cross_z(sub(b, a), sub(c, b));
    if (turn == 0)
      return {false, "normal " + vec_str(b) + " of facet " + std::to_string(i) +
                         " lies on the segment between its neighbors"};
    if (turn > 0)
      return {false, "normals are not in convex position at facet " + std::to_string(i)};
  }
  return {true, ""};
}

std::string tag_name(FanoTag tag) {
  switch (tag) {
    case FanoTag::CP2: return "CP2";
    case FanoTag::CP2Bl1: return "CP2_bl1";
    case FanoTag::CP2Bl2: return "CP2_bl2";
    case FanoTag::CP2Bl3: return "CP2_bl3";
    case FanoTag::S2xS2: return "S2xS2";
  }
  throw InternalError("unknown tag");
}

const std::vector<Vec2Z>& fano_template(FanoTag tag) {
  static const std::vector<Vec2Z> cp2{{0, 1}, {1, 0}, {-1, -1}};
  static const std::vector<Vec2Z> bl1{{0, 1}, {1, 1}, {1, 0}, {-1, -1}};
  static const std::vector<Vec2Z> bl2{{0, -1}, {-1, -1}, {-1, 0}, {0, 1}, {1, 0}};
  static const std::vector<Vec2Z> bl3{{0, -1}, {-1, -1}, {-1, 0}, {0, 1}, {1, 1}, {1, 0}};
  static const std::vector<Vec2Z> s2s2{{0, 1}, {1, 0}, {0, -1}, {-1, 0}};
  switch (tag) {
    case FanoTag::CP2: return cp2;
    case FanoTag::CP2Bl1: return bl1;
    case FanoTag::CP2Bl2: return bl2;
    case FanoTag::CP2Bl3: return bl3;
    case FanoTag::S2xS2: return s2s2;
  }
  throw InternalError("unknown tag");
}

Classification classify_fano(const MomentPolytope& p) {
  auto fr = fano_check(p);
  if (!fr.fano) throw ValidationError("not a smooth Fano polygon: " + fr.reason);

  const std::size_t l = p.size();
  static const FanoTag all_tags[] = {FanoTag::CP2, FanoTag::CP2Bl1, FanoTag::CP2Bl2,
                                     FanoTag::CP2Bl3, FanoTag::S2xS2};
  for (FanoTag tag : all_tags) {
    const auto& T = fano_template(tag);
    if (T.size() != l) continue;
    for (int rev = 0; rev < 2; ++rev) {
      std::vector<Vec2Z> C = p.normals;
      if (rev) std::reverse(C.begin(), C.end());
      for (std::size_t k = 0; k < l; ++k) {
        const Vec2Z& c0 = C[k];
        const Vec2Z& c1 = C[(k + 1) % l];
        Integer det = cross_z(c0, c1);
        if (det != 1 && det != -1) continue;  // cannot happen for smooth input
        // u = [T0 T1] * [c0 c1]^-1, integral because det is a unit.
        std::array<Integer, 4> u{
            (T[0].x * c1.y - T[1].x * c0.y) / det,
            (T[1].x * c0.x - T[0].x * c1.x) / det,
            (T[0].y * c1.y - T[1].y * c0.y) / det,
            (T[1].y * c0.x - T[0].y * c1.x) / det,
        };
        bool ok = true;
        for (std::size_t i = 0; i < l && ok; ++i) {
          const Vec2Z& ci = C[(k + i) % l];
          ok = (u[0] * ci.x + u[1] * ci.y == T[i].x) && (u[2] * ci.x + u[3] * ci.y == T[i].y);
        }
        if (ok) return {tag, u, k, rev != 0};
      }
    }
  }
  throw InternalError("smooth Fano polygon did not match any template");
}

}  // namespace qhtoric
