#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "packingcell/errors.hpp"

namespace packingcell {

// Geometric predicate tolerance. All quantities in this library are O(1)
// (unit sphere radius 1, touching distance 2), so a single absolute
// tolerance is adequate.
inline constexpr double kEps = 1e-9;
// Tolerance for pure algebraic identities (closed forms, round trips).
inline constexpr double kAlgebraEps = 1e-12;

struct Vector3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vector3() = default;
    Vector3(double x_, double y_, double z_);

    Vector3 operator+(const Vector3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vector3 operator-(const Vector3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vector3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vector3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vector3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vector3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vector3 cross(const Vector3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    double norm2() const { return dot(*this); }
    Vector3 normalized() const;

    bool operator==(const Vector3&) const = default;
};

inline Vector3 operator*(double s, const Vector3& v) { return v * s; }

// Lexicographic (x, y, z) order; used for canonical vertex numbering.
bool lex_less(const Vector3& a, const Vector3& b);

// Oriented plane constraint { p : normal . p <= offset }, normal unit length.
struct Halfspace {
    Vector3 normal;
    double offset = 0.0;

    Halfspace() = default;
    Halfspace(const Vector3& n, double d);

    // Signed distance of p to the plane; negative inside.
    double signed_distance(const Vector3& p) const { return normal.dot(p) - offset; }
};

// Bounded convex body in vertex/face form. Faces are vertex-index cycles
// ordered counter-clockwise as seen from outside, each starting at its
// smallest vertex index.
struct ConvexPolyhedron {
    std::vector<Vector3> vertices;
    std::vector<std::vector<int>> faces;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t face_count() const { return faces.size(); }
    std::size_t edge_count() const;

    // Outward unit normal of face f (Newell's method over the cycle).
    Vector3 face_normal(std::size_t f) const;
    // Supporting plane of face f as a halfspace containing the body.
    Halfspace face_plane(std::size_t f) const;
    std::vector<Halfspace> supporting_halfspaces() const;

    Vector3 vertex_centroid() const;
    bool contains(const Vector3& p, double tol = kEps) const;
};

// Signed triple product a1 . (a2 x a3).
double determinant3(const Vector3& a1, const Vector3& a2, const Vector3& a3);

// Convex hull of >= 4 points, coplanar facets merged. Input points interior
// to the hull do not appear in the vertex list. Throws DegenerateInput on
// affinely dependent input.
ConvexPolyhedron convex_hull(const std::vector<Vector3>& points);

// Intersection of halfspaces via the dual-point transform about `interior`.
// Throws InfeasibleInterior if `interior` has slack <= kEps against some
// constraint, Unbounded if the intersection has a recession direction.
ConvexPolyhedron halfspace_intersection(const std::vector<Halfspace>& constraints,
                                        const Vector3& interior);

// Volume by the divergence theorem (faces fanned into triangles).
double polyhedron_volume(const ConvexPolyhedron& P);

// Solid angle subtended at `apex` by triangle abc, in [0, 2*pi).
// Orientation-independent. Throws DegenerateInput on collinear input.
double triangle_solid_angle(const Vector3& apex, const Vector3& a, const Vector3& b,
                            const Vector3& c);

// Checks all ConvexPolyhedron invariants (Euler characteristic, face
// planarity, convexity, edge manifoldness); throws DegenerateInput with a
// description of the first violation.
void validate(const ConvexPolyhedron& P);

}  // namespace packingcell
