#include "packingcell/geom3.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace packingcell {

Vector3::Vector3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
        throw std::invalid_argument("Vector3: non-finite coordinate");
}

Vector3 Vector3::normalized() const {
    const double n = norm();
    if (n < kEps) throw DegenerateInput("normalized: zero-length vector");
    return *this / n;
}

bool lex_less(const Vector3& a, const Vector3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

Halfspace::Halfspace(const Vector3& n, double d) : normal(n), offset(d) {
    if (std::abs(n.norm() - 1.0) > kAlgebraEps)
        throw std::invalid_argument("Halfspace: normal must be unit length");
    if (!std::isfinite(d)) throw std::invalid_argument("Halfspace: non-finite offset");
}

double determinant3(const Vector3& a1, const Vector3& a2, const Vector3& a3) {
    return a1.dot(a2.cross(a3));
}

std::size_t ConvexPolyhedron::edge_count() const {
    std::size_t half_edges = 0;
    for (const auto& f : faces) half_edges += f.size();
    return half_edges / 2;
}

Vector3 ConvexPolyhedron::face_normal(std::size_t f) const {
    const auto& cyc = faces[f];
    Vector3 n{};
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Vector3& a = vertices[cyc[i]];
        const Vector3& b = vertices[cyc[(i + 1) % cyc.size()]];
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    return n.normalized();
}

Halfspace ConvexPolyhedron::face_plane(std::size_t f) const {
    const Vector3 n = face_normal(f);
    double d = 0.0;
    for (int vi : faces[f]) d += n.dot(vertices[vi]);
    return Halfspace(n, d / static_cast<double>(faces[f].size()));
}

std::vector<Halfspace> ConvexPolyhedron::supporting_halfspaces() const {
    std::vector<Halfspace> hs;
    hs.reserve(faces.size());
    for (std::size_t f = 0; f < faces.size(); ++f) hs.push_back(face_plane(f));
    return hs;
}

Vector3 ConvexPolyhedron::vertex_centroid() const {
    Vector3 c{};
    for (const auto& v : vertices) c = c + v;
    return c / static_cast<double>(vertices.size());
}

bool ConvexPolyhedron::contains(const Vector3& p, double tol) const {
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (face_plane(f).signed_distance(p) > tol) return false;
    return true;
}

namespace {

// Deduplicate points that coincide within kEps. Grid-snap hashing keeps the
// pass near-linear; exact distance checks within neighboring cells decide.
std::vector<Vector3> dedup_points(const std::vector<Vector3>& points) {
    constexpr double cell = 1e-6;
    struct Key {
        std::int64_t a, b, c;
        bool operator<(const Key& o) const {
            return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
        }
    };
    std::map<Key, std::vector<int>> grid;
    std::vector<Vector3> out;
    for (const auto& p : points) {
        const Key k{static_cast<std::int64_t>(std::floor(p.x / cell)),
                    static_cast<std::int64_t>(std::floor(p.y / cell)),
                    static_cast<std::int64_t>(std::floor(p.z / cell))};
        bool dup = false;
        for (std::int64_t da = -1; da <= 1 && !dup; ++da)
            for (std::int64_t db = -1; db <= 1 && !dup; ++db)
                for (std::int64_t dc = -1; dc <= 1 && !dup; ++dc) {
                    auto it = grid.find(Key{k.a + da, k.b + db, k.c + dc});
                    if (it == grid.end()) continue;
                    for (int idx : it->second)
                        if ((out[idx] - p).norm() <= kEps) {
                            dup = true;
                            break;
                        }
                }
        if (!dup) {
            grid[k].push_back(static_cast<int>(out.size()));
            out.push_back(p);
        }
    }
    return out;
}

struct TriFace {
    std::array<int, 3> v;
    Vector3 n;  // outward unit normal
    double d;   // plane offset, n.p = d on the face
    bool alive = true;
    std::vector<int> conflicts;

    double dist(const Vector3& p) const { return n.dot(p) - d; }
};

TriFace make_face(int a, int b, int c, const std::vector<Vector3>& pts,
                  const Vector3& inside) {
    TriFace f;
    f.v = {a, b, c};
    Vector3 n = (pts[b] - pts[a]).cross(pts[c] - pts[a]);
    const double ln = n.norm();
    if (ln < 1e-14) throw DegenerateInput("convex_hull: degenerate facet");
    n = n / ln;
    double d = n.dot(pts[a]);
    if (n.dot(inside) - d > 0) {  // flip to outward
        std::swap(f.v[1], f.v[2]);
        n = -n;
        d = -d;
    }
    f.n = n;
    f.d = d;
    return f;
}

// Initial tetrahedron: spread points, throws DegenerateInput when the input
// is affinely dependent within tolerance.
std::array<int, 4> initial_simplex(const std::vector<Vector3>& pts) {
    const int n = static_cast<int>(pts.size());
    int i0 = 0, i1 = 0;
    double best = -1.0;
    // extreme pair along coordinate axes
    for (int axis = 0; axis < 3; ++axis) {
        int lo = 0, hi = 0;
        auto coord = [&](int i) {
            return axis == 0 ? pts[i].x : (axis == 1 ? pts[i].y : pts[i].z);
        };
        for (int i = 1; i < n; ++i) {
            if (coord(i) < coord(lo)) lo = i;
            if (coord(i) > coord(hi)) hi = i;
        }
        const double d = (pts[hi] - pts[lo]).norm();
        if (d > best) {
            best = d;
            i0 = lo;
            i1 = hi;
        }
    }
    if (best < kEps) throw DegenerateInput("convex_hull: all points coincide");

    const Vector3 dir = (pts[i1] - pts[i0]).normalized();
    int i2 = -1;
    best = kEps;
    for (int i = 0; i < n; ++i) {
        const Vector3 w = pts[i] - pts[i0];
        const double d = (w - dir * w.dot(dir)).norm();
        if (d > best) {
            best = d;
            i2 = i;
        }
    }
    if (i2 < 0) throw DegenerateInput("convex_hull: points are collinear");

    const Vector3 nrm = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]).normalized();
    int i3 = -1;
    best = kEps;
    for (int i = 0; i < n; ++i) {
        const double d = std::abs(nrm.dot(pts[i] - pts[i0]));
        if (d > best) {
            best = d;
            i3 = i;
        }
    }
    if (i3 < 0) throw DegenerateInput("convex_hull: points are coplanar");
    return {i0, i1, i2, i3};
}

struct Edge {
    int a, b;
    bool operator<(const Edge& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

// Union-find for the coplanar merge pass.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ConvexPolyhedron convex_hull(const std::vector<Vector3>& points) {
    const std::vector<Vector3> pts = dedup_points(points);
    if (pts.size() < 4) throw DegenerateInput("convex_hull: fewer than 4 distinct points");
    const int n = static_cast<int>(pts.size());

    const auto s = initial_simplex(pts);
    const Vector3 inside =
        (pts[s[0]] + pts[s[1]] + pts[s[2]] + pts[s[3]]) / 4.0;

    std::vector<TriFace> faces;
    faces.push_back(make_face(s[0], s[1], s[2], pts, inside));
    faces.push_back(make_face(s[0], s[1], s[3], pts, inside));
    faces.push_back(make_face(s[0], s[2], s[3], pts, inside));
    faces.push_back(make_face(s[1], s[2], s[3], pts, inside));

    std::vector<bool> used(n, false);
    for (int i : s) used[i] = true;
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        int best_f = -1;
        double best_d = kEps;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            const double d = faces[f].dist(pts[i]);
            if (d > best_d) {
                best_d = d;
                best_f = static_cast<int>(f);
            }
        }
        if (best_f >= 0) faces[best_f].conflicts.push_back(i);
    }

    // Incremental insertion of the farthest conflict point per face.
    for (;;) {
        int src = -1, pt = -1;
        double far = kEps;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].alive) continue;
            for (int c : faces[f].conflicts) {
                const double d = faces[f].dist(pts[c]);
                if (d > far) {
                    far = d;
                    src = static_cast<int>(f);
                    pt = c;
                }
            }
        }
        if (src < 0) break;

        const Vector3& p = pts[pt];
        std::vector<int> visible;
        std::vector<int> orphan;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].alive) continue;
            if (faces[f].dist(p) > kEps) {
                visible.push_back(static_cast<int>(f));
                for (int c : faces[f].conflicts)
                    if (c != pt) orphan.push_back(c);
                faces[f].alive = false;
                faces[f].conflicts.clear();
            }
        }

        // Horizon: visible-region boundary edges, oriented as in their
        // visible face so new faces inherit outward orientation.
        std::map<Edge, int> edge_use;
        for (int fi : visible)
            for (int k = 0; k < 3; ++k) {
                const int a = faces[fi].v[k], b = faces[fi].v[(k + 1) % 3];
                edge_use[Edge{std::min(a, b), std::max(a, b)}] +=
                    (a < b) ? 1 : 2;  // track orientation of sole use
            }
        std::vector<std::pair<int, int>> horizon;
        for (int fi : visible)
            for (int k = 0; k < 3; ++k) {
                const int a = faces[fi].v[k], b = faces[fi].v[(k + 1) % 3];
                const int u = edge_use[Edge{std::min(a, b), std::max(a, b)}];
                if (u == 1 || u == 2) horizon.emplace_back(a, b);
            }

        std::vector<int> fresh;
        for (auto [a, b] : horizon) {
            TriFace f = make_face(a, b, pt, pts, inside);
            fresh.push_back(static_cast<int>(faces.size()));
            faces.push_back(std::move(f));
        }
        for (int c : orphan) {
            int best_f = -1;
            double best_d = kEps;
            for (int fi : fresh) {
                const double d = faces[fi].dist(pts[c]);
                if (d > best_d) {
                    best_d = d;
                    best_f = fi;
                }
            }
            if (best_f >= 0) faces[best_f].conflicts.push_back(c);
        }
    }

    std::vector<int> live;
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (faces[f].alive) live.push_back(static_cast<int>(f));

    // Merge coplanar neighbors: same plane within kEps across a shared edge.
    Dsu dsu(static_cast<int>(live.size()));
    std::map<Edge, std::vector<int>> by_edge;
    for (std::size_t li = 0; li < live.size(); ++li) {
        const auto& f = faces[live[li]];
        for (int k = 0; k < 3; ++k) {
            const int a = f.v[k], b = f.v[(k + 1) % 3];
            by_edge[Edge{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(li));
        }
    }
    for (const auto& [e, fl] : by_edge) {
        if (fl.size() != 2) throw DegenerateInput("convex_hull: non-manifold edge");
        const auto& fa = faces[live[fl[0]]];
        const auto& fb = faces[live[fl[1]]];
        if ((fa.n - fb.n).norm() <= kEps && std::abs(fa.d - fb.d) <= kEps)
            dsu.unite(fl[0], fl[1]);
    }

    std::map<int, std::vector<int>> groups;
    for (std::size_t li = 0; li < live.size(); ++li)
        groups[dsu.find(static_cast<int>(li))].push_back(static_cast<int>(li));

    // Assemble merged face cycles from group boundary half-edges.
    std::vector<std::vector<int>> cycles;
    for (const auto& [root, members] : groups) {
        std::map<int, int> next;
        for (int li : members) {
            const auto& f = faces[live[li]];
            for (int k = 0; k < 3; ++k) {
                const int a = f.v[k], b = f.v[(k + 1) % 3];
                const auto& fl = by_edge[Edge{std::min(a, b), std::max(a, b)}];
                const int other = (fl[0] == li) ? fl[1] : fl[0];
                if (dsu.find(other) != dsu.find(li)) next[a] = b;
            }
        }
        if (next.empty()) throw DegenerateInput("convex_hull: merged group has no boundary");
        std::vector<int> cyc;
        const int start = next.begin()->first;
        int cur = start;
        do {
            cyc.push_back(cur);
            auto it = next.find(cur);
            if (it == next.end())
                throw DegenerateInput("convex_hull: merged face boundary is not a cycle");
            cur = it->second;
        } while (cur != start && cyc.size() <= next.size());
        if (cur != start || cyc.size() != next.size())
            throw DegenerateInput("convex_hull: merged face boundary is not a single cycle");
        cycles.push_back(std::move(cyc));
    }

    // Canonical form: vertices sorted lexicographically, faces rotated to
    // start at their smallest index and sorted.
    std::vector<bool> on_hull(n, false);
    for (const auto& cyc : cycles)
        for (int v : cyc) on_hull[v] = true;
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
        if (on_hull[i]) order.push_back(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return lex_less(pts[a], pts[b]); });
    std::vector<int> remap(n, -1);
    ConvexPolyhedron out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        remap[order[i]] = static_cast<int>(i);
        out.vertices.push_back(pts[order[i]]);
    }
    for (auto& cyc : cycles) {
        for (int& v : cyc) v = remap[v];
        const auto lo = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), lo, cyc.end());
        out.faces.push_back(std::move(cyc));
    }
    std::sort(out.faces.begin(), out.faces.end());

    validate(out);
    return out;
}

ConvexPolyhedron halfspace_intersection(const std::vector<Halfspace>& constraints,
                                        const Vector3& interior) {
    if (constraints.size() < 4)
        throw Unbounded("halfspace_intersection: fewer than 4 constraints");
    std::vector<Vector3> dual;
    dual.reserve(constraints.size());
    for (const auto& h : constraints) {
        const double slack = h.offset - h.normal.dot(interior);
        if (slack <= kEps)
            throw InfeasibleInterior("halfspace_intersection: interior violates a constraint");
        dual.push_back(h.normal / slack);
    }

    ConvexPolyhedron dual_hull;
    try {
        dual_hull = convex_hull(dual);
    } catch (const DegenerateInput&) {
        // affinely dependent dual points <=> a recession direction exists
        throw Unbounded("halfspace_intersection: intersection is unbounded");
    }

    // Bounded iff the dual origin is strictly inside the dual hull.
    std::vector<Vector3> verts;
    for (std::size_t f = 0; f < dual_hull.face_count(); ++f) {
        const Halfspace plane = dual_hull.face_plane(f);
        if (plane.offset <= kEps)
            throw Unbounded("halfspace_intersection: intersection is unbounded");
        verts.push_back(plane.normal / plane.offset + interior);
    }
    return convex_hull(verts);
}

double polyhedron_volume(const ConvexPolyhedron& P) {
    double vol = 0.0;
    for (const auto& cyc : P.faces) {
        const Vector3& v0 = P.vertices[cyc[0]];
        for (std::size_t i = 1; i + 1 < cyc.size(); ++i) {
            const Vector3& v1 = P.vertices[cyc[i]];
            const Vector3& v2 = P.vertices[cyc[i + 1]];
            const Vector3 area2 = (v1 - v0).cross(v2 - v0);  // 2 * area * normal
            const Vector3 centroid = (v0 + v1 + v2) / 3.0;
            vol += centroid.dot(area2) / 6.0;  // (1/3) * centroid.n * area
        }
    }
    return vol;
}

double triangle_solid_angle(const Vector3& apex, const Vector3& a, const Vector3& b,
                            const Vector3& c) {
    const Vector3 va = a - apex, vb = b - apex, vc = c - apex;
    const double la = va.norm(), lb = vb.norm(), lc = vc.norm();
    if (la < kEps || lb < kEps || lc < kEps)
        throw DegenerateInput("triangle_solid_angle: vertex coincides with apex");
    if ((b - a).cross(c - a).norm() < kEps * std::max({la, lb, lc}))
        throw DegenerateInput("triangle_solid_angle: collinear triangle");

    // Van Oosterom-Strackee; |triple| makes the result orientation-free.
    const double triple = std::abs(determinant3(va, vb, vc));
    const double denom =
        la * lb * lc + va.dot(vb) * lc + va.dot(vc) * lb + vb.dot(vc) * la;
    if (triple < kEps * la * lb * lc && denom <= 0.0)
        throw DegenerateInput("triangle_solid_angle: apex in the triangle plane");
    return 2.0 * std::atan2(triple, denom);
}

void validate(const ConvexPolyhedron& P) {
    const std::size_t V = P.vertex_count(), F = P.face_count();
    if (V < 4 || F < 4) throw DegenerateInput("polyhedron: too few vertices or faces");

    std::map<std::pair<int, int>, int> directed;
    std::size_t half_edges = 0;
    for (const auto& cyc : P.faces) {
        if (cyc.size() < 3) throw DegenerateInput("polyhedron: face with < 3 vertices");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a < 0 || b < 0 || a >= static_cast<int>(V) || b >= static_cast<int>(V) ||
                a == b)
                throw DegenerateInput("polyhedron: bad face index");
            if (++directed[{a, b}] > 1)
                throw DegenerateInput("polyhedron: duplicated directed edge");
            ++half_edges;
        }
    }
    for (const auto& [e, cnt] : directed)
        if (directed.find({e.second, e.first}) == directed.end())
            throw DegenerateInput("polyhedron: edge not shared by exactly two faces");
    const std::size_t E = half_edges / 2;
    if (V + F != E + 2) throw DegenerateInput("polyhedron: Euler characteristic violated");

    for (std::size_t f = 0; f < F; ++f) {
        const Halfspace plane = P.face_plane(f);
        for (int vi : P.faces[f])
            if (std::abs(plane.signed_distance(P.vertices[vi])) > kEps)
                throw DegenerateInput("polyhedron: non-planar face");
        for (const auto& v : P.vertices)
            if (plane.signed_distance(v) > kEps)
                throw DegenerateInput("polyhedron: convexity violated");
    }
}

}  // namespace packingcell
