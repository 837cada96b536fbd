#include "vanhom/builders.hpp"

#include <algorithm>

#include "vanhom/errors.hpp"

namespace vanhom {

namespace {

VertexTuple sorted_copy(VertexTuple t) {
    std::sort(t.begin(), t.end());
    return t;
}

// Sign of the permutation taking `from` to `to` (same vertex set).
int permutation_sign(const VertexTuple& from, const VertexTuple& to) {
    std::vector<std::size_t> pos;
    pos.reserve(to.size());
    for (CellId v : to) pos.push_back(static_cast<std::size_t>(std::find(from.begin(), from.end(), v) - from.begin()));
    int inversions = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        for (std::size_t j = i + 1; j < pos.size(); ++j) inversions += pos[i] > pos[j] ? 1 : 0;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

void require_size(int n, const char* what) {
    if (n < 3) throw InvalidInput(std::string(what) + " needs n >= 3, got " + std::to_string(n));
}

CellId vid(int i) { return CellId{static_cast<std::uint32_t>(i)}; }

// Points on the diamond |x| + |y| = 1 at equally spaced perimeter positions.
std::vector<std::pair<Rational, Rational>> diamond_polygon(int n) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (int k = 0; k < n; ++k) {
        const Rational s(4L * k, n);  // in [0, 4)
        Rational x;
        Rational y;
        if (s < Rational(1)) {
            x = Rational(1) - s;
            y = s;
        } else if (s < Rational(2)) {
            const Rational u = s - Rational(1);
            x = -u;
            y = Rational(1) - u;
        } else if (s < Rational(3)) {
            const Rational u = s - Rational(2);
            x = u - Rational(1);
            y = -u;
        } else {
            const Rational u = s - Rational(3);
            x = u;
            y = u - Rational(1);
        }
        pts.emplace_back(x, y);
    }
    return pts;
}

enum class TorusEdge { circumferential, meridian, diagonal };

struct TorusLayout {
    std::vector<VertexTuple> simplices;
    std::vector<TorusEdge> edge_kinds;  // parallel to the edge prefix of simplices
};

TorusLayout torus_layout(int n) {
    auto v = [n](int i, int k) { return vid(((i % n + n) % n) * n + (k % n + n) % n); };
    TorusLayout out;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            out.simplices.push_back({v(i, k), v(i + 1, k)});
            out.edge_kinds.push_back(TorusEdge::circumferential);
            out.simplices.push_back({v(i, k), v(i, k + 1)});
            out.edge_kinds.push_back(TorusEdge::meridian);
            out.simplices.push_back({v(i, k), v(i + 1, k + 1)});
            out.edge_kinds.push_back(TorusEdge::diagonal);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            out.simplices.push_back({v(i, k), v(i + 1, k), v(i + 1, k + 1)});
            out.simplices.push_back({v(i, k), v(i, k + 1), v(i + 1, k + 1)});
        }
    }
    return out;
}

std::vector<CellId> vertex_range(int count) {
    std::vector<CellId> out;
    for (int i = 0; i < count; ++i) out.push_back(vid(i));
    return out;
}

struct PinchedLayout {
    std::vector<VertexTuple> simplices;
    std::vector<bool> thin;  // parallel to simplices
};

// Vertex ids: equator 0..n-1; side s in {0,1}: apex n + s*(n+1), ring
// n + s*(n+1) + 1 + k.
PinchedLayout pinched_layout(int n) {
    PinchedLayout out;
    auto eq = [n](int k) { return vid((k % n + n) % n); };
    auto apex = [n](int s) { return vid(n + s * (n + 1)); };
    auto ring = [n](int s, int k) { return vid(n + s * (n + 1) + 1 + (k % n + n) % n); };
    auto add = [&out](VertexTuple t, bool thin) {
        out.simplices.push_back(std::move(t));
        out.thin.push_back(thin);
    };
    for (int k = 0; k < n; ++k) add({eq(k), eq(k + 1)}, true);
    for (int s = 0; s < 2; ++s) {
        for (int k = 0; k < n; ++k) {
            add({apex(s), ring(s, k)}, false);
            add({ring(s, k), ring(s, k + 1)}, false);
            add({eq(k), ring(s, k)}, false);
            add({eq(k + 1), ring(s, k)}, false);
        }
    }
    for (int s = 0; s < 2; ++s) {
        for (int k = 0; k < n; ++k) {
            add({apex(s), ring(s, k), ring(s, k + 1)}, false);
            add({eq(k), eq(k + 1), ring(s, k)}, true);
            add({eq(k + 1), ring(s, k), ring(s, k + 1)}, false);
        }
    }
    return out;
}

}  // namespace

SimplicialBuild build_simplicial(const std::vector<CellId>& vertices, const std::vector<VertexTuple>& simplices) {
    SimplicialBuild out;
    std::map<VertexTuple, CellId> by_set;
    std::uint32_t next = 0;
    for (CellId v : vertices) {
        out.complex.add_cell(Cell{v, 0, {}, std::nullopt});
        out.tuples[v] = {v};
        by_set[{v}] = v;
        next = std::max(next, v.value + 1);
    }
    std::size_t top = 0;
    for (const auto& s : simplices) top = std::max(top, s.size());
    for (std::size_t size = 2; size <= top; ++size) {
        for (const auto& s : simplices) {
            if (s.size() != size) continue;
            const VertexTuple key = sorted_copy(s);
            if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
                throw InvalidInput("simplex with a repeated vertex");
            }
            if (by_set.count(key) != 0) throw InvalidInput("simplex listed twice");
            Cell cell{CellId{next++}, static_cast<int>(size) - 1, {}, std::nullopt};
            for (std::size_t i = 0; i < s.size(); ++i) {
                VertexTuple face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                auto it = by_set.find(sorted_copy(face));
                if (it == by_set.end()) throw InvalidInput("simplex list is not closed under faces");
                const int sign = (i % 2 == 0 ? 1 : -1) * permutation_sign(out.tuples.at(it->second), face);
                cell.boundary.push_back({sign, it->second});
            }
            by_set[key] = cell.id;
            out.tuples[cell.id] = s;
            out.complex.add_cell(std::move(cell));
        }
    }
    for (const auto& s : simplices) {
        if (s.size() < 2) throw InvalidInput("simplex list entries need at least two vertices");
    }
    return out;
}

AnnotatedComplex build_circle(int n, const ExtRational& rate) {
    require_size(n, "build_circle");
    std::vector<VertexTuple> edges;
    for (int i = 0; i < n; ++i) edges.push_back({vid(i), vid((i + 1) % n)});
    AnnotatedComplex out;
    out.complex = build_simplicial(vertex_range(n), edges).complex;
    for (CellId e : out.complex.cells_of_dim(1)) out.rates[e] = rate;
    return out;
}

AnnotatedComplex build_torus(const Rational& p_in, const Rational& q_in, int n) {
    require_size(n, "build_torus");
    const Rational p = std::min(p_in, q_in);
    const Rational q = std::max(p_in, q_in);
    const TorusLayout layout = torus_layout(n);
    AnnotatedComplex out;
    out.complex = build_simplicial(vertex_range(n * n), layout.simplices).complex;
    const auto edges = out.complex.cells_of_dim(1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        switch (layout.edge_kinds[e]) {
            case TorusEdge::circumferential: out.rates[edges[e]] = p; break;
            case TorusEdge::meridian: out.rates[edges[e]] = q; break;
            case TorusEdge::diagonal: out.rates[edges[e]] = p; break;
        }
    }
    for (CellId t : out.complex.cells_of_dim(2)) out.rates[t] = q;
    return out;
}

GeometricComplex torus_geometry(const Rational& p_in, const Rational& q_in, int n) {
    require_size(n, "torus_geometry");
    const Rational p = std::min(p_in, q_in);
    const Rational q = std::max(p_in, q_in);
    const auto polygon = diamond_polygon(n);
    GeometricComplex g;
    g.ambient_dim = 4;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            g.vertices[vid(i * n + k)] = {
                PuiseuxSeries::monomial(polygon[i].first, p), PuiseuxSeries::monomial(polygon[i].second, p),
                PuiseuxSeries::monomial(polygon[k].first, q), PuiseuxSeries::monomial(polygon[k].second, q)};
        }
    }
    g.simplices = torus_layout(n).simplices;
    return g;
}

PinchedSpheres build_pinched_spheres(const Rational& r, int n) {
    require_size(n, "build_pinched_spheres");
    const PinchedLayout layout = pinched_layout(n);
    PinchedSpheres out;
    const SimplicialBuild built = build_simplicial(vertex_range(3 * n + 2), layout.simplices);
    out.complex = built.complex;
    std::map<VertexTuple, bool> thin;
    for (std::size_t i = 0; i < layout.simplices.size(); ++i) thin[sorted_copy(layout.simplices[i])] = layout.thin[i];
    for (const auto& [id, tuple] : built.tuples) {
        if (tuple.size() < 2) continue;
        out.rates[id] = thin.at(sorted_copy(tuple)) ? ExtRational(r) : ExtRational(0);
    }
    for (int k = 0; k < n; ++k) out.equator.insert(vid(k));
    for (CellId e : out.complex.cells_of_dim(1)) {
        const auto& b = out.complex.cell(e).boundary;
        if (b[0].face.value < static_cast<std::uint32_t>(n) && b[1].face.value < static_cast<std::uint32_t>(n)) {
            out.equator.insert(e);
        }
    }
    return out;
}

GeometricComplex pinched_spheres_geometry(const Rational& r, int n) {
    require_size(n, "pinched_spheres_geometry");
    const auto polygon = diamond_polygon(n);
    const Rational half(1, 2);
    auto c = [](const Rational& x) { return PuiseuxSeries::constant(x); };
    GeometricComplex g;
    g.ambient_dim = 3;
    for (int k = 0; k < n; ++k) {
        g.vertices[vid(k)] = {PuiseuxSeries(), PuiseuxSeries::monomial(polygon[k].first, r),
                              PuiseuxSeries::monomial(polygon[k].second, r)};
    }
    for (int s = 0; s < 2; ++s) {
        const Rational side = s == 0 ? Rational(1) : Rational(-1);
        g.vertices[vid(n + s * (n + 1))] = {c(side), PuiseuxSeries(), PuiseuxSeries()};
        for (int k = 0; k < n; ++k) {
            g.vertices[vid(n + s * (n + 1) + 1 + k)] = {c(side * half), c(polygon[k].first * half),
                                                          c(polygon[k].second * half)};
        }
    }
    g.simplices = pinched_layout(n).simplices;
    return g;
}

}  // namespace vanhom
