#pragma once

#include <map>
#include <vector>

#include "vanhom/complex.hpp"
#include "vanhom/puiseux.hpp"

namespace vanhom {

using VertexTuple = std::vector<CellId>;

/// Simplicial complex whose vertices carry coordinates in the Puiseux field.
/// Orientation of a simplex is given by the order of its vertex tuple.
struct GeometricComplex {
    int ambient_dim = 0;
    std::map<CellId, std::vector<PuiseuxSeries>> vertices;
    std::vector<VertexTuple> simplices;
};

/// Cell complex produced from a list of ordered simplices, together with the
/// vertex tuple of every cell.
struct SimplicialBuild {
    CellComplex complex;
    std::map<CellId, VertexTuple> tuples;
};

/// Vertices keep their ids. Simplices of dimension >= 1 receive fresh ids
/// starting right after the largest vertex id, ordered by dimension and then
/// by position in `simplices`. The boundary of [v0..vk] is
/// sum_i (-1)^i [v0..^vi..vk], re-signed when the listed face uses a
/// different vertex order. Throws InvalidInput when a face is missing or a
/// tuple repeats a vertex.
SimplicialBuild build_simplicial(const std::vector<CellId>& vertices, const std::vector<VertexTuple>& simplices);

/// Polygon with n vertices and n edges, every edge annotated with `rate`.
AnnotatedComplex build_circle(int n, const ExtRational& rate);

/// n x n product triangulation of the torus S^1(T^p) x S^1(T^q).
///
/// Vertex (i,k) has id i*n + k; i runs along the radius-T^p circle and k
/// along the radius-T^q circle. Edge rates: circumferential p, meridian q,
/// diagonal min(p,q); triangles max(p,q). p and q are swapped if p > q.
AnnotatedComplex build_torus(const Rational& p, const Rational& q, int n);

/// The same triangulation embedded in the Puiseux plane^2 with circle factors
/// of radii T^p and T^q (rational polygons, exact coordinates). Feeding it to
/// annotate_geometric yields build_torus(p, q, n) exactly.
GeometricComplex torus_geometry(const Rational& p, const Rational& q, int n);

/// Two sphere caps glued along an equator circle A of radius ~T^r.
struct PinchedSpheres {
    CellComplex complex;
    RateAnnotation rates;
    CellSet equator;
};

/// Each cap is an apex fan over a ring of n vertices joined to the shared
/// equator by a collar of 2n triangles. Equator edges and the n collar slivers
/// per side (two equator vertices, one ring vertex) have rate r; all other
/// cells 0. Vertex ids: equator 0..n-1, then apex and ring of the +side, then
/// apex and ring of the -side.
PinchedSpheres build_pinched_spheres(const Rational& r, int n);

/// Explicit embedding of build_pinched_spheres(r, n) in Puiseux 3-space.
GeometricComplex pinched_spheres_geometry(const Rational& r, int n);

}  // namespace vanhom
