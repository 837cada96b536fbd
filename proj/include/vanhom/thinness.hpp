#pragma once

#include <vector>

#include "vanhom/builders.hpp"
#include "vanhom/complex.hpp"
#include "vanhom/puiseux.hpp"

namespace vanhom {

using SeriesMatrix = std::vector<std::vector<PuiseuxSeries>>;

/// Valuations nu_1 <= ... <= nu_j of the invariant factors of a j x n matrix
/// over the valuation ring: with delta_i the least valuation of an i x i
/// minor (delta_0 = 0), nu_i = delta_i - delta_{i-1}. Minors are expanded
/// exactly, so cancellations are seen. A minor whose value is unknown at the
/// working precision only matters if its precision falls below the best
/// known minor; then IndeterminateAtPrecision is thrown.
std::vector<ExtRational> invariant_factor_valuations(const SeriesMatrix& m);

/// Collapse rate of a j-simplex: the largest invariant-factor valuation of
/// its edge matrix (rows p_i - p_0). The simplex contains a j-ball of radius
/// ~T^rate in every generic projection and none of radius N*T^rate, N fixed.
/// Throws DegenerateSimplex when the vertices are affinely dependent.
Rational simplex_rate(const GeometricComplex& g, const VertexTuple& simplex);

/// Simplicial cell complex of `g` with every cell of dimension >= 1 annotated
/// by its simplex_rate. Ids follow build_simplicial.
AnnotatedComplex annotate_geometric(const GeometricComplex& g);

/// Vertices are never thin; a positive-dimensional cell is thin iff its rate
/// lies in the velocity. Throws MissingRate.
bool is_thin(const CellComplex& c, const RateAnnotation& rates, CellId id, const Velocity& v);

/// Nested chain X_0 c X_1 c ... c X_{d+1}: X_j holds every cell of dimension
/// below j and the thin cells of dimension j.
struct Filtration {
    Velocity velocity;
    std::vector<CellSet> levels;
};

Filtration filtration(const CellComplex& c, const RateAnnotation& rates, const Velocity& v);

/// Distinct finite rates in ascending order.
std::vector<Rational> critical_rates(const RateAnnotation& rates);
/// Same, ignoring rates attached to vertices.
std::vector<Rational> critical_rates(const CellComplex& c, const RateAnnotation& rates);

}  // namespace vanhom
