#include "vanhom/thinness.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "vanhom/errors.hpp"

namespace vanhom {

namespace {

PuiseuxSeries determinant(const SeriesMatrix& m, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    PuiseuxSeries det;
    const std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const PuiseuxSeries& entry = m[rows[0]][cols[k]];
        if (entry.is_exact_zero()) continue;
        std::vector<std::size_t> minor_cols = cols;
        minor_cols.erase(minor_cols.begin() + static_cast<std::ptrdiff_t>(k));
        const PuiseuxSeries term = entry * determinant(m, rest, minor_cols);
        det = (k % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// Calls f on every size-k subset of {0..n-1}, in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<ExtRational> invariant_factor_valuations(const SeriesMatrix& m) {
    const std::size_t rows = m.size();
    if (rows == 0) return {};
    const std::size_t cols = m[0].size();
    for (const auto& row : m) {
        if (row.size() != cols) throw InvalidInput("ragged series matrix");
    }
    if (rows > cols) throw InvalidInput("invariant factors need rows <= columns");

    std::vector<ExtRational> nu;
    ExtRational previous(0);
    for (std::size_t size = 1; size <= rows; ++size) {
        ExtRational best = ExtRational::infinity();
        ExtRational unknown_floor = ExtRational::infinity();
        for_each_subset(rows, size, [&](const std::vector<std::size_t>& r) {
            for_each_subset(cols, size, [&](const std::vector<std::size_t>& c) {
                const PuiseuxSeries det = determinant(m, r, c);
                if (!det.terms().empty() || det.is_exact()) {
                    best = min(best, det.valuation());
                } else {
                    unknown_floor = min(unknown_floor, det.precision());
                }
            });
        });
        if (unknown_floor < best) {
            throw IndeterminateAtPrecision("a " + std::to_string(size) + "x" + std::to_string(size) +
                                           " minor vanishes to precision " + unknown_floor.str());
        }
        nu.push_back(previous.is_infinite() ? ExtRational::infinity() : best - previous.value());
        previous = best;
    }
    return nu;
}

Rational simplex_rate(const GeometricComplex& g, const VertexTuple& simplex) {
    if (simplex.size() < 2) throw InvalidInput("simplex_rate needs a simplex of dimension >= 1");
    auto coords = [&g](CellId v) -> const std::vector<PuiseuxSeries>& {
        auto it = g.vertices.find(v);
        if (it == g.vertices.end()) throw InvalidInput("vertex " + std::to_string(v.value) + " has no coordinates");
        if (it->second.size() != static_cast<std::size_t>(g.ambient_dim)) {
            throw InvalidInput("vertex " + std::to_string(v.value) + " has the wrong number of coordinates");
        }
        return it->second;
    };
    const auto& origin = coords(simplex[0]);
    const std::size_t j = simplex.size() - 1;
    if (j > static_cast<std::size_t>(g.ambient_dim)) {
        throw DegenerateSimplex("a " + std::to_string(j) + "-simplex cannot be nondegenerate in dimension " +
                                std::to_string(g.ambient_dim));
    }
    SeriesMatrix edges;
    for (std::size_t i = 1; i <= j; ++i) {
        const auto& p = coords(simplex[i]);
        std::vector<PuiseuxSeries> row;
        for (std::size_t k = 0; k < p.size(); ++k) row.push_back(p[k] - origin[k]);
        edges.push_back(std::move(row));
    }
    const auto nu = invariant_factor_valuations(edges);
    if (nu.back().is_infinite()) {
        std::string ids;
        for (CellId v : simplex) ids += (ids.empty() ? "" : ",") + std::to_string(v.value);
        throw DegenerateSimplex("simplex [" + ids + "] is degenerate");
    }
    return nu.back().value();
}

AnnotatedComplex annotate_geometric(const GeometricComplex& g) {
    std::vector<CellId> vertices;
    for (const auto& [id, coords] : g.vertices) vertices.push_back(id);
    const SimplicialBuild built = build_simplicial(vertices, g.simplices);
    AnnotatedComplex out;
    out.complex = built.complex;
    for (const auto& [id, tuple] : built.tuples) {
        if (tuple.size() >= 2) out.rates[id] = simplex_rate(g, tuple);
    }
    return out;
}

bool is_thin(const CellComplex& c, const RateAnnotation& rates, CellId id, const Velocity& v) {
    if (c.cell(id).dim == 0) return false;
    auto it = rates.find(id);
    if (it == rates.end()) throw MissingRate("cell " + std::to_string(id.value) + " has no collapse rate");
    return v.contains_rate(it->second);
}

Filtration filtration(const CellComplex& c, const RateAnnotation& rates, const Velocity& v) {
    const int d = c.dimension();
    Filtration f{v, std::vector<CellSet>(static_cast<std::size_t>(std::max(d, -1) + 2))};
    for (const auto& [id, cell] : c.cells()) {
        const bool thin = is_thin(c, rates, id, v);
        for (int j = 0; j <= d + 1; ++j) {
            if (cell.dim < j || (cell.dim == j && thin)) f.levels[static_cast<std::size_t>(j)].insert(id);
        }
    }
    return f;
}

std::vector<Rational> critical_rates(const RateAnnotation& rates) {
    std::set<Rational> distinct;
    for (const auto& [id, rate] : rates) {
        if (rate.is_finite()) distinct.insert(rate.value());
    }
    return {distinct.begin(), distinct.end()};
}

std::vector<Rational> critical_rates(const CellComplex& c, const RateAnnotation& rates) {
    RateAnnotation positive;
    for (const auto& [id, rate] : rates) {
        if (c.contains(id) && c.cell(id).dim >= 1) positive.emplace(id, rate);
    }
    return critical_rates(positive);
}

}  // namespace vanhom
