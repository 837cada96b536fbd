#include "vanhom/homology.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "vanhom/errors.hpp"

namespace vanhom {

CellIndex::CellIndex(std::vector<CellId> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    for (std::size_t i = 0; i < cells_.size(); ++i) position_.emplace(cells_[i], i);
}

CellIndex CellIndex::of_dim(const CellComplex& c, const CellSet& s, int j) {
    std::vector<CellId> ids;
    for (CellId id : s) {
        if (c.cell(id).dim == j) ids.push_back(id);
    }
    return CellIndex(std::move(ids));
}

CellIndex CellIndex::of_dim(const CellComplex& c, int j) { return CellIndex(c.cells_of_dim(j)); }

RationalMatrix boundary_matrix(const CellComplex& c, int j, const CellIndex& domain, const CellIndex& codomain,
                               BoundaryMode mode) {
    std::vector<SparseVector> columns;
    columns.reserve(domain.size());
    for (CellId id : domain.cells()) {
        const Cell& cell = c.cell(id);
        if (cell.dim != j) throw InvalidInput("boundary domain cell " + std::to_string(id.value) + " is not a " +
                                              std::to_string(j) + "-cell");
        std::vector<SparseVector::Entry> entries;
        for (const auto& inc : cell.boundary) {
            if (!codomain.contains(inc.face)) {
                if (mode == BoundaryMode::strict) {
                    throw NotFaceClosed("face " + std::to_string(inc.face.value) + " of cell " +
                                        std::to_string(id.value) + " lies outside the codomain");
                }
                continue;
            }
            entries.emplace_back(codomain.position(inc.face), Rational(inc.coefficient));
        }
        columns.emplace_back(std::move(entries));
    }
    return RationalMatrix(codomain.size(), std::move(columns));
}

RationalMatrix boundary_matrix(const CellComplex& c, int j, const CellSet& domain, const CellSet& codomain,
                               BoundaryMode mode) {
    return boundary_matrix(c, j, CellIndex::of_dim(c, domain, j), CellIndex::of_dim(c, codomain, j - 1), mode);
}

namespace {

void require_subcomplex(const CellComplex& c, const CellSet& s) {
    if (!is_face_closed(c, s)) throw NotFaceClosed("cell set is not a subcomplex");
}

// Cycle space of the j-cells of `s`, expressed in the coordinates of `ambient`.
Subspace cycles(const CellComplex& c, const CellSet& s, int j, const CellIndex& ambient) {
    const CellIndex chains = CellIndex::of_dim(c, s, j);
    std::vector<SparseVector> basis;
    if (j == 0) {
        for (CellId id : chains.cells()) basis.push_back(SparseVector::unit(ambient.position(id)));
    } else {
        const CellIndex faces = CellIndex::of_dim(c, s, j - 1);
        for (const auto& z : kernel(boundary_matrix(c, j, chains, faces))) {
            std::vector<SparseVector::Entry> moved;
            for (const auto& [i, value] : z.entries()) moved.emplace_back(ambient.position(chains.cells()[i]), value);
            basis.emplace_back(std::move(moved));
        }
    }
    return Subspace(ambient.size(), basis);
}

}  // namespace

std::size_t betti(const CellComplex& c, const CellSet& s, int j) {
    require_subcomplex(c, s);
    return image_betti(c, s, s, j);
}

std::size_t betti(const CellComplex& c, int j) { return betti(c, c.all_cells(), j); }

std::size_t image_betti(const CellComplex& c, const CellSet& small, const CellSet& big, int j) {
    require_subcomplex(c, small);
    require_subcomplex(c, big);
    if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) {
        throw NotNested("small cell set is not contained in big");
    }
    if (j < 0) return 0;
    const CellIndex ambient = CellIndex::of_dim(c, big, j);
    const Subspace z = cycles(c, small, j, ambient);
    const CellIndex above = CellIndex::of_dim(c, big, j + 1);
    const Subspace b(ambient.size(), boundary_matrix(c, j + 1, above, ambient).columns());
    return z.dim() - intersection_dim(z, b);
}

std::size_t relative_betti(const CellComplex& c, const CellSet& x, const CellSet& a, int j) {
    require_subcomplex(c, x);
    require_subcomplex(c, a);
    if (!std::includes(x.begin(), x.end(), a.begin(), a.end())) throw NotNested("A is not contained in X");
    if (j < 0) return 0;
    CellSet outside;
    std::set_difference(x.begin(), x.end(), a.begin(), a.end(), std::inserter(outside, outside.end()));
    const CellIndex here = CellIndex::of_dim(c, outside, j);
    const CellIndex below = CellIndex::of_dim(c, outside, j - 1);
    const CellIndex above = CellIndex::of_dim(c, outside, j + 1);
    const std::size_t rank_out = j == 0 ? 0 : rank(boundary_matrix(c, j, here, below, BoundaryMode::projection));
    const std::size_t rank_in = rank(boundary_matrix(c, j + 1, above, here, BoundaryMode::projection));
    return here.size() - rank_out - rank_in;
}

}  // namespace vanhom
