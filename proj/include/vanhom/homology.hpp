#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "vanhom/complex.hpp"
#include "vanhom/linalg.hpp"

namespace vanhom {

/// Positions of a fixed, ascending list of cells; the coordinate order of a
/// cellular chain space.
class CellIndex {
public:
    CellIndex() = default;
    explicit CellIndex(std::vector<CellId> cells);
    /// The j-cells of `s` (all j-cells of `c` when s is the full set).
    static CellIndex of_dim(const CellComplex& c, const CellSet& s, int j);
    static CellIndex of_dim(const CellComplex& c, int j);

    [[nodiscard]] std::size_t size() const { return cells_.size(); }
    [[nodiscard]] const std::vector<CellId>& cells() const { return cells_; }
    [[nodiscard]] bool contains(CellId id) const { return position_.count(id) != 0; }
    [[nodiscard]] std::size_t position(CellId id) const { return position_.at(id); }

private:
    std::vector<CellId> cells_;
    std::map<CellId, std::size_t> position_;
};

enum class BoundaryMode {
    strict,      ///< every face with a nonzero coefficient must be in the codomain
    projection,  ///< faces outside the codomain are dropped (the projected boundary)
};

/// Matrix of the cellular boundary from `domain` j-cells to `codomain`
/// (j-1)-cells; entry (tau, sigma) is the incidence of tau in d(sigma).
/// Throws NotFaceClosed in strict mode when a face escapes the codomain.
RationalMatrix boundary_matrix(const CellComplex& c, int j, const CellSet& domain, const CellSet& codomain,
                               BoundaryMode mode = BoundaryMode::strict);
RationalMatrix boundary_matrix(const CellComplex& c, int j, const CellIndex& domain, const CellIndex& codomain,
                               BoundaryMode mode = BoundaryMode::strict);

/// Rational Betti number of the subcomplex `s` in degree j. Throws NotFaceClosed.
std::size_t betti(const CellComplex& c, const CellSet& s, int j);
std::size_t betti(const CellComplex& c, int j);

/// dim Im(H_j(small) -> H_j(big)) for subcomplexes small c big, computed as
/// dim Z_j(small) - dim(Z_j(small) cap B_j(big)).
/// Throws NotFaceClosed or NotNested.
std::size_t image_betti(const CellComplex& c, const CellSet& small, const CellSet& big, int j);

/// Ordinary relative Betti number dim H_j(X, A) from the quotient chain
/// complex spanned by the cells of X outside A.
std::size_t relative_betti(const CellComplex& c, const CellSet& x, const CellSet& a, int j);

}  // namespace vanhom
