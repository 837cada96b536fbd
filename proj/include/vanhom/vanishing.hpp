#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vanhom/complex.hpp"
#include "vanhom/homology.hpp"
#include "vanhom/linalg.hpp"
#include "vanhom/puiseux.hpp"

namespace vanhom {

/// dim H_j^v for j = 0..top dimension, and the metric Euler characteristic.
struct VanishingBettiTable {
    Velocity velocity;
    std::vector<std::size_t> dims;
    long euler = 0;

    [[nodiscard]] std::size_t at(int j) const {
        return j >= 0 && static_cast<std::size_t>(j) < dims.size() ? dims[static_cast<std::size_t>(j)] : 0;
    }
    friend bool operator==(const VanishingBettiTable&, const VanishingBettiTable&) = default;
};

/// Vanishing homology through the filtration: dims[j] is the rank of
/// H_j(X_j) -> H_j(X_{j+1}). Throws InvalidInput for invalid complexes and
/// MissingRate for unannotated cells.
VanishingBettiTable vanishing_betti(const CellComplex& c, const RateAnnotation& rates, const Velocity& v);

/// Independent route through the chain complex Delta'_j = Delta_j + d Delta_{j+1},
/// where Delta_j is spanned by the thin j-cells.
VanishingBettiTable vanishing_betti_oracle(const CellComplex& c, const RateAnnotation& rates, const Velocity& v);

/// sum_{i >= 1} (-1)^i dims[i].
long vanishing_euler(const VanishingBettiTable& t);

/// Interval (lower, upper] of velocity thresholds; nullopt stands for -inf
/// (lower) or +inf (upper, then the interval is open).
struct SweepInterval {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    std::size_t dimension = 0;

    friend bool operator==(const SweepInterval&, const SweepInterval&) = default;
};

/// Per degree, the dimension of H_j^{T^q} as a piecewise-constant function
/// of the non-strict threshold q. Adjacent intervals always differ.
struct SweepTable {
    std::map<int, std::vector<SweepInterval>> degrees;
};

/// Empty `degrees` means every degree 0..top dimension.
SweepTable sweep(const CellComplex& c, const RateAnnotation& rates, const std::vector<int>& degrees = {});

/// Cellular chain spaces C_0..C_d of a complex and the boundary maps between
/// them, coordinates ordered by ascending cell id.
class CellularChains {
public:
    explicit CellularChains(const CellComplex& c);

    [[nodiscard]] int top() const { return static_cast<int>(index_.size()) - 1; }
    [[nodiscard]] const CellIndex& index(int j) const { return index_.at(static_cast<std::size_t>(j)); }
    [[nodiscard]] std::size_t size(int j) const;
    /// d_j : C_j -> C_{j-1}; d_0 maps to the zero space.
    [[nodiscard]] const RationalMatrix& boundary(int j) const { return boundary_.at(static_cast<std::size_t>(j)); }
    /// Span of the j-cells accepted by `keep`.
    template <typename Pred>
    [[nodiscard]] Subspace cells_where(int j, Pred keep) const {
        std::vector<std::size_t> picked;
        for (std::size_t i = 0; i < size(j); ++i) {
            if (keep(index(j).cells()[i])) picked.push_back(i);
        }
        return Subspace::coordinate(size(j), picked);
    }

private:
    std::vector<CellIndex> index_;
    std::vector<RationalMatrix> boundary_;
};

/// A subspace V_j of every cellular chain space, meant to satisfy d V_j c V_{j-1}.
struct ChainSubspaceComplex {
    std::vector<Subspace> degrees;

    [[nodiscard]] const Subspace& at(int j) const { return degrees.at(static_cast<std::size_t>(j)); }
    /// Checks d V_j c V_{j-1} in every degree.
    [[nodiscard]] bool is_closed(const CellularChains& chains) const;
    /// dim H_j(V) = dim V_j - dim d V_j - dim d V_{j+1}.
    [[nodiscard]] std::vector<std::size_t> homology_dims(const CellularChains& chains) const;
};

/// Delta_j: chains supported on thin j-cells.
ChainSubspaceComplex thin_chains(const CellularChains& chains, const CellComplex& c, const RateAnnotation& rates,
                                 const Velocity& v);
/// Delta'_j = Delta_j + d Delta_{j+1}.
ChainSubspaceComplex thin_chains_with_boundaries(const CellularChains& chains, const CellComplex& c,
                                                 const RateAnnotation& rates, const Velocity& v);
/// Delta_j(X/A): thin chains whose boundary, off A, stays on thin cells.
ChainSubspaceComplex thin_chains_rel(const CellularChains& chains, const CellComplex& c, const RateAnnotation& rates,
                                     const CellSet& a, const Velocity& v);
/// Delta_j^{v,X}(A) = Delta_j(A) + d_A Delta_{j+1}(X/A), with d_A the boundary
/// projected onto the cells of A. Its homology is the homology of delta_X A.
ChainSubspaceComplex pair_subcomplex(const CellularChains& chains, const CellComplex& c, const RateAnnotation& rates,
                                     const CellSet& a, const Velocity& v);

/// Homology of a quotient V / U of chain subspace complexes (U c V, U may be
/// all zero), with explicit representatives so induced maps can be written
/// down in coordinates.
class HomologyModel {
public:
    HomologyModel(const CellularChains& chains, const ChainSubspaceComplex& v, const ChainSubspaceComplex* u);

    [[nodiscard]] int top() const { return static_cast<int>(degrees_.size()) - 1; }
    [[nodiscard]] std::size_t dim(int j) const;
    /// Cycles representing a basis of H_j.
    [[nodiscard]] const std::vector<SparseVector>& representatives(int j) const;
    /// Coordinates of the class of a relative cycle z. Throws std::logic_error
    /// if z is not a relative cycle.
    [[nodiscard]] SparseVector coordinates(int j, const SparseVector& z) const;

private:
    struct Degree {
        std::size_t boundary_dim = 0;
        std::vector<SparseVector> representatives;
        EchelonBasis solver;  // generators: boundary basis, then representatives
    };
    std::vector<Degree> degrees_;
};

struct LesNode {
    std::string group;  ///< e.g. "H_1(delta_X A)"
    int degree = 0;
    std::size_t dimension = 0;
    std::size_t rank_in = 0;
    std::size_t rank_out = 0;
    bool composition_zero = true;
    bool exact = true;
};

struct ExactnessReport {
    std::vector<LesNode> nodes;  ///< from the top degree down to H_0(X;A)
    bool exact = true;
};

struct PairReport {
    Velocity velocity;
    std::vector<std::size_t> absolute;  ///< H_j^v(X)
    std::vector<std::size_t> relative;  ///< H_j^v(X;A)
    std::vector<std::size_t> boundary;  ///< H_j^v(delta_X A)
    bool exact = true;
};

/// Throws NotFaceClosed when A is not a subcomplex.
PairReport relative_vanishing(const CellComplex& c, const RateAnnotation& rates, const CellSet& a,
                              const Velocity& v);

/// Long exact sequence
///   ... -> H_j(delta_X A) -> H_j^v(X) -> H_j^v(X;A) -> H_{j-1}(delta_X A) -> ...
/// with maps induced by inclusion, quotient and the connecting homomorphism,
/// checked for exactness at every node.
ExactnessReport les_check(const CellComplex& c, const RateAnnotation& rates, const CellSet& a, const Velocity& v);

struct ExcisionReport {
    std::vector<std::size_t> full;      ///< H_j^v(X;A)
    std::vector<std::size_t> excised;   ///< H_j^v(X \ W; A \ W)
    bool equal = true;
};

/// W must lie in A and be closed under cofaces in X; otherwise throws
/// PreconditionError.
ExcisionReport excision_check(const CellComplex& c, const RateAnnotation& rates, const CellSet& a, const CellSet& w,
                              const Velocity& v);

}  // namespace vanhom
