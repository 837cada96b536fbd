#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vanhom/rational.hpp"

namespace vanhom {

/// Sparse rational vector with entries sorted by index and no stored zeros.
class SparseVector {
public:
    using Entry = std::pair<std::size_t, Rational>;

    SparseVector() = default;
    /// Entries may be unsorted and repeated; they are summed.
    explicit SparseVector(std::vector<Entry> entries);
    static SparseVector unit(std::size_t index) { return SparseVector({{index, Rational(1)}}); }

    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
    [[nodiscard]] bool is_zero() const { return entries_.empty(); }
    [[nodiscard]] std::size_t nonzeros() const { return entries_.size(); }
    [[nodiscard]] Rational at(std::size_t index) const;
    /// Largest index with a nonzero entry. Precondition: !is_zero().
    [[nodiscard]] std::size_t pivot() const { return entries_.back().first; }
    [[nodiscard]] const Rational& pivot_value() const { return entries_.back().second; }

    /// this += factor * other
    void axpy(const Rational& factor, const SparseVector& other);
    SparseVector& operator*=(const Rational& factor);

    friend SparseVector operator+(SparseVector a, const SparseVector& b) {
        a.axpy(Rational(1), b);
        return a;
    }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) {
        a.axpy(Rational(-1), b);
        return a;
    }
    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<Entry> entries_;
};

/// Sparse column-major rational matrix.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::vector<SparseVector> columns);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return columns_.size(); }
    [[nodiscard]] const std::vector<SparseVector>& columns() const { return columns_; }
    [[nodiscard]] const SparseVector& column(std::size_t j) const { return columns_[j]; }
    [[nodiscard]] Rational at(std::size_t row, std::size_t col) const { return columns_[col].at(row); }

    [[nodiscard]] SparseVector apply(const SparseVector& x) const;
    [[nodiscard]] RationalMatrix transpose() const;
    /// Matrix product this * other.
    [[nodiscard]] RationalMatrix operator*(const RationalMatrix& other) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> columns_;
};

/// Incremental column echelon form over the rationals.
///
/// Each stored column has a distinct pivot (largest nonzero row). Every
/// stored column also remembers how it is written in terms of the generators
/// pushed so far, so the basis can both test membership and express a vector
/// as a combination of the original generators.
class EchelonBasis {
public:
    /// Adds generator number size(); returns nullopt if it was independent,
    /// otherwise the dependency: coefficients c with sum c_g * gen_g = 0 and
    /// the new generator's coefficient equal to 1.
    std::optional<SparseVector> push(const SparseVector& generator);

    [[nodiscard]] std::size_t rank() const { return reduced_.size(); }
    [[nodiscard]] std::size_t generators() const { return generators_; }

    /// Coefficients over the generators reproducing v, or nullopt if v is
    /// outside the span.
    [[nodiscard]] std::optional<SparseVector> express(const SparseVector& v) const;
    [[nodiscard]] bool contains(const SparseVector& v) const { return express(v).has_value(); }

private:
    // Reduces v in place; accumulates into coeffs (over generators) the
    // combination that was subtracted.
    void reduce(SparseVector& v, SparseVector& coeffs) const;

    std::vector<SparseVector> reduced_;
    std::vector<SparseVector> combos_;
    std::map<std::size_t, std::size_t> pivot_to_column_;
    std::size_t generators_ = 0;
};

/// Exact rank over the rationals.
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const std::vector<SparseVector>& columns);

/// Basis of the null space {x : m x = 0}.
std::vector<SparseVector> kernel(const RationalMatrix& m);

/// Linear subspace of Q^ambient held as a list of independent vectors.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    /// Keeps an independent subset of `spanning`.
    Subspace(std::size_t ambient, const std::vector<SparseVector>& spanning);

    static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

    [[nodiscard]] std::size_t ambient() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<SparseVector>& basis() const { return basis_; }
    [[nodiscard]] bool contains(const SparseVector& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;

    [[nodiscard]] Subspace sum(const Subspace& other) const;
    [[nodiscard]] Subspace intersection(const Subspace& other) const;
    /// Image under a linear map with m.cols() == ambient().
    [[nodiscard]] Subspace image(const RationalMatrix& m) const;
    /// { v in this : m v in target }.
    [[nodiscard]] Subspace preimage(const RationalMatrix& m, const Subspace& target) const;

private:
    std::size_t ambient_ = 0;
    std::vector<SparseVector> basis_;
};

/// dim(U cap W) = dim U + dim W - dim(U + W).
std::size_t intersection_dim(const Subspace& u, const Subspace& w);

}  // namespace vanhom
