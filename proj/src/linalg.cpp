#include "vanhom/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace vanhom {

SparseVector::SparseVector(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& e : entries) {
        if (!entries_.empty() && entries_.back().first == e.first) {
            entries_.back().second += e.second;
            if (entries_.back().second.is_zero()) entries_.pop_back();
        } else if (!e.second.is_zero()) {
            entries_.push_back(std::move(e));
        }
    }
}

Rational SparseVector::at(std::size_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    if (it == entries_.end() || it->first != index) return Rational(0);
    return it->second;
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
    if (factor.is_zero() || other.is_zero()) return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == entries_.end() || b->first < a->first) {
            merged.emplace_back(b->first, factor * b->second);
            ++b;
        } else {
            Rational sum = a->second + factor * b->second;
            if (!sum.is_zero()) merged.emplace_back(a->first, std::move(sum));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
}

SparseVector& SparseVector::operator*=(const Rational& factor) {
    if (factor.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_) e.second *= factor;
    return *this;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::vector<SparseVector> columns)
    : rows_(rows), columns_(std::move(columns)) {
    for (const auto& c : columns_) {
        if (!c.is_zero() && c.pivot() >= rows_) throw std::out_of_range("matrix entry outside the row range");
    }
}

SparseVector RationalMatrix::apply(const SparseVector& x) const {
    SparseVector out;
    for (const auto& [j, value] : x.entries()) {
        if (j >= columns_.size()) throw std::out_of_range("vector longer than matrix width");
        out.axpy(value, columns_[j]);
    }
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    std::vector<std::vector<SparseVector::Entry>> rows(rows_);
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        for (const auto& [i, value] : columns_[j].entries()) rows[i].emplace_back(j, value);
    }
    std::vector<SparseVector> cols;
    cols.reserve(rows_);
    for (auto& r : rows) cols.emplace_back(std::move(r));
    return RationalMatrix(columns_.size(), std::move(cols));
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols() != other.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    std::vector<SparseVector> cols;
    cols.reserve(other.cols());
    for (const auto& c : other.columns()) cols.push_back(apply(c));
    return RationalMatrix(rows_, std::move(cols));
}

void EchelonBasis::reduce(SparseVector& v, SparseVector& coeffs) const {
    while (!v.is_zero()) {
        auto it = pivot_to_column_.find(v.pivot());
        if (it == pivot_to_column_.end()) return;
        const SparseVector& col = reduced_[it->second];
        const Rational factor = v.pivot_value() / col.pivot_value();
        v.axpy(-factor, col);
        coeffs.axpy(factor, combos_[it->second]);
    }
}

std::optional<SparseVector> EchelonBasis::push(const SparseVector& generator) {
    const std::size_t index = generators_++;
    SparseVector v = generator;
    SparseVector subtracted;
    reduce(v, subtracted);
    SparseVector combo = SparseVector::unit(index) - subtracted;
    if (v.is_zero()) return combo;
    pivot_to_column_[v.pivot()] = reduced_.size();
    reduced_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    return std::nullopt;
}

std::optional<SparseVector> EchelonBasis::express(const SparseVector& v) const {
    SparseVector rest = v;
    SparseVector coeffs;
    reduce(rest, coeffs);
    if (!rest.is_zero()) return std::nullopt;
    return coeffs;
}

std::size_t rank(const std::vector<SparseVector>& columns) {
    EchelonBasis basis;
    for (const auto& c : columns) basis.push(c);
    return basis.rank();
}

std::size_t rank(const RationalMatrix& m) { return rank(m.columns()); }

std::vector<SparseVector> kernel(const RationalMatrix& m) {
    EchelonBasis basis;
    std::vector<SparseVector> out;
    for (const auto& c : m.columns()) {
        if (auto dependency = basis.push(c)) out.push_back(std::move(*dependency));
    }
    return out;
}

Subspace::Subspace(std::size_t ambient, const std::vector<SparseVector>& spanning) : ambient_(ambient) {
    EchelonBasis echelon;
    for (const auto& v : spanning) {
        if (!v.is_zero() && v.pivot() >= ambient_) throw std::out_of_range("vector outside the ambient space");
        if (!echelon.push(v)) basis_.push_back(v);
    }
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
    std::vector<SparseVector> vs;
    vs.reserve(indices.size());
    for (std::size_t i : indices) vs.push_back(SparseVector::unit(i));
    return Subspace(ambient, vs);
}

bool Subspace::contains(const SparseVector& v) const {
    EchelonBasis echelon;
    for (const auto& b : basis_) echelon.push(b);
    return echelon.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
    EchelonBasis echelon;
    for (const auto& b : basis_) echelon.push(b);
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&echelon](const SparseVector& v) { return echelon.contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("subspace sum across different ambients");
    std::vector<SparseVector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return Subspace(ambient_, all);
}

Subspace Subspace::intersection(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("subspace intersection across different ambients");
    EchelonBasis echelon;
    for (const auto& b : basis_) echelon.push(b);
    std::vector<SparseVector> common;
    for (const auto& w : other.basis_) {
        auto dependency = echelon.push(w);
        if (!dependency) continue;
        SparseVector v;
        for (const auto& [g, c] : dependency->entries()) {
            if (g < basis_.size()) v.axpy(c, basis_[g]);
        }
        common.push_back(std::move(v));
    }
    return Subspace(ambient_, common);
}

Subspace Subspace::image(const RationalMatrix& m) const {
    if (m.cols() != ambient_) throw std::invalid_argument("map width differs from the ambient dimension");
    std::vector<SparseVector> images;
    images.reserve(basis_.size());
    for (const auto& b : basis_) images.push_back(m.apply(b));
    return Subspace(m.rows(), images);
}

Subspace Subspace::preimage(const RationalMatrix& m, const Subspace& target) const {
    if (m.cols() != ambient_ || m.rows() != target.ambient_) {
        throw std::invalid_argument("preimage dimension mismatch");
    }
    EchelonBasis echelon;
    for (const auto& t : target.basis_) echelon.push(t);
    const std::size_t offset = target.basis_.size();
    std::vector<SparseVector> found;
    for (const auto& b : basis_) {
        auto dependency = echelon.push(m.apply(b));
        if (!dependency) continue;
        SparseVector v;
        for (const auto& [g, c] : dependency->entries()) {
            if (g >= offset) v.axpy(c, basis_[g - offset]);
        }
        found.push_back(std::move(v));
    }
    return Subspace(ambient_, found);
}

std::size_t intersection_dim(const Subspace& u, const Subspace& w) { return u.dim() + w.dim() - u.sum(w).dim(); }

}  // namespace vanhom
