#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "vanhom/rational.hpp"

namespace vanhom {

struct CellId {
    std::uint32_t value = 0;

    friend auto operator<=>(const CellId&, const CellId&) = default;
    friend std::ostream& operator<<(std::ostream& os, CellId id) { return os << id.value; }
};

struct Incidence {
    long coefficient = 0;
    CellId face;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

struct Cell {
    CellId id;
    int dim = 0;
    std::vector<Incidence> boundary;
    std::optional<std::string> label;

    friend bool operator==(const Cell&, const Cell&) = default;
};

using CellSet = std::set<CellId>;
using RateAnnotation = std::map<CellId, ExtRational>;

/// Finite cell complex with explicit integer incidences.
///
/// Cells are kept ordered by id; every per-dimension listing below is in
/// ascending id order, which fixes the row/column order of boundary matrices.
class CellComplex {
public:
    CellComplex() = default;

    /// Throws InvalidInput on a duplicate id. Faces may be added later;
    /// structural checks live in validate().
    void add_cell(Cell cell);

    [[nodiscard]] bool contains(CellId id) const { return cells_.count(id) != 0; }
    /// Throws InvalidInput for unknown ids.
    [[nodiscard]] const Cell& cell(CellId id) const;
    [[nodiscard]] const std::map<CellId, Cell>& cells() const { return cells_; }
    [[nodiscard]] std::size_t size() const { return cells_.size(); }
    [[nodiscard]] bool empty() const { return cells_.empty(); }

    /// Top dimension; -1 for the empty complex.
    [[nodiscard]] int dimension() const;
    [[nodiscard]] std::vector<CellId> cells_of_dim(int dim) const;
    /// Number of cells per dimension 0..dimension().
    [[nodiscard]] std::vector<std::size_t> f_vector() const;
    [[nodiscard]] long euler_characteristic() const;
    [[nodiscard]] CellSet all_cells() const;
    /// Smallest id strictly larger than every id in use.
    [[nodiscard]] std::uint32_t next_id() const;

    /// Cells having `id` as a face (one level up).
    [[nodiscard]] std::vector<CellId> cofaces(CellId id) const;

    friend bool operator==(const CellComplex&, const CellComplex&) = default;

private:
    std::map<CellId, Cell> cells_;
};

struct ValidationReport {
    bool ok = true;
    std::string message;
};

/// First structural violation: missing face, face of the wrong dimension,
/// zero coefficient, vertex with a boundary, or a nonzero composite boundary.
ValidationReport validate(const CellComplex& c);

/// Checks that every cell of dimension >= 1 carries a rate.
ValidationReport validate_rates(const CellComplex& c, const RateAnnotation& rates);

/// True if every face of every cell of `s` is in `s` (and all ids exist).
bool is_face_closed(const CellComplex& c, const CellSet& s);
/// True if every cell having a face in `s` is itself in `s`.
bool is_coface_closed(const CellComplex& c, const CellSet& s);
/// Smallest subcomplex containing `s`.
CellSet face_closure(const CellComplex& c, const CellSet& s);

/// Restriction of `c` to a face-closed set, keeping ids. Throws NotFaceClosed.
CellComplex subcomplex(const CellComplex& c, const CellSet& s);

struct AnnotatedComplex {
    CellComplex complex;
    RateAnnotation rates;

    friend bool operator==(const AnnotatedComplex&, const AnnotatedComplex&) = default;
};

/// Disjoint union; `a` keeps its ids, `b`'s ids are shifted past a.next_id().
AnnotatedComplex disjoint_union(const AnnotatedComplex& a, const AnnotatedComplex& b);

/// Restricts a rate annotation to the cells of `s`.
RateAnnotation restrict_rates(const RateAnnotation& rates, const CellSet& s);

}  // namespace vanhom
