#include "vanhom/complex.hpp"

#include <algorithm>
#include <sstream>

#include "vanhom/errors.hpp"

namespace vanhom {

void CellComplex::add_cell(Cell cell) {
    const CellId id = cell.id;
    if (!cells_.emplace(id, std::move(cell)).second) {
        throw InvalidInput("duplicate cell id " + std::to_string(id.value));
    }
}

const Cell& CellComplex::cell(CellId id) const {
    auto it = cells_.find(id);
    if (it == cells_.end()) throw InvalidInput("unknown cell id " + std::to_string(id.value));
    return it->second;
}

int CellComplex::dimension() const {
    int d = -1;
    for (const auto& [id, cell] : cells_) d = std::max(d, cell.dim);
    return d;
}

std::vector<CellId> CellComplex::cells_of_dim(int dim) const {
    std::vector<CellId> out;
    for (const auto& [id, cell] : cells_) {
        if (cell.dim == dim) out.push_back(id);
    }
    return out;
}

std::vector<std::size_t> CellComplex::f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& [id, cell] : cells_) ++f[static_cast<std::size_t>(cell.dim)];
    return f;
}

long CellComplex::euler_characteristic() const {
    long chi = 0;
    for (const auto& [id, cell] : cells_) chi += (cell.dim % 2 == 0) ? 1 : -1;
    return chi;
}

CellSet CellComplex::all_cells() const {
    CellSet s;
    for (const auto& [id, cell] : cells_) s.insert(s.end(), id);
    return s;
}

std::uint32_t CellComplex::next_id() const { return cells_.empty() ? 0 : cells_.rbegin()->first.value + 1; }

std::vector<CellId> CellComplex::cofaces(CellId id) const {
    std::vector<CellId> out;
    for (const auto& [cid, cell] : cells_) {
        for (const auto& inc : cell.boundary) {
            if (inc.face == id) {
                out.push_back(cid);
                break;
            }
        }
    }
    return out;
}

namespace {

std::string cell_name(CellId id) { return "cell " + std::to_string(id.value); }

}  // namespace

ValidationReport validate(const CellComplex& c) {
    for (const auto& [id, cell] : c.cells()) {
        if (cell.dim < 0) return {false, cell_name(id) + " has negative dimension"};
        if (cell.dim == 0 && !cell.boundary.empty()) return {false, cell_name(id) + " is a vertex with nonempty boundary"};
        for (const auto& inc : cell.boundary) {
            if (inc.coefficient == 0) return {false, cell_name(id) + " has a zero incidence coefficient"};
            if (!c.contains(inc.face)) {
                return {false, cell_name(id) + " references missing face " + std::to_string(inc.face.value)};
            }
            if (c.cell(inc.face).dim != cell.dim - 1) {
                return {false, cell_name(id) + " references face " + std::to_string(inc.face.value) +
                                   " of dimension " + std::to_string(c.cell(inc.face).dim) + ", expected " +
                                   std::to_string(cell.dim - 1)};
            }
        }
    }
    // Composite boundary, computed per cell with integer arithmetic.
    for (const auto& [id, cell] : c.cells()) {
        if (cell.dim < 2) continue;
        std::map<CellId, long> dd;
        for (const auto& inc : cell.boundary) {
            for (const auto& inner : c.cell(inc.face).boundary) dd[inner.face] += inc.coefficient * inner.coefficient;
        }
        for (const auto& [face, coeff] : dd) {
            if (coeff != 0) {
                return {false, "boundary of boundary of " + cell_name(id) + " is nonzero at " + cell_name(face)};
            }
        }
    }
    return {};
}

ValidationReport validate_rates(const CellComplex& c, const RateAnnotation& rates) {
    for (const auto& [id, cell] : c.cells()) {
        if (cell.dim >= 1 && rates.count(id) == 0) return {false, cell_name(id) + " has no collapse rate"};
    }
    return {};
}

bool is_face_closed(const CellComplex& c, const CellSet& s) {
    for (CellId id : s) {
        if (!c.contains(id)) return false;
        for (const auto& inc : c.cell(id).boundary) {
            if (s.count(inc.face) == 0) return false;
        }
    }
    return true;
}

bool is_coface_closed(const CellComplex& c, const CellSet& s) {
    for (const auto& [id, cell] : c.cells()) {
        if (s.count(id) != 0) continue;
        for (const auto& inc : cell.boundary) {
            if (s.count(inc.face) != 0) return false;
        }
    }
    return true;
}

CellSet face_closure(const CellComplex& c, const CellSet& s) {
    CellSet out;
    std::vector<CellId> stack(s.begin(), s.end());
    while (!stack.empty()) {
        const CellId id = stack.back();
        stack.pop_back();
        if (!out.insert(id).second) continue;
        for (const auto& inc : c.cell(id).boundary) stack.push_back(inc.face);
    }
    return out;
}

CellComplex subcomplex(const CellComplex& c, const CellSet& s) {
    if (!is_face_closed(c, s)) throw NotFaceClosed("cell set is not a subcomplex");
    CellComplex out;
    for (CellId id : s) out.add_cell(c.cell(id));
    return out;
}

AnnotatedComplex disjoint_union(const AnnotatedComplex& a, const AnnotatedComplex& b) {
    AnnotatedComplex out = a;
    const std::uint32_t offset = a.complex.next_id();
    auto shift = [offset](CellId id) { return CellId{id.value + offset}; };
    for (const auto& [id, cell] : b.complex.cells()) {
        Cell copy = cell;
        copy.id = shift(id);
        for (auto& inc : copy.boundary) inc.face = shift(inc.face);
        out.complex.add_cell(std::move(copy));
    }
    for (const auto& [id, rate] : b.rates) out.rates[shift(id)] = rate;
    return out;
}

RateAnnotation restrict_rates(const RateAnnotation& rates, const CellSet& s) {
    RateAnnotation out;
    for (const auto& [id, rate] : rates) {
        if (s.count(id) != 0) out.emplace(id, rate);
    }
    return out;
}

}  // namespace vanhom
