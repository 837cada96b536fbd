// Shared fixtures for the test suites: seeded random complexes and a dense
// Gauss-Jordan rank routine that does not touch the library's sparse
// elimination, used as an independent oracle.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "vanhom/builders.hpp"
#include "vanhom/complex.hpp"
#include "vanhom/puiseux.hpp"
#include "vanhom/thinness.hpp"

namespace vanhom::testing {

using DenseMatrix = std::vector<std::vector<Rational>>;  // row-major

inline std::size_t dense_rank(DenseMatrix m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const Rational f = m[r][col] / m[rank][col];
            for (std::size_t k = col; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Rank of a family of column vectors of length n.
inline std::size_t dense_rank_of(const std::vector<std::vector<Rational>>& columns, std::size_t n) {
    if (columns.empty() || n == 0) return 0;
    DenseMatrix m(n, std::vector<Rational>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (std::size_t r = 0; r < n; ++r) m[r][c] = columns[c][r];
    }
    return dense_rank(m);
}

/// Dense cellular boundary d_j: rows are (j-1)-cells, columns j-cells, both
/// in ascending id order.
inline DenseMatrix dense_boundary(const CellComplex& c, int j) {
    const auto rows = c.cells_of_dim(j - 1);
    const auto cols = c.cells_of_dim(j);
    DenseMatrix m(rows.size(), std::vector<Rational>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) {
        for (const auto& inc : c.cell(cols[k]).boundary) {
            const auto r = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), inc.face) - rows.begin());
            m[r][k] += Rational(inc.coefficient);
        }
    }
    return m;
}

inline std::vector<Rational> apply(const DenseMatrix& m, const std::vector<Rational>& x, std::size_t rows) {
    std::vector<Rational> y(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (!x[k].is_zero()) y[r] += m[r][k] * x[k];
        }
    }
    return y;
}

/// Brute-force vanishing Betti numbers: dim(ker d cap D'_j) - dim d D_{j+1}
/// with D'_j = D_j + d D_{j+1}, all ranks by dense elimination.
inline std::vector<std::size_t> brute_force_vanishing(const CellComplex& c, const RateAnnotation& rates,
                                                      const Velocity& v) {
    const int d = c.dimension();
    auto unit = [](std::size_t n, std::size_t i) {
        std::vector<Rational> e(n);
        e[i] = Rational(1);
        return e;
    };
    auto thin_vectors = [&](int j) {
        const auto cells = c.cells_of_dim(j);
        std::vector<std::vector<Rational>> out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (is_thin(c, rates, cells[i], v)) out.push_back(unit(cells.size(), i));
        }
        return out;
    };
    std::vector<std::size_t> dims;
    for (int j = 0; j <= d; ++j) {
        const std::size_t n = c.cells_of_dim(j).size();
        std::vector<std::vector<Rational>> span = thin_vectors(j);
        std::size_t boundary_dim = 0;
        if (j < d) {
            const DenseMatrix up = dense_boundary(c, j + 1);
            std::vector<std::vector<Rational>> images;
            for (const auto& x : thin_vectors(j + 1)) images.push_back(apply(up, x, n));
            boundary_dim = dense_rank_of(images, n);
            span.insert(span.end(), images.begin(), images.end());
        }
        const std::size_t span_dim = dense_rank_of(span, n);
        std::size_t out_dim = 0;
        if (j > 0) {
            const DenseMatrix down = dense_boundary(c, j);
            const std::size_t below = c.cells_of_dim(j - 1).size();
            std::vector<std::vector<Rational>> images;
            for (const auto& x : span) images.push_back(apply(down, x, below));
            out_dim = dense_rank_of(images, below);
        }
        dims.push_back(span_dim - out_dim - boundary_dim);
    }
    return dims;
}

/// Random simplicial complex on at most `max_vertices` vertices, dimension at
/// most `max_dim`, with at most `max_cells` cells, rates drawn from {0..3}.
inline AnnotatedComplex random_complex(std::mt19937_64& rng, std::size_t max_cells = 30, int max_dim = 3,
                                       int max_vertices = 6) {
    std::uniform_int_distribution<int> nverts(2, max_vertices);
    std::uniform_int_distribution<int> rate(0, 3);
    while (true) {
        const int nv = nverts(rng);
        std::uniform_int_distribution<int> pick(0, nv - 1);
        std::uniform_int_distribution<int> top(1, std::min(max_dim, nv - 1));
        std::uniform_int_distribution<int> count(1, 5);
        std::set<std::vector<int>> simplices;
        const int nmax = count(rng);
        for (int s = 0; s < nmax; ++s) {
            std::set<int> verts;
            const int k = top(rng) + 1;
            while (static_cast<int>(verts.size()) < k) verts.insert(pick(rng));
            simplices.insert(std::vector<int>(verts.begin(), verts.end()));
        }
        // Close under faces.
        std::set<std::vector<int>> closed;
        std::vector<std::vector<int>> stack(simplices.begin(), simplices.end());
        while (!stack.empty()) {
            auto s = stack.back();
            stack.pop_back();
            if (s.size() < 2 || !closed.insert(s).second) continue;
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto f = s;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                stack.push_back(f);
            }
        }
        if (closed.size() + static_cast<std::size_t>(nv) > max_cells) continue;
        std::vector<std::vector<int>> ordered(closed.begin(), closed.end());
        std::stable_sort(ordered.begin(), ordered.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        std::vector<VertexTuple> tuples;
        for (const auto& s : ordered) {
            VertexTuple t;
            for (int x : s) t.push_back(CellId{static_cast<std::uint32_t>(x)});
            // Random orientation: swap the first two vertices sometimes.
            if (rng() % 2 == 0) std::swap(t[0], t[1]);
            tuples.push_back(std::move(t));
        }
        std::vector<CellId> verts;
        for (int i = 0; i < nv; ++i) verts.push_back(CellId{static_cast<std::uint32_t>(i)});
        AnnotatedComplex out;
        out.complex = build_simplicial(verts, tuples).complex;
        for (const auto& [id, cell] : out.complex.cells()) {
            if (cell.dim >= 1) out.rates[id] = Rational(rate(rng));
        }
        return out;
    }
}

/// Non-strict or strict cut with threshold in {-1, -1/2, 0, ..., 4}.
inline Velocity random_velocity(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> half_steps(-2, 8);
    return Velocity{Rational(half_steps(rng), 2), rng() % 2 == 0};
}

/// Face closure of a random subset of the cells.
inline CellSet random_subcomplex(std::mt19937_64& rng, const CellComplex& c) {
    CellSet seed;
    for (const auto& [id, cell] : c.cells()) {
        if (rng() % 3 == 0) seed.insert(id);
    }
    return face_closure(c, seed);
}

/// Open star of `id`: every cell having `id` in its closure.
inline CellSet open_star(const CellComplex& c, CellId id) {
    CellSet out{id};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [cid, cell] : c.cells()) {
            if (out.count(cid) != 0) continue;
            for (const auto& inc : cell.boundary) {
                if (out.count(inc.face) != 0) {
                    out.insert(cid);
                    grew = true;
                    break;
                }
            }
        }
    }
    return out;
}

inline CellSet set_union(const CellSet& a, const CellSet& b) {
    CellSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

}  // namespace vanhom::testing
