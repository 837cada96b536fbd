#include "vanhom/vanishing.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <stdexcept>

#include "vanhom/errors.hpp"
#include "vanhom/thinness.hpp"

namespace vanhom {

namespace {

void require_valid(const CellComplex& c, const RateAnnotation& rates) {
    if (auto report = validate(c); !report.ok) throw InvalidInput("invalid complex: " + report.message);
    if (auto report = validate_rates(c, rates); !report.ok) throw MissingRate(report.message);
}

long alternating_sum_from_one(const std::vector<std::size_t>& dims) {
    long chi = 0;
    for (std::size_t i = 1; i < dims.size(); ++i) {
        chi += (i % 2 == 0 ? 1L : -1L) * static_cast<long>(dims[i]);
    }
    return chi;
}

Subspace zero_space(std::size_t ambient) { return Subspace(ambient); }

RationalMatrix project_rows(const RationalMatrix& m, const CellIndex& rows, const CellSet& keep) {
    std::vector<SparseVector> cols;
    cols.reserve(m.cols());
    for (const auto& col : m.columns()) {
        std::vector<SparseVector::Entry> kept;
        for (const auto& [i, value] : col.entries()) {
            if (keep.count(rows.cells()[i]) != 0) kept.emplace_back(i, value);
        }
        cols.emplace_back(std::move(kept));
    }
    return RationalMatrix(m.rows(), std::move(cols));
}

void assert_closed(const ChainSubspaceComplex& v, const CellularChains& chains, const char* what) {
    if (!v.is_closed(chains)) throw std::logic_error(std::string(what) + " is not closed under the boundary");
}

}  // namespace

VanishingBettiTable vanishing_betti(const CellComplex& c, const RateAnnotation& rates, const Velocity& v) {
    require_valid(c, rates);
    const Filtration f = filtration(c, rates, v);
    VanishingBettiTable t{v, {}, 0};
    for (int j = 0; j <= c.dimension(); ++j) {
        const auto& small = f.levels[static_cast<std::size_t>(j)];
        const auto& big = f.levels[static_cast<std::size_t>(j + 1)];
        t.dims.push_back(image_betti(c, small, big, j));
    }
    t.euler = vanishing_euler(t);
    return t;
}

VanishingBettiTable vanishing_betti_oracle(const CellComplex& c, const RateAnnotation& rates, const Velocity& v) {
    require_valid(c, rates);
    const CellularChains chains(c);
    const ChainSubspaceComplex delta_prime = thin_chains_with_boundaries(chains, c, rates, v);
    assert_closed(delta_prime, chains, "Delta'");
    VanishingBettiTable t{v, delta_prime.homology_dims(chains), 0};
    t.euler = vanishing_euler(t);
    return t;
}

long vanishing_euler(const VanishingBettiTable& t) { return alternating_sum_from_one(t.dims); }

SweepTable sweep(const CellComplex& c, const RateAnnotation& rates, const std::vector<int>& degrees_in) {
    require_valid(c, rates);
    std::vector<int> degrees = degrees_in;
    if (degrees.empty()) {
        for (int j = 0; j <= c.dimension(); ++j) degrees.push_back(j);
    }
    const std::vector<Rational> breaks = critical_rates(c, rates);
    std::map<Rational, VanishingBettiTable> cache;
    auto at = [&](const Rational& q, int j) {
        auto it = cache.find(q);
        if (it == cache.end()) it = cache.emplace(q, vanishing_betti(c, rates, Velocity{q, false})).first;
        return it->second.at(j);
    };

    SweepTable table;
    for (int j : degrees) {
        std::vector<SweepInterval> raw;
        if (breaks.empty()) {
            raw.push_back({std::nullopt, std::nullopt, at(Rational(0), j)});
        } else {
            // On (r_i, r_{i+1}] the thin cells are exactly those of rate >= r_{i+1}.
            const std::size_t first = at(breaks.front(), j);
            if (at(breaks.front() - Rational(1), j) != first) throw std::logic_error("sweep not constant below first rate");
            raw.push_back({std::nullopt, breaks.front(), first});
            for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
                const std::size_t value = at(breaks[i + 1], j);
                const Rational mid = (breaks[i] + breaks[i + 1]) / Rational(2);
                if (at(mid, j) != value) throw std::logic_error("sweep not constant on an interval");
                raw.push_back({breaks[i], breaks[i + 1], value});
            }
            raw.push_back({breaks.back(), std::nullopt, at(breaks.back() + Rational(1), j)});
        }
        std::vector<SweepInterval> merged;
        for (auto& iv : raw) {
            if (!merged.empty() && merged.back().dimension == iv.dimension) {
                merged.back().upper = iv.upper;
            } else {
                merged.push_back(iv);
            }
        }
        table.degrees[j] = std::move(merged);
    }
    return table;
}

CellularChains::CellularChains(const CellComplex& c) {
    const int d = c.dimension();
    for (int j = 0; j <= d; ++j) index_.push_back(CellIndex::of_dim(c, j));
    for (int j = 0; j <= d; ++j) {
        if (j == 0) {
            boundary_.emplace_back(0, std::vector<SparseVector>(index_[0].size()));
        } else {
            boundary_.push_back(boundary_matrix(c, j, index_[static_cast<std::size_t>(j)],
                                                index_[static_cast<std::size_t>(j - 1)]));
        }
    }
}

std::size_t CellularChains::size(int j) const {
    if (j < 0 || j > top()) return 0;
    return index_[static_cast<std::size_t>(j)].size();
}

bool ChainSubspaceComplex::is_closed(const CellularChains& chains) const {
    for (int j = 1; j <= chains.top(); ++j) {
        if (!at(j - 1).contains(at(j).image(chains.boundary(j)))) return false;
    }
    return true;
}

std::vector<std::size_t> ChainSubspaceComplex::homology_dims(const CellularChains& chains) const {
    std::vector<std::size_t> dims;
    for (int j = 0; j <= chains.top(); ++j) {
        const std::size_t out_rank = j == 0 ? 0 : at(j).image(chains.boundary(j)).dim();
        const std::size_t in_rank = j == chains.top() ? 0 : at(j + 1).image(chains.boundary(j + 1)).dim();
        dims.push_back(at(j).dim() - out_rank - in_rank);
    }
    return dims;
}

ChainSubspaceComplex thin_chains(const CellularChains& chains, const CellComplex& c, const RateAnnotation& rates,
                                 const Velocity& v) {
    ChainSubspaceComplex out;
    for (int j = 0; j <= chains.top(); ++j) {
        out.degrees.push_back(chains.cells_where(j, [&](CellId id) { return is_thin(c, rates, id, v); }));
    }
    return out;
}

ChainSubspaceComplex thin_chains_with_boundaries(const CellularChains& chains, const CellComplex& c,
                                                 const RateAnnotation& rates, const Velocity& v) {
    const ChainSubspaceComplex delta = thin_chains(chains, c, rates, v);
    ChainSubspaceComplex out;
    for (int j = 0; j <= chains.top(); ++j) {
        Subspace s = delta.at(j);
        if (j < chains.top()) s = s.sum(delta.at(j + 1).image(chains.boundary(j + 1)));
        out.degrees.push_back(std::move(s));
    }
    return out;
}

ChainSubspaceComplex thin_chains_rel(const CellularChains& chains, const CellComplex& c, const RateAnnotation& rates,
                                     const CellSet& a, const Velocity& v) {
    const ChainSubspaceComplex delta = thin_chains(chains, c, rates, v);
    ChainSubspaceComplex out;
    for (int j = 0; j <= chains.top(); ++j) {
        if (j == 0) {
            out.degrees.push_back(delta.at(0));
            continue;
        }
        // (dc)_tau = 0 for every thick (j-1)-cell tau outside A.
        const Subspace allowed = chains.cells_where(
            j - 1, [&](CellId id) { return a.count(id) != 0 || is_thin(c, rates, id, v); });
        out.degrees.push_back(delta.at(j).preimage(chains.boundary(j), allowed));
    }
    return out;
}

ChainSubspaceComplex pair_subcomplex(const CellularChains& chains, const CellComplex& c, const RateAnnotation& rates,
                                     const CellSet& a, const Velocity& v) {
    const ChainSubspaceComplex rel = thin_chains_rel(chains, c, rates, a, v);
    ChainSubspaceComplex out;
    for (int j = 0; j <= chains.top(); ++j) {
        Subspace s = chains.cells_where(j, [&](CellId id) { return a.count(id) != 0 && is_thin(c, rates, id, v); });
        if (j < chains.top()) {
            const RationalMatrix projected = project_rows(chains.boundary(j + 1), chains.index(j), a);
            s = s.sum(rel.at(j + 1).image(projected));
        }
        out.degrees.push_back(std::move(s));
    }
    return out;
}

HomologyModel::HomologyModel(const CellularChains& chains, const ChainSubspaceComplex& v,
                             const ChainSubspaceComplex* u) {
    for (int j = 0; j <= chains.top(); ++j) {
        const Subspace& vj = v.at(j);
        const Subspace cycles =
            j == 0 ? vj : vj.preimage(chains.boundary(j), u ? u->at(j - 1) : zero_space(chains.size(j - 1)));
        Subspace bounds = j < chains.top() ? v.at(j + 1).image(chains.boundary(j + 1)) : zero_space(chains.size(j));
        if (u) bounds = bounds.sum(u->at(j));

        Degree deg;
        deg.boundary_dim = bounds.dim();
        EchelonBasis probe;
        for (const auto& b : bounds.basis()) probe.push(b);
        for (const auto& z : cycles.basis()) {
            if (!probe.push(z)) deg.representatives.push_back(z);
        }
        for (const auto& b : bounds.basis()) deg.solver.push(b);
        for (const auto& r : deg.representatives) deg.solver.push(r);
        if (deg.solver.rank() != deg.boundary_dim + deg.representatives.size()) {
            throw std::logic_error("homology representatives are not independent");
        }
        degrees_.push_back(std::move(deg));
    }
}

std::size_t HomologyModel::dim(int j) const {
    if (j < 0 || j > top()) return 0;
    return degrees_[static_cast<std::size_t>(j)].representatives.size();
}

const std::vector<SparseVector>& HomologyModel::representatives(int j) const {
    return degrees_.at(static_cast<std::size_t>(j)).representatives;
}

SparseVector HomologyModel::coordinates(int j, const SparseVector& z) const {
    const Degree& deg = degrees_.at(static_cast<std::size_t>(j));
    auto coeffs = deg.solver.express(z);
    if (!coeffs) throw std::logic_error("chain is not a cycle of the homology model");
    std::vector<SparseVector::Entry> out;
    for (const auto& [g, value] : coeffs->entries()) {
        if (g >= deg.boundary_dim) out.emplace_back(g - deg.boundary_dim, value);
    }
    return SparseVector(std::move(out));
}

namespace {

struct PairModels {
    CellularChains chains;
    ChainSubspaceComplex x;  // Delta'
    ChainSubspaceComplex a;  // Delta^{v,X}(A)
};

PairModels pair_models(const CellComplex& c, const RateAnnotation& rates, const CellSet& a, const Velocity& v) {
    require_valid(c, rates);
    if (!is_face_closed(c, a)) throw NotFaceClosed("subcomplex A is not face-closed");
    CellularChains chains(c);
    ChainSubspaceComplex x = thin_chains_with_boundaries(chains, c, rates, v);
    ChainSubspaceComplex pa = pair_subcomplex(chains, c, rates, a, v);
    assert_closed(x, chains, "Delta'");
    assert_closed(pa, chains, "Delta^{v,X}(A)");
    for (int j = 0; j <= chains.top(); ++j) {
        if (!x.at(j).contains(pa.at(j))) throw std::logic_error("Delta^{v,X}(A) escapes Delta'");
    }
    return {std::move(chains), std::move(x), std::move(pa)};
}

RationalMatrix induced(std::size_t target_dim, const std::vector<SparseVector>& sources,
                       const std::function<SparseVector(const SparseVector&)>& image) {
    std::vector<SparseVector> cols;
    cols.reserve(sources.size());
    for (const auto& s : sources) cols.push_back(image(s));
    return RationalMatrix(target_dim, std::move(cols));
}

RationalMatrix zero_map(std::size_t target_dim, std::size_t source_dim) {
    return RationalMatrix(target_dim, std::vector<SparseVector>(source_dim));
}

bool is_zero_matrix(const RationalMatrix& m) {
    return std::all_of(m.columns().begin(), m.columns().end(), [](const SparseVector& c) { return c.is_zero(); });
}

ExactnessReport exactness(const PairModels& m) {
    const CellularChains& chains = m.chains;
    const HomologyModel hx(chains, m.x, nullptr);
    const HomologyModel ha(chains, m.a, nullptr);
    const HomologyModel hq(chains, m.x, &m.a);
    const int d = chains.top();

    auto inclusion = [&](int j) {
        return induced(hx.dim(j), ha.representatives(j), [&](const SparseVector& z) { return hx.coordinates(j, z); });
    };
    auto quotient = [&](int j) {
        return induced(hq.dim(j), hx.representatives(j), [&](const SparseVector& z) { return hq.coordinates(j, z); });
    };
    auto connecting = [&](int j) {
        if (j == 0) return zero_map(0, hq.dim(0));
        return induced(ha.dim(j - 1), hq.representatives(j),
                       [&](const SparseVector& z) { return ha.coordinates(j - 1, chains.boundary(j).apply(z)); });
    };

    // Maps along the sequence, each paired with the node it leaves.
    struct Step {
        std::string group;
        int degree;
        std::size_t dim;
        RationalMatrix out;
    };
    std::vector<Step> steps;
    for (int j = d; j >= 0; --j) {
        const std::string deg = std::to_string(j);
        steps.push_back({"H_" + deg + "(delta_X A)", j, ha.dim(j), inclusion(j)});
        steps.push_back({"H_" + deg + "(X)", j, hx.dim(j), quotient(j)});
        steps.push_back({"H_" + deg + "(X;A)", j, hq.dim(j), connecting(j)});
    }

    ExactnessReport report;
    RationalMatrix incoming = zero_map(steps.empty() ? 0 : steps.front().dim, 0);
    for (const auto& step : steps) {
        LesNode node;
        node.group = step.group;
        node.degree = step.degree;
        node.dimension = step.dim;
        node.rank_in = rank(incoming);
        node.rank_out = rank(step.out);
        node.composition_zero = is_zero_matrix(step.out * incoming);
        node.exact = node.composition_zero && node.rank_in + node.rank_out == node.dimension;
        report.exact = report.exact && node.exact;
        report.nodes.push_back(std::move(node));
        incoming = step.out;
    }
    return report;
}

std::vector<std::size_t> model_dims(const HomologyModel& h) {
    std::vector<std::size_t> out;
    for (int j = 0; j <= h.top(); ++j) out.push_back(h.dim(j));
    return out;
}

}  // namespace

PairReport relative_vanishing(const CellComplex& c, const RateAnnotation& rates, const CellSet& a,
                              const Velocity& v) {
    const PairModels m = pair_models(c, rates, a, v);
    PairReport report;
    report.velocity = v;
    report.absolute = m.x.homology_dims(m.chains);
    report.boundary = m.a.homology_dims(m.chains);
    report.relative = model_dims(HomologyModel(m.chains, m.x, &m.a));
    report.exact = exactness(m).exact;
    return report;
}

ExactnessReport les_check(const CellComplex& c, const RateAnnotation& rates, const CellSet& a, const Velocity& v) {
    return exactness(pair_models(c, rates, a, v));
}

ExcisionReport excision_check(const CellComplex& c, const RateAnnotation& rates, const CellSet& a, const CellSet& w,
                              const Velocity& v) {
    if (!is_face_closed(c, a)) throw NotFaceClosed("subcomplex A is not face-closed");
    if (!std::includes(a.begin(), a.end(), w.begin(), w.end())) throw PreconditionError("W is not contained in A");
    if (!is_coface_closed(c, w)) throw PreconditionError("W is not closed under cofaces in X");

    CellSet x_rest;
    CellSet a_rest;
    const CellSet all = c.all_cells();
    std::set_difference(all.begin(), all.end(), w.begin(), w.end(), std::inserter(x_rest, x_rest.end()));
    std::set_difference(a.begin(), a.end(), w.begin(), w.end(), std::inserter(a_rest, a_rest.end()));
    const CellComplex excised = subcomplex(c, x_rest);

    ExcisionReport report;
    report.full = relative_vanishing(c, rates, a, v).relative;
    report.excised = relative_vanishing(excised, restrict_rates(rates, x_rest), a_rest, v).relative;
    const std::size_t n = std::max(report.full.size(), report.excised.size());
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t lhs = j < report.full.size() ? report.full[j] : 0;
        const std::size_t rhs = j < report.excised.size() ? report.excised[j] : 0;
        report.equal = report.equal && lhs == rhs;
    }
    return report;
}

}  // namespace vanhom
