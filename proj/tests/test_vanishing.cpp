#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "vanhom/builders.hpp"
#include "vanhom/errors.hpp"
#include "vanhom/homology.hpp"
#include "vanhom/vanishing.hpp"

using namespace vanhom;

namespace {

using Dims = std::vector<std::size_t>;

CellId id(std::uint32_t v) { return CellId{v}; }
Velocity V(const char* text) { return Velocity::parse(text); }
Rational Q(long n, long d = 1) { return Rational(n, d); }

CellSet ids(std::initializer_list<std::uint32_t> xs) {
    CellSet out;
    for (auto x : xs) out.insert(id(x));
    return out;
}

}  // namespace

TEST_CASE("torus") {
    const auto t = build_torus(Q(0), Q(2), 3);
    const auto table = vanishing_betti(t.complex, t.rates, V("T^2"));
    CHECK(table.dims == Dims{0, 1, 1});
    CHECK(table.euler == 0);
    CHECK(vanishing_betti(t.complex, t.rates, V(">T^2")).dims == Dims{0, 0, 0});
    CHECK(vanishing_betti(t.complex, t.rates, V("T^0")).dims == Dims{0, 2, 1});
    CHECK(vanishing_betti(t.complex, t.rates, V("T^-1")).dims == Dims{0, 2, 1});

    const auto t13 = build_torus(Q(1), Q(3), 3);
    CHECK(vanishing_betti(t13.complex, t13.rates, V("T^3")).dims == Dims{0, 1, 1});
    CHECK(vanishing_betti(t13.complex, t13.rates, V("T^1")).dims == Dims{0, 2, 1});
    CHECK(vanishing_betti(t13.complex, t13.rates, V("T^(3/2)")).dims == Dims{0, 1, 1});
}

TEST_CASE("pinched spheres") {
    const auto p = build_pinched_spheres(Q(2), 3);
    const auto table = vanishing_betti(p.complex, p.rates, V("T^2"));
    CHECK(table.dims == Dims{0, 1, 0});
    CHECK(table.euler == -1);
    CHECK(vanishing_euler(table) == -1);
    CHECK(vanishing_betti(p.complex, p.rates, V(">T^2")).dims == Dims{0, 0, 0});
    CHECK(vanishing_betti(p.complex, p.rates, V("T^0")).dims == Dims{0, 0, 1});
}

TEST_CASE("circle collapses as a whole") {
    const auto c = build_circle(5, ExtRational(Q(2)));
    CHECK(vanishing_betti(c.complex, c.rates, V("T^2")).dims == Dims{0, 1});
    CHECK(vanishing_betti(c.complex, c.rates, V("T^3")).dims == Dims{0, 0});
}

TEST_CASE("preconditions") {
    auto t = build_torus(Q(0), Q(2), 3);
    auto rates = t.rates;
    rates.erase(t.complex.cells_of_dim(2).front());
    CHECK_THROWS_AS(vanishing_betti(t.complex, rates, V("T^2")), MissingRate);

    CellComplex broken;
    broken.add_cell(Cell{id(0), 0, {}, std::nullopt});
    broken.add_cell(Cell{id(1), 1, {{1, id(0)}, {1, id(7)}}, std::nullopt});
    CHECK_THROWS_AS(vanishing_betti(broken, {{id(1), ExtRational(Q(1))}}, V("T")), InvalidInput);
}

TEST_CASE("three routes agree on random complexes") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 200; ++i) {
        const auto ac = testing::random_complex(rng);
        const auto v = testing::random_velocity(rng);
        const auto fast = vanishing_betti(ac.complex, ac.rates, v);
        const auto oracle = vanishing_betti_oracle(ac.complex, ac.rates, v);
        CHECK(fast == oracle);
        CHECK(fast.dims == testing::brute_force_vanishing(ac.complex, ac.rates, v));
        CHECK(fast.at(0) == 0);
    }
}

TEST_CASE("sweep") {
    const auto t = build_torus(Q(0), Q(2), 3);
    const auto table = sweep(t.complex, t.rates);
    REQUIRE(table.degrees.size() == 3);
    CHECK(table.degrees.at(0) == std::vector<SweepInterval>{{std::nullopt, std::nullopt, 0}});
    CHECK(table.degrees.at(1) == std::vector<SweepInterval>{
                                     {std::nullopt, Q(0), 2}, {Q(0), Q(2), 1}, {Q(2), std::nullopt, 0}});
    CHECK(table.degrees.at(2) ==
          std::vector<SweepInterval>{{std::nullopt, Q(2), 1}, {Q(2), std::nullopt, 0}});

    const auto only_one = sweep(t.complex, t.rates, {1});
    CHECK(only_one.degrees.size() == 1);
    CHECK(only_one.degrees.at(1) == table.degrees.at(1));
}

TEST_CASE("sweep intervals agree with direct evaluation") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 60; ++i) {
        const auto ac = testing::random_complex(rng);
        const auto table = sweep(ac.complex, ac.rates);
        for (const auto& [j, intervals] : table.degrees) {
            for (std::size_t k = 0; k < intervals.size(); ++k) {
                const auto& iv = intervals[k];
                if (k + 1 < intervals.size()) CHECK(iv.dimension != intervals[k + 1].dimension);
                // Closed right end, and one point inside.
                Rational inside = Q(0);
                if (iv.lower && iv.upper) inside = (*iv.lower + *iv.upper) / Q(2);
                else if (iv.upper) inside = *iv.upper - Q(1, 7);
                else if (iv.lower) inside = *iv.lower + Q(1);
                CHECK(vanishing_betti(ac.complex, ac.rates, Velocity{inside, false}).at(j) == iv.dimension);
                if (iv.upper) {
                    CHECK(vanishing_betti(ac.complex, ac.rates, Velocity{*iv.upper, false}).at(j) ==
                          iv.dimension);
                }
            }
        }
    }
}

TEST_CASE("chain subspace complexes") {
    const auto p = build_pinched_spheres(Q(2), 3);
    const CellularChains chains(p.complex);
    CHECK(chains.top() == 2);
    CHECK(chains.boundary(0).rows() == 0);
    const auto delta = thin_chains(chains, p.complex, p.rates, V("T^2"));
    const auto prime = thin_chains_with_boundaries(chains, p.complex, p.rates, V("T^2"));
    CHECK(prime.is_closed(chains));
    CHECK(prime.homology_dims(chains) == Dims{0, 1, 0});
    for (int j = 0; j <= 2; ++j) CHECK(prime.at(j).contains(delta.at(j)));

    const auto rel = thin_chains_rel(chains, p.complex, p.rates, p.equator, V("T^2"));
    const auto pair = pair_subcomplex(chains, p.complex, p.rates, p.equator, V("T^2"));
    CHECK(pair.is_closed(chains));
    for (int j = 0; j <= 2; ++j) {
        CHECK(delta.at(j).contains(rel.at(j)));
        CHECK(prime.at(j).contains(pair.at(j)));
    }

    const HomologyModel model(chains, prime, nullptr);
    CHECK(model.dim(1) == 1);
    const auto& reps = model.representatives(1);
    REQUIRE(reps.size() == 1);
    CHECK(chains.boundary(1).apply(reps[0]).is_zero());
    CHECK(model.coordinates(1, reps[0]) == SparseVector::unit(0));
}

TEST_CASE("pair on pinched spheres") {
    const auto p = build_pinched_spheres(Q(2), 3);
    const auto report = relative_vanishing(p.complex, p.rates, p.equator, V("T^2"));
    CHECK(report.absolute == Dims{0, 1, 0});
    CHECK(report.relative == Dims{0, 0, 0});
    CHECK(report.boundary == Dims{0, 1, 0});
    CHECK(report.exact);

    const auto les = les_check(p.complex, p.rates, p.equator, V("T^2"));
    CHECK(les.exact);
    REQUIRE(les.nodes.size() == 9);
    CHECK(les.nodes.front().group == "H_2(delta_X A)");
    CHECK(les.nodes.back().group == "H_0(X;A)");
    for (const auto& n : les.nodes) {
        CHECK(n.exact);
        CHECK(n.composition_zero);
        CHECK(n.rank_in + n.rank_out == n.dimension);
    }
    CHECK_THROWS_AS(relative_vanishing(p.complex, p.rates, {p.complex.cells_of_dim(1).front()}, V("T^2")), NotFaceClosed);
}

TEST_CASE("empty and full pairs") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        const auto ac = testing::random_complex(rng);
        const auto v = testing::random_velocity(rng);
        const auto absolute = vanishing_betti(ac.complex, ac.rates, v).dims;
        const auto empty = relative_vanishing(ac.complex, ac.rates, {}, v);
        CHECK(empty.relative == absolute);
        CHECK(empty.boundary == Dims(absolute.size(), 0));
        const auto full = relative_vanishing(ac.complex, ac.rates, ac.complex.all_cells(), v);
        CHECK(full.relative == Dims(absolute.size(), 0));
        CHECK(full.boundary == absolute);
    }
}

TEST_CASE("long exact sequence on random pairs") {
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 150; ++i) {
        const auto ac = testing::random_complex(rng);
        const auto a = testing::random_subcomplex(rng, ac.complex);
        const auto v = testing::random_velocity(rng);
        const auto les = les_check(ac.complex, ac.rates, a, v);
        CHECK(les.exact);
        CHECK(relative_vanishing(ac.complex, ac.rates, a, v).exact);
    }
}

TEST_CASE("excision on the circle") {
    const auto c = build_circle(6, ExtRational(Q(2)));
    // Edge k has id 6 + k and joins vertices k and k+1.
    const CellSet a = ids({0, 1, 2, 3, 6, 7, 8});
    const CellSet w = ids({1, 6, 7});
    const auto report = excision_check(c.complex, c.rates, a, w, V("T^2"));
    CHECK(report.equal);
    CHECK(report.full == report.excised);

    CHECK_THROWS_AS(excision_check(c.complex, c.rates, a, ids({1}), V("T^2")), PreconditionError);
    CHECK_THROWS_AS(excision_check(c.complex, c.rates, a, ids({5, 10, 11}), V("T^2")), PreconditionError);
}

TEST_CASE("excision of open stars in random pairs") {
    std::mt19937_64 rng(31415);
    int checked = 0;
    while (checked < 100) {
        const auto ac = testing::random_complex(rng);
        const auto& c = ac.complex;
        const auto vertices = c.cells_of_dim(0);
        const CellId centre = vertices[rng() % vertices.size()];
        const CellSet w = testing::open_star(c, centre);
        CellSet a = face_closure(c, w);
        a = testing::set_union(a, testing::random_subcomplex(rng, c));
        const auto v = testing::random_velocity(rng);
        const auto report = excision_check(c, ac.rates, a, w, v);
        CHECK(report.equal);
        ++checked;
    }
}
