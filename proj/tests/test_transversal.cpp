#include <doctest.h>

#include "detours/error.hpp"
#include "detours/generators.hpp"
#include "detours/transversal.hpp"
#include "oracles.hpp"

using namespace detours;

TEST_SUITE("transversal") {

TEST_CASE("bound arithmetic") {
    CHECK(bound_for(5, item_mode::path) == 4);
    CHECK(bound_for(15, item_mode::path) == 12);
    CHECK(bound_for(12, item_mode::cycle) == 8);
    CHECK(bound_for(1, item_mode::path) == 4);
    CHECK(bound_for(1, item_mode::cycle) == 2);
    CHECK_THROWS_AS(bound_for(0, item_mode::path), input_error);

    const auto rows = bounds_table(20);
    REQUIRE(rows.size() == 20);
    CHECK(rows[14].omega == 15);
    CHECK(rows[14].path_bound == 12);
    CHECK(rows[14].path_prior == 13);
    CHECK(rows[14].path_improved);
    CHECK(rows[12].cycle_bound == 10);
    CHECK(rows[12].cycle_prior == 10);
    CHECK_FALSE(rows[12].cycle_improved);
    CHECK(rows[0].path_prior == 1);
    CHECK_THROWS_AS(bounds_table(0), input_error);
}

TEST_CASE("fixed graphs in path mode") {
    const auto k4 = construct_path_transversal(named_graph("k_4"));
    CHECK(k4.central.type == 3);
    CHECK(k4.result.f.size() <= 4);
    CHECK(vertex_set{0, 1, 2, 3}.includes(k4.result.f));

    const auto bowtie = construct_path_transversal(named_graph("bowtie"));
    CHECK(bowtie.central.type == 1);
    CHECK(bowtie.result.f == vertex_set{0});
    REQUIRE(bowtie.result.fam.members.size() == 1);
    CHECK(bowtie.result.fam.members[0].step == family_step::open_crossing);
    CHECK(verify_transversal(bowtie.items, bowtie.result).ok);

    const auto opt = compare_with_optimum(bowtie);
    CHECK(opt.opt_size == 1);
    CHECK(opt.algo_size <= 4);
    CHECK(opt.bound == 4);

    const auto k5 = compare_with_optimum(named_graph("k_5"), item_mode::path);
    CHECK(k5.opt_size == 1);
    CHECK(k5.bound == 4);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(build_transversal(named_graph("cycle_4"), item_mode::path), precondition_error);
    CHECK_THROWS_AS(build_transversal(graph(3, {{0, 1}}), item_mode::path), precondition_error);
    CHECK_THROWS_AS(build_transversal(named_graph("path_4"), item_mode::cycle), precondition_error);
    try {
        build_transversal(named_graph("path_4"), item_mode::cycle);
    } catch (const precondition_error& e) {
        CHECK(e.reason() == "not 2-connected");
    }
}

TEST_CASE("build_family rejects type 3 central cliques") {
    const auto g = named_graph("k_4");
    const auto c = construct_path_transversal(g);
    CHECK_THROWS_AS(build_family(g, c.central, c.items, c.threshold), input_error);
}

TEST_CASE("verify_transversal") {
    const auto ds = all_detours(named_graph("bowtie"));
    transversal full;
    full.f = vertex_set{0, 1, 2, 3, 4};
    CHECK(verify_transversal(ds, full).ok);
    transversal none;
    const auto v = verify_transversal(ds, none);
    CHECK_FALSE(v.ok);
    REQUIRE(v.uncovered);
    CHECK(*v.uncovered == ds.items.front());
}

TEST_CASE("path transversals of random chordal graphs") {
    int families = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const int k = 1 + static_cast<int>(seed % 5);
        const auto g = gen_ktree(k + 1 + static_cast<int>(seed % (k < 4 ? 12 : 6)), k, seed);
        const auto c = construct_path_transversal(g);
        const auto& tv = c.result;
        CHECK(g.is_clique(tv.f));
        CHECK(tv.f.size() <= bound_for(c.omega, item_mode::path));
        CHECK(tv.x.includes(tv.f));
        CHECK(verify_transversal(c.items, tv).ok);
        CHECK(tv.fam.members.size() <= 4);
        families += !tv.fam.members.empty();
        if (c.central.type == 3) CHECK(tv.f.size() == std::min(tv.x.size(), tv.bound));
        // A large detour missing F would need |X| >= |F| + |R ∩ X| > ω.
        for (const auto& p : c.items.items)
            if (classify(g, tv.x, p, c.threshold).size == size_class::large) CHECK(p.members().intersects(tv.f));
        const auto r = compare_with_optimum(c);
        CHECK(r.opt_size <= r.algo_size);
        CHECK(r.algo_size <= r.bound);
        std::vector<std::uint64_t> masks;
        for (const auto& p : c.items.items) masks.push_back(oracle::mask_of(p.vertices));
        CHECK(static_cast<int>(r.opt_size) == oracle::min_hitting_size(masks));
    }
    CHECK(families > 0);
}

TEST_CASE("cycle transversals of random 2-connected chordal graphs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int k = 2 + static_cast<int>(seed % 4);
        const auto g = gen_ktree(k + 1 + static_cast<int>(seed % (k < 4 ? 9 : 5)), k, seed);
        REQUIRE(is_biconnected(g));
        const auto c = construct_cycle_transversal(g);
        CHECK(g.is_clique(c.result.f));
        CHECK(c.result.f.size() <= bound_for(c.omega, item_mode::cycle));
        CHECK(c.result.fam.members.size() <= 2);
        for (const auto& cyc : c.items.items) CHECK(cyc.members().intersects(c.result.f));
    }
}

}
