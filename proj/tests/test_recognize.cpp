#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gqs/grading.hpp"
#include "gqs/recognize.hpp"

#include <stdexcept>

using namespace gqs;

TEST_CASE("simple roots of the full system are recovered")
{
    for (Algebra a : {Algebra::G2, Algebra::F4, Algebra::E6}) {
        const auto& sys = RootSystem::get(a);
        auto simple = subsystem_simple_roots(sys, sys.roots());
        CHECK(static_cast<int>(simple.size()) == sys.rank());
    }
}

TEST_CASE("level-0 subalgebras of known gradings are identified")
{
    {
        auto g = grade_decomposition({Algebra::E7, {1, 0, 0, 0, 0, 0, 0}});
        check_generation(g);
        REQUIRE(g.admissible);
        CHECK(identify_type(RootSystem::get(Algebra::E7), g.level(0)).label() == "C + E6");
    }
    {
        auto g = grade_decomposition({Algebra::F4, {1, 0, 0, 0}});
        check_generation(g);
        REQUIRE(g.admissible);
        CHECK(identify_type(RootSystem::get(Algebra::F4), g.level(0)).label() == "C + sp(6)");
    }
    {
        auto g = grade_decomposition({Algebra::G3, {0, 1, 0}, 3});
        check_generation(g);
        REQUIRE(g.admissible);
        CHECK(identify_type(RootSystem::get(Algebra::G3), g.level(0)).label() == "sl(3|1)");
    }
    {
        auto g = grade_decomposition({Algebra::G3, {1, 1, 0}, 3});
        check_generation(g);
        REQUIRE(g.admissible);
        CHECK(identify_type(RootSystem::get(Algebra::G3), g.level(0)).label()
              == "osp(1|2) + sl(3)");
    }
}

TEST_CASE("component splitting")
{
    auto g = grade_decomposition({Algebra::G3, {1, 1, 0}, 3});
    check_generation(g);
    REQUIRE(g.admissible);
    auto comps = split_components(RootSystem::get(Algebra::G3), g.level(0));
    REQUIRE(comps.size() == 2);
    // sorted by type label
    CHECK(comps[0].type == "osp(1|2)");
    CHECK(comps[0].rank == 1);
    CHECK(comps[0].n_even == 2);
    CHECK(comps[0].n_odd == 2);
    CHECK(comps[1].type == "sl(3)");
    CHECK(comps[1].rank == 2);
    CHECK(comps[1].n_even == 6);
    CHECK(comps[1].n_odd == 0);
}

TEST_CASE("non-closed root sets are rejected")
{
    const auto& sys = RootSystem::get(Algebra::G2);
    std::vector<Root> half;
    for (const auto& r : sys.roots())
        if (sys.positivity(r.v) > 0)
            half.push_back(r);
    CHECK_THROWS_AS(identify_type(sys, half), std::invalid_argument);
    CHECK_THROWS_AS(subsystem_simple_roots(sys, half), std::invalid_argument);
}

TEST_CASE("expected even parts of the super component types")
{
    CHECK(expected_even_part("sl(1|1)").empty());
    CHECK(expected_even_part("sl(3|1)") == std::vector<std::string>{"sl(3)"});
    CHECK(expected_even_part("osp(3|2)") == std::vector<std::string>{"sl(2)", "sl(2)"});
    CHECK_THROWS_AS(expected_even_part("E6"), std::invalid_argument);
}

TEST_CASE("empty set is the pure Cartan label")
{
    SubalgebraType t = identify_type(RootSystem::get(Algebra::F4), {});
    CHECK(t.central_rank == 4);
    CHECK(t.label() == "C + C + C + C");
}
