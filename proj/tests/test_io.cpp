#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gqs/json_io.hpp"
#include "gqs/render.hpp"

#include <stdexcept>

using namespace gqs;
using nlohmann::json;

TEST_CASE("root system JSON round-trips for every algebra")
{
    for (Algebra a : kAllAlgebras) {
        const auto& sys = RootSystem::get(a);
        json j = to_json(sys);
        const RootSystem& back = root_system_from_json(j);
        CHECK(back.algebra() == a);
    }
}

TEST_CASE("tampered root system payload is rejected")
{
    json j = to_json(RootSystem::get(Algebra::G2));
    j["roots"][0]["coords"][0] = 99;
    CHECK_THROWS_AS(root_system_from_json(j), std::runtime_error);
    json k = to_json(RootSystem::get(Algebra::G2));
    k["rank"] = 3;
    CHECK_THROWS_AS(root_system_from_json(k), std::runtime_error);
}

TEST_CASE("grading JSON round-trips, including the mod-3 case")
{
    {
        auto g = grade_decomposition({Algebra::E6, {0, 0, 0, 0, 1, 0}});
        check_generation(g);
        json j = to_json(g);
        auto back = grading_from_json(j);
        CHECK(back.spec == g.spec);
        CHECK(back.length == g.length);
        CHECK(back.levels == g.levels);
    }
    {
        auto g = grade_decomposition({Algebra::G3, {0, 1, 0}, 3});
        check_generation(g);
        json j = to_json(g);
        CHECK(j.at("modulus") == 3);
        auto back = grading_from_json(j);
        CHECK(back.spec.modulus == 3);
        CHECK(back.levels == g.levels);
    }
}

TEST_CASE("tampered grading payload is rejected")
{
    auto g = grade_decomposition({Algebra::E6, {0, 0, 0, 0, 1, 0}});
    check_generation(g);
    json j = to_json(g);
    j["length"] = 5;
    CHECK_THROWS_AS(grading_from_json(j), std::runtime_error);
}

TEST_CASE("classification entries serialize with dimensions and modulus")
{
    auto entries = classify(Algebra::G3);
    json arr = to_json(entries);
    REQUIRE(arr.size() == 5);
    int folded = 0;
    for (const auto& j : arr) {
        CHECK(j.contains("g0"));
        CHECK(j.contains("dim_g0"));
        CHECK(j.contains("marks"));
        if (j.at("modulus").get<int>() == 3)
            ++folded;
    }
    CHECK(folded == 2);
}

TEST_CASE("structure table JSON records only nonzero brackets")
{
    StructureTable t = build_d21a({Rat(-1, 3)});
    json j = to_json(t);
    CHECK(j.at("alpha") == "-1/3");
    CHECK(j.at("basis").size() == 17);
    for (const auto& b : j.at("brackets")) {
        bool nonzero = false;
        for (const auto& c : b.at("coeffs"))
            if (c.get<std::string>() != "0")
                nonzero = true;
        CHECK(nonzero);
    }
}

TEST_CASE("rational parsing and printing")
{
    CHECK(rat_str(Rat(-1, 3)) == "-1/3");
    CHECK(rat_str(Rat(4, 2)) == "2");
    CHECK(parse_rational("7/-2") == Rat(-7, 2));
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("x").has_value());
}

TEST_CASE("renderers produce the expected shapes")
{
    CHECK(coord_str(4) == "2");
    CHECK(coord_str(-1) == "-1/2");
    auto entries = classify(Algebra::G3);
    std::string text = render_classification_text(entries);
    CHECK(text.find("sl(3|1)") != std::string::npos);
    CHECK(text.find("mod 3") != std::string::npos);
    std::string tsv = render_classification_tsv(entries);
    CHECK(tsv.find("modulus") != std::string::npos);
    std::string dot = render_dot(RootSystem::get(Algebra::F4S), false);
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(dot.find("style=dashed") != std::string::npos);   // odd node marker
}
