#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gqs/grading.hpp"

#include <algorithm>
#include <set>

using namespace gqs;

namespace {

std::set<Coords> coord_set(const std::vector<Root>& roots)
{
    std::set<Coords> s;
    for (const auto& r : roots)
        s.insert(r.v);
    return s;
}

int fold3(int x)
{
    int r = ((x % 3) + 3) % 3;
    return r == 2 ? -1 : r;
}

} // namespace

TEST_CASE("raw admissible grading counts are stable")
{
    // frozen regression numbers (pre-deduplication)
    CHECK(enumerate_gradings(Algebra::G2).size() == 1);
    CHECK(enumerate_gradings(Algebra::F4).size() == 2);
    CHECK(enumerate_gradings(Algebra::E6).size() == 6);
    CHECK(enumerate_gradings(Algebra::E7).size() == 4);
    CHECK(enumerate_gradings(Algebra::E8).size() == 2);
    CHECK(enumerate_gradings(Algebra::D21A).size() == 42);
    CHECK(enumerate_gradings(Algebra::G3).size() == 20);
    CHECK(enumerate_gradings(Algebra::F4S).size() == 72);
    CHECK(enumerate_mod3_gradings(Algebra::G3).size() == 6);
}

TEST_CASE("grades are additive and levels negation-symmetric")
{
    for (Algebra a : {Algebra::E6, Algebra::F4S}) {
        const auto& sys = RootSystem::get(a);
        for (const auto& g : enumerate_gradings(a)) {
            for (int k = -2; k <= 2; ++k) {
                std::set<Coords> neg;
                for (const auto& v : coord_set(g.level(k)))
                    neg.insert(sys.canonical(RootSystem::negate(v)));
                CHECK(neg == coord_set(g.level(-k)));
            }
            for (const auto& x : sys.roots())
                for (const auto& y : sys.roots()) {
                    Coords s = sys.add(x.v, y.v);
                    if (sys.is_root(s))
                        CHECK(g.grade_of(s) == g.grade_of(x.v) + g.grade_of(y.v));
                }
        }
    }
}

TEST_CASE("rejection reasons")
{
    // zero functional: everything at level 0
    auto g0 = grade_decomposition({Algebra::F4, {0, 0, 0, 0}});
    CHECK(!g0.admissible);
    REQUIRE(!g0.rejections.empty());
    CHECK(g0.rejections.front() == "empty G_{+-1}");

    // marks that push some root past +-2
    auto g1 = grade_decomposition({Algebra::G3, {0, 1, 0}});
    CHECK(!g1.admissible);
    REQUIRE(!g1.rejections.empty());
    CHECK(g1.rejections.front() == "grade overflow");
}

TEST_CASE("every admissible functional in the sweep satisfies the generation conditions")
{
    for (Algebra a : kAllAlgebras)
        for (auto& g : enumerate_gradings(a)) {
            auto rep = check_generation(g);
            CHECK(rep.ok());
        }
}

TEST_CASE("generation check detects a damaged decomposition")
{
    auto g = grade_decomposition({Algebra::F4, {1, 0, 0, 0}});
    REQUIRE(g.admissible);
    // strip half of level +1: the level-2 sums, level-0 differences and the
    // span condition can no longer all hold
    auto& lv = g.levels.at(1);
    lv.erase(lv.begin() + static_cast<long>(lv.size() / 2), lv.end());
    auto rep = check_generation(g);
    CHECK(!rep.ok());
    CHECK(!g.admissible);
    CHECK(!g.rejections.empty());
}

TEST_CASE("module decomposition partitions each level")
{
    auto g = grade_decomposition({Algebra::F4, {1, 0, 0, 0}});
    check_generation(g);
    REQUIRE(g.admissible);
    CHECK(total_module_count(g) == 4);
    for (int level : {-2, -1, 1, 2}) {
        if (g.level(level).empty())
            continue;
        std::set<Coords> covered;
        std::size_t n = 0;
        for (const auto& m : decompose_modules(g, level)) {
            CHECK(m.dim_even + m.dim_odd == static_cast<int>(m.roots.size()));
            for (const auto& r : m.roots)
                covered.insert(r.v);
            n += m.roots.size();
        }
        CHECK(n == g.level(level).size());
        CHECK(covered == coord_set(g.level(level)));
    }
}

TEST_CASE("mod-3 gradings of G(3)")
{
    auto g = grade_decomposition({Algebra::G3, {0, 1, 0}, 3});
    check_generation(g);
    REQUIRE(g.admissible);
    CHECK(g.length == 3);
    CHECK(g.level(0).size() == 12);
    CHECK(g.level(1).size() == 8);
    CHECK(g.level(2).empty());

    const auto& sys = RootSystem::get(Algebra::G3);
    // additivity holds modulo 3
    for (const auto& x : sys.roots())
        for (const auto& y : sys.roots()) {
            Coords s = sys.add(x.v, y.v);
            if (sys.is_root(s))
                CHECK(g.grade_of(s) == fold3(g.grade_of(x.v) + g.grade_of(y.v)));
        }

    // the enumeration only keeps marks with no admissible integer lift
    for (const auto& m : enumerate_mod3_gradings(Algebra::G3)) {
        CHECK(m.spec.modulus == 3);
        CHECK(m.length == 3);
        auto lifted = grade_decomposition({Algebra::G3, m.spec.marks});
        if (lifted.admissible)
            check_generation(lifted);
        CHECK(!lifted.admissible);
    }
}

TEST_CASE("relation skeleton of a length-3 grading has no level-2 part")
{
    for (const auto& g : enumerate_gradings(Algebra::D21A)) {
        if (g.length != 3)
            continue;
        RelationSkeleton sk = relation_skeleton(g);
        CHECK(sk.level2.empty());
        CHECK(!sk.vanishing.empty());
        CHECK(!sk.triples.empty());
        // triples route through level 0 or a Cartan pairing
        const auto& sys = RootSystem::get(Algebra::D21A);
        for (const auto& tr : sk.triples) {
            Coords s = sys.add(tr.a.v, tr.b.v);
            bool zero = std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
            CHECK((zero || (sys.is_root(s) && g.grade_of(s) == 0)));
        }
    }
}
