#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gqs/equivalence.hpp"
#include "gqs/golden.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace gqs;

namespace {

// orbit of a marks vector under the simple reflections (acting on functionals)
std::set<std::vector<int>> reflection_orbit(const RootSystem& sys, const std::vector<int>& start)
{
    std::set<std::vector<int>> seen{start};
    std::vector<std::vector<int>> queue{start};
    while (!queue.empty()) {
        auto m = queue.back();
        queue.pop_back();
        for (int i = 0; i < sys.rank(); ++i) {
            auto next = m;
            int mi = m[static_cast<std::size_t>(i)];
            for (int j = 0; j < sys.rank(); ++j)
                next[static_cast<std::size_t>(j)] -= cartan_int(sys, i, j) * mi;
            if (seen.insert(next).second)
                queue.push_back(next);
        }
    }
    return seen;
}

} // namespace

TEST_CASE("dominance walk lands in the Weyl orbit, on a dominant vector")
{
    const auto& g2 = RootSystem::get(Algebra::G2);
    for (std::vector<int> start : {std::vector<int>{-1, -1}, {-1, 0}, {2, -1}, {0, -2}}) {
        auto dom = canonicalize_marks(g2, start);
        CAPTURE(start);
        for (int m : dom)
            CHECK(m >= 0);
        CHECK(reflection_orbit(g2, start).count(dom) == 1);
    }
    // reflections permute the roots, so the multiset of grades is an orbit
    // invariant (computed without the +-2 truncation)
    auto grade_multiset = [&](const std::vector<int>& marks) {
        GradedDecomposition g;
        g.spec = {Algebra::G2, marks};
        std::multiset<int> s;
        for (const auto& r : g2.roots())
            s.insert(g.grade_of(r.v));
        return s;
    };
    for (std::vector<int> start : {std::vector<int>{-1, -1}, {2, -1}}) {
        auto dom = canonicalize_marks(g2, start);
        CHECK(grade_multiset(start) == grade_multiset(dom));
    }
}

TEST_CASE("diagram automorphism counts")
{
    CHECK(diagram_automorphisms(RootSystem::get(Algebra::G2)).size() == 1);
    CHECK(diagram_automorphisms(RootSystem::get(Algebra::F4)).size() == 1);
    CHECK(diagram_automorphisms(RootSystem::get(Algebra::E6)).size() == 2);
    CHECK(diagram_automorphisms(RootSystem::get(Algebra::E7)).size() == 1);
    CHECK(diagram_automorphisms(RootSystem::get(Algebra::E8)).size() == 1);
    // the identity is always present
    for (Algebra a : kAllAlgebras) {
        auto autos = diagram_automorphisms(RootSystem::get(a));
        std::vector<int> id(static_cast<std::size_t>(RootSystem::get(a).rank()));
        for (std::size_t i = 0; i < id.size(); ++i)
            id[i] = static_cast<int>(i);
        CHECK(std::find(autos.begin(), autos.end(), id) != autos.end());
    }
}

TEST_CASE("canonical Lie key identifies a functional with its negation and flips")
{
    const auto& e6 = RootSystem::get(Algebra::E6);
    std::vector<int> m{0, 0, 0, 0, 1, 0};
    std::vector<int> neg{0, 0, 0, 0, -1, 0};
    CHECK(canonical_lie_key(e6, m) == canonical_lie_key(e6, neg));
    // the nontrivial diagram flip of E6 maps node 5 to another end node; the
    // two unit functionals related by it share one key
    auto autos = diagram_automorphisms(e6);
    REQUIRE(autos.size() == 2);
    const auto& p = autos[0] == std::vector<int>{0, 1, 2, 3, 4, 5} ? autos[1] : autos[0];
    std::vector<int> flipped(6, 0);
    for (std::size_t i = 0; i < 6; ++i)
        flipped[static_cast<std::size_t>(p[i])] = m[i];
    CHECK(canonical_lie_key(e6, m) == canonical_lie_key(e6, flipped));
}

TEST_CASE("super equivalence basics")
{
    auto gradings = enumerate_gradings(Algebra::D21A);
    REQUIRE(!gradings.empty());
    for (const auto& g : gradings) {
        CHECK(equivalent_super(g, g));
        std::vector<int> neg = g.spec.marks;
        for (int& x : neg)
            x = -x;
        auto flipped = grade_decomposition({Algebra::D21A, neg});
        check_generation(flipped);
        REQUIRE(flipped.admissible);
        CHECK(equivalent_super(g, flipped));
    }
    // distinct classification rows are pairwise inequivalent
    auto pick = [&](const ClassificationEntry& e) {
        auto g = grade_decomposition({e.algebra, e.marks, e.modulus});
        check_generation(g);
        return g;
    };
    auto entries = classify(Algebra::D21A);
    REQUIRE(entries.size() == 3);
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            CHECK(!equivalent_super(pick(entries[i]), pick(entries[j])));
}

TEST_CASE("a Z-grading is never equivalent to a mod-3 grading")
{
    auto z = enumerate_gradings(Algebra::G3);
    auto folded = enumerate_mod3_gradings(Algebra::G3);
    REQUIRE(!z.empty());
    REQUIRE(!folded.empty());
    for (const auto& f : folded) {
        CHECK(equivalent_super(f, f));
        for (const auto& g : z)
            CHECK(!equivalent_super(f, g));
    }
}

TEST_CASE("classification row counts and labels match the golden tables")
{
    std::map<Algebra, std::size_t> expected{
        {Algebra::G2, 1}, {Algebra::F4, 2},  {Algebra::E6, 4}, {Algebra::E7, 4},
        {Algebra::E8, 2}, {Algebra::D21A, 3}, {Algebra::G3, 5}, {Algebra::F4S, 6},
    };
    for (auto [a, n] : expected) {
        auto entries = classify(a);
        CAPTURE(algebra_name(a));
        CHECK(entries.size() == n);
        std::multiset<std::string> got, want;
        for (const auto& e : entries)
            got.insert(e.g0_label);
        const auto& rows = is_superalgebra(a) ? golden_super_rows() : golden_lie_rows();
        for (const auto& r : rows)
            if (r.algebra == a)
                want.insert(r.g0);
        CHECK(got == want);
    }
}

TEST_CASE("classification dimensions satisfy the global identity")
{
    for (Algebra a : kAllAlgebras) {
        const auto& sys = RootSystem::get(a);
        for (const auto& e : classify(a)) {
            int total = e.dim_g0.total() + 2 * e.dim_g1.total() + 2 * e.dim_g2.total();
            CHECK(total == sys.dim());
        }
    }
}
