#include "gqs/golden.hpp"

#include "gqs/recognize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gqs {

namespace {

GoldenRow row(Algebra a, std::string g0, int len, DimPair d0, DimPair d1, DimPair d2,
              bool consistent = false, int modules = -1)
{
    return GoldenRow{a, std::move(g0), len, d0, d1, d2, consistent, modules};
}

} // namespace

const std::vector<GoldenRow>& golden_lie_rows()
{
    static const std::vector<GoldenRow> rows = {
        row(Algebra::G2, "C + sl(2)", 5, {4, 0}, {4, 0}, {1, 0}),
        row(Algebra::F4, "C + sp(6)", 5, {22, 0}, {14, 0}, {1, 0}, false, 4),
        row(Algebra::F4, "C + so(7)", 5, {22, 0}, {8, 0}, {7, 0}, false, 4),
        row(Algebra::E6, "C + so(10)", 3, {46, 0}, {16, 0}, {0, 0}),
        row(Algebra::E6, "C + sl(2) + sl(5)", 5, {28, 0}, {20, 0}, {5, 0}),
        row(Algebra::E6, "C + sl(6)", 5, {36, 0}, {20, 0}, {1, 0}),
        row(Algebra::E6, "C + C + so(8)", 5, {30, 0}, {16, 0}, {8, 0}, false, 6),
        row(Algebra::E7, "C + E6", 3, {79, 0}, {27, 0}, {0, 0}),
        row(Algebra::E7, "C + sl(2) + so(10)", 5, {49, 0}, {32, 0}, {10, 0}),
        row(Algebra::E7, "C + so(12)", 5, {67, 0}, {32, 0}, {1, 0}),
        row(Algebra::E7, "C + sl(7)", 5, {49, 0}, {35, 0}, {7, 0}),
        row(Algebra::E8, "C + E7", 5, {134, 0}, {56, 0}, {1, 0}),
        row(Algebra::E8, "C + so(14)", 5, {92, 0}, {64, 0}, {14, 0}),
    };
    return rows;
}

const std::vector<GoldenRow>& golden_super_rows()
{
    // component labels are kept lexicographically sorted within each row
    static const std::vector<GoldenRow> rows = {
        row(Algebra::D21A, "C + sl(2) + sl(2)", 5, {7, 0}, {0, 4}, {1, 0}, true),
        row(Algebra::D21A, "C + sl(1|2)", 3, {5, 4}, {2, 2}, {0, 0}, false, 2),
        row(Algebra::D21A, "C + C + sl(1|1)", 5, {3, 2}, {2, 2}, {1, 1}, false),
        row(Algebra::G3, "C + G2", 5, {15, 0}, {0, 7}, {1, 0}, true, 4),
        row(Algebra::G3, "C + sl(1|2)", 5, {5, 4}, {4, 3}, {2, 2}, false),
        row(Algebra::G3, "sl(3|1)", 3, {9, 6}, {4, 4}, {0, 0}, false),
        row(Algebra::G3, "C + osp(3|2)", 5, {7, 6}, {4, 4}, {1, 0}, false),
        row(Algebra::G3, "osp(1|2) + sl(3)", 3, {11, 2}, {3, 6}, {0, 0}, false),
        row(Algebra::F4S, "C + so(7)", 5, {22, 0}, {0, 8}, {1, 0}, true),
        row(Algebra::F4S, "C + sl(1|2) + sl(2)", 5, {8, 4}, {6, 4}, {2, 2}, false),
        row(Algebra::F4S, "C + osp(2|4)", 3, {12, 8}, {6, 4}, {0, 0}, false),
        row(Algebra::F4S, "C + sl(2) + so(5)", 5, {14, 0}, {0, 8}, {5, 0}, true),
        row(Algebra::F4S, "C + D(2,1;-1/3)", 5, {10, 8}, {6, 4}, {1, 0}, false),
        row(Algebra::F4S, "C + sl(3|1)", 5, {10, 6}, {4, 4}, {3, 1}, false),
    };
    return rows;
}

bool all_passed(const std::vector<CheckResult>& results)
{
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& c) { return c.pass; });
}

namespace {

CheckResult make_check(std::string name, bool pass, std::string detail = {})
{
    return CheckResult{std::move(name), pass, pass ? std::string() : std::move(detail)};
}

std::set<Coords> coord_set(const std::vector<Root>& roots)
{
    std::set<Coords> s;
    for (const auto& r : roots)
        s.insert(r.v);
    return s;
}

std::set<Coords> negated(const std::set<Coords>& s)
{
    std::set<Coords> out;
    for (const auto& v : s)
        out.insert(RootSystem::negate(v));
    return out;
}

// reference listings carry an arbitrary overall sign; match against either side
bool matches_level(const GradedDecomposition& g, int level, const std::set<Coords>& expected)
{
    return coord_set(g.level(level)) == expected || coord_set(g.level(-level)) == expected;
}

bool golden_order(const GoldenRow& a, const GoldenRow& b)
{
    if (a.dim_g0.total() != b.dim_g0.total())
        return a.dim_g0.total() > b.dim_g0.total();
    return a.dim_g1.total() > b.dim_g1.total();
}

CheckResult check_table(Algebra a, const std::vector<GoldenRow>& table)
{
    std::vector<GoldenRow> expected;
    for (const auto& r : table)
        if (r.algebra == a)
            expected.push_back(r);
    std::sort(expected.begin(), expected.end(), golden_order);

    auto entries = classify(a);
    std::ostringstream os;
    if (entries.size() != expected.size()) {
        os << "expected " << expected.size() << " rows, got " << entries.size();
        return make_check("table_" + algebra_name(a), false, os.str());
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        const auto& x = expected[i];
        if (e.g0_label != x.g0 || e.length != x.length || e.dim_g0 != x.dim_g0
            || e.dim_g1 != x.dim_g1 || e.dim_g2 != x.dim_g2 || e.consistent != x.consistent
            || (x.modules >= 0 && e.module_count != x.modules)) {
            os << "row " << i << ": got {" << e.g0_label << ", l=" << e.length << ", "
               << e.dim_g0.even << "+" << e.dim_g0.odd << " / " << e.dim_g1.even << "+"
               << e.dim_g1.odd << " / " << e.dim_g2.even << "+" << e.dim_g2.odd
               << ", consistent=" << e.consistent << ", modules=" << e.module_count
               << "}, expected {" << x.g0 << ", l=" << x.length << ", ...}";
            return make_check("table_" + algebra_name(a), false, os.str());
        }
    }
    return make_check("table_" + algebra_name(a), true);
}

CheckResult check_roots(Algebra a, int n_roots, int n_odd, int dim)
{
    const auto& sys = RootSystem::get(a);
    bool ok = static_cast<int>(sys.roots().size()) == n_roots && sys.odd_count() == n_odd
              && sys.dim() == dim;
    std::ostringstream os;
    os << "got " << sys.roots().size() << " roots (" << sys.odd_count() << " odd), dim "
       << sys.dim();
    return make_check("roots_" + algebra_name(a), ok, os.str());
}

const ClassificationEntry* find_by_dims(const std::vector<ClassificationEntry>& entries,
                                        DimPair d0, DimPair d1, DimPair d2)
{
    for (const auto& e : entries)
        if (e.dim_g0 == d0 && e.dim_g1 == d1 && e.dim_g2 == d2)
            return &e;
    return nullptr;
}

// the grading obtained by deleting one node, i.e. unit marks on that node
std::vector<GradedDecomposition> unit_mark_gradings(Algebra a)
{
    const auto& sys = RootSystem::get(a);
    std::vector<GradedDecomposition> out;
    for (int i = 0; i < sys.rank(); ++i) {
        std::vector<int> marks(static_cast<std::size_t>(sys.rank()), 0);
        marks[static_cast<std::size_t>(i)] = 1;
        auto g = grade_decomposition({a, marks});
        if (g.admissible)
            check_generation(g);
        if (g.admissible)
            out.push_back(std::move(g));
    }
    return out;
}

CheckResult check_grading_axioms(Algebra a)
{
    const auto& sys = RootSystem::get(a);
    std::vector<GradedDecomposition> gradings = enumerate_gradings(a);
    bool any_length3 = std::any_of(gradings.begin(), gradings.end(),
                                   [](const GradedDecomposition& g) { return g.length == 3; });
    if (sys.is_super() && !any_length3)
        for (auto& g : enumerate_mod3_gradings(a))
            gradings.push_back(std::move(g));
    auto fold = [](int x, int modulus) {
        if (modulus == 0)
            return x;
        int r = ((x % modulus) + modulus) % modulus;
        return 2 * r > modulus ? r - modulus : r;
    };
    for (auto& g : gradings) {
        // level-negation symmetry
        for (int k = -2; k <= 2; ++k)
            if (negated(coord_set(g.level(k))) != coord_set(g.level(-k)))
                return make_check("grading_axioms_" + algebra_name(a), false,
                                  "level symmetry broken");
        // grade additivity on root pairs (modulo the fold for Z/3-gradings)
        for (const auto& x : sys.roots())
            for (const auto& y : sys.roots()) {
                Coords s = sys.add(x.v, y.v);
                if (sys.is_root(s)
                    && g.grade_of(s)
                           != fold(g.grade_of(x.v) + g.grade_of(y.v), g.spec.modulus))
                    return make_check("grading_axioms_" + algebra_name(a), false,
                                      "grade additivity broken");
            }
        // dimension identity
        std::size_t n = 0;
        for (int k = -2; k <= 2; ++k)
            n += g.level(k).size();
        if (static_cast<int>(n) + sys.rank() != sys.dim())
            return make_check("grading_axioms_" + algebra_name(a), false,
                              "dimension identity broken");
        // generation conditions still hold
        GradedDecomposition copy = g;
        if (!check_generation(copy).ok())
            return make_check("grading_axioms_" + algebra_name(a), false,
                              "generation conditions broken");
        // no nonzero-level module is its own negation set
        for (int level : {-2, -1, 1, 2}) {
            if (g.level(level).empty())
                continue;
            for (const auto& m : decompose_modules(g, level)) {
                auto s = coord_set(m.roots);
                if (s == negated(s))
                    return make_check("grading_axioms_" + algebra_name(a), false,
                                      "self-conjugate module at nonzero level");
            }
        }
    }
    return make_check("grading_axioms_" + algebra_name(a), true);
}

CheckResult check_d21a_suite(const Rat& alpha, const std::string& tag)
{
    StructureTable t = build_d21a({alpha});
    int odd = 0;
    for (const auto& b : t.basis)
        if (b.parity == Parity::Odd)
            ++odd;
    if (t.dim() != 17 || odd != 8)
        return make_check("d21a_suite_" + tag, false, "wrong dimension split");
    if (!check_super_jacobi(t).empty())
        return make_check("d21a_suite_" + tag, false, "Jacobi violation");
    auto rep = verify_relations(t);
    if (!rep.ok())
        return make_check("d21a_suite_" + tag, false,
                          "relation failed: " + rep.failures.front());
    if (!check_grade_compatibility(t).empty())
        return make_check("d21a_suite_" + tag, false, "bracket off-grade");
    return make_check("d21a_suite_" + tag, true);
}

} // namespace

GradedDecomposition d21a_length3_grading()
{
    const std::set<Coords> g1 = {{4, 0, 0}, {0, 4, 0}, {2, 2, 2}, {2, 2, -2}};
    for (auto& g : enumerate_gradings(Algebra::D21A)) {
        if (coord_set(g.level(1)) == g1)
            return g;
        if (coord_set(g.level(-1)) == g1) {
            std::vector<int> neg = g.spec.marks;
            for (int& m : neg)
                m = -m;
            auto flipped = grade_decomposition({Algebra::D21A, neg});
            check_generation(flipped);
            return flipped;
        }
    }
    throw std::logic_error("length-3 grading of D(2,1;a) not found by enumeration");
}

std::vector<std::string> cross_module_oracle(const StructureTable& t,
                                             const GradedDecomposition& g)
{
    std::vector<std::string> bad;
    auto unit_for = [&](const Coords& root) {
        for (const auto& b : t.basis)
            if (b.root == root)
                return t.unit(b.label);
        throw std::logic_error("no basis element for root " + std::to_string(root.size()));
    };
    auto is_zero_vec = [](const Vec& v) {
        return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == Rat(0); });
    };
    auto zero = [](const Coords& v) {
        return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    };

    RelationSkeleton sk = relation_skeleton(g);
    for (const auto& [a, b] : sk.vanishing)
        if (!is_zero_vec(t.bracket(unit_for(a.v), unit_for(b.v))))
            bad.push_back("vanishing pair has nonzero bracket");
    for (const auto& [a, b, target] : sk.level2) {
        Vec v = t.bracket(unit_for(a.v), unit_for(b.v));
        Vec u = unit_for(target.v);
        // v must be a nonzero multiple of the target root vector
        bool proportional = !is_zero_vec(v);
        for (std::size_t i = 0; i < v.size() && proportional; ++i)
            if (u[i] == Rat(0) && v[i] != Rat(0))
                proportional = false;
        if (!proportional)
            bad.push_back("level-2 pair does not hit its target");
    }
    const auto& sys = RootSystem::get(g.spec.algebra);
    for (const auto& tr : sk.triples) {
        Vec v = t.bracket(t.bracket(unit_for(tr.a.v), unit_for(tr.b.v)), unit_for(tr.c.v));
        if (!tr.target) {
            if (!is_zero_vec(v))
                bad.push_back("targetless triple has nonzero bracket");
            continue;
        }
        Vec u = unit_for(tr.target->v);
        bool proportional = true;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (u[i] == Rat(0) && v[i] != Rat(0))
                proportional = false;
        if (!proportional) {
            bad.push_back("triple lands outside its target line");
            continue;
        }
        // Cartan pairings (a+b = 0) may legitimately annihilate the target;
        // a nonzero level-0 root must act nontrivially along its string.
        if (!zero(sys.add(tr.a.v, tr.b.v)) && is_zero_vec(v))
            bad.push_back("triple with root-sum action vanished");
    }
    return bad;
}

std::vector<CheckResult> verify_all()
{
    std::vector<CheckResult> out;

    for (Algebra a : {Algebra::G2, Algebra::F4, Algebra::E6, Algebra::E7, Algebra::E8})
        out.push_back(check_table(a, golden_lie_rows()));
    for (Algebra a : {Algebra::D21A, Algebra::G3, Algebra::F4S})
        out.push_back(check_table(a, golden_super_rows()));

    out.push_back(check_roots(Algebra::G2, 12, 0, 14));
    out.push_back(check_roots(Algebra::F4, 48, 0, 52));
    out.push_back(check_roots(Algebra::E6, 72, 0, 78));
    out.push_back(check_roots(Algebra::E7, 126, 0, 133));
    out.push_back(check_roots(Algebra::E8, 240, 0, 248));
    out.push_back(check_roots(Algebra::D21A, 14, 8, 17));
    out.push_back(check_roots(Algebra::G3, 28, 14, 31));
    out.push_back(check_roots(Algebra::F4S, 36, 16, 40));

    {
        const std::set<Coords> g1 = {{2, 0, -2}, {0, 2, -2}, {4, -2, -2}, {-2, 4, -2}};
        const std::set<Coords> g2 = {{2, 2, -4}};
        bool found = false;
        for (const auto& g : unit_mark_gradings(Algebra::G2))
            if ((matches_level(g, -1, g1) && matches_level(g, -2, g2)))
                found = true;
        out.push_back(make_check("spot_g2_step1", found, "listed G2 level sets not reproduced"));
    }
    {
        std::set<Coords> g2;
        for (Coords v : std::vector<Coords>{{2, 0, 0, 0},
                                            {2, 2, 0, 0},
                                            {2, -2, 0, 0},
                                            {2, 0, 2, 0},
                                            {2, 0, -2, 0},
                                            {2, 0, 0, 2},
                                            {2, 0, 0, -2}})
            g2.insert(std::move(v));
        bool found = false;
        for (const auto& g : unit_mark_gradings(Algebra::F4))
            if (matches_level(g, -2, g2))
                found = true;
        out.push_back(make_check("spot_f4_step3", found, "listed F4 level set not reproduced"));
    }
    {
        bool found = false;
        for (const auto& g : unit_mark_gradings(Algebra::E6))
            if (g.length == 3 && g.level(1).size() == 16)
                found = true;
        out.push_back(make_check("spot_e6_step1", found, "no unit-mark E6 grading with dim 16"));
    }
    {
        auto entries = classify(Algebra::E7);
        out.push_back(make_check("spot_e7_step4",
                                 find_by_dims(entries, {49, 0}, {35, 0}, {7, 0}) != nullptr,
                                 "E7 entry with dims 49/35/7 missing"));
    }
    {
        auto entries = classify(Algebra::E8);
        out.push_back(make_check("spot_e8_step1",
                                 find_by_dims(entries, {134, 0}, {56, 0}, {1, 0}) != nullptr,
                                 "E8 entry with dims 134/56/1 missing"));
    }
    {
        auto g = grade_decomposition({Algebra::F4S, {1, 0, 0, 0}});
        check_generation(g);
        auto all_odd = [](const std::vector<Root>& v) {
            return std::all_of(v.begin(), v.end(),
                               [](const Root& r) { return r.parity == Parity::Odd; });
        };
        bool ok = g.admissible && g.length == 5 && g.consistent && g.level(1).size() == 8
                  && g.level(-1).size() == 8 && all_odd(g.level(1)) && all_odd(g.level(-1))
                  && matches_level(g, 2, {{2, 0, 0, 0}});
        out.push_back(make_check("spot_f4s_step1", ok, "F(4) node-1 grading mismatch"));
    }
    {
        bool ok = true;
        std::string detail;
        try {
            auto g = d21a_length3_grading();
            ok = g.length == 3;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        out.push_back(make_check("spot_d21a_step2_g1", ok, detail));
    }

    {
        auto g = grade_decomposition({Algebra::F4, {1, 0, 0, 0}});
        check_generation(g);
        out.push_back(make_check("modules_f4_step1",
                                 g.admissible && total_module_count(g) == 4,
                                 "expected 4 modules"));
    }
    {
        auto entries = classify(Algebra::E6);
        const auto* e = find_by_dims(entries, {30, 0}, {16, 0}, {8, 0});
        out.push_back(make_check("modules_e6_step4", e && e->module_count == 6,
                                 "expected 6 modules"));
    }
    {
        auto entries = classify(Algebra::D21A);
        const ClassificationEntry* len3 = nullptr;
        for (const auto& e : entries)
            if (e.length == 3)
                len3 = &e;
        out.push_back(make_check("modules_d21a_step2", len3 && len3->module_count == 2,
                                 "expected 2 modules"));
    }
    {
        auto entries = classify(Algebra::G3);
        const auto* e = find_by_dims(entries, {15, 0}, {0, 7}, {1, 0});
        out.push_back(make_check("modules_g3_step1", e && e->module_count == 4,
                                 "expected 4 modules"));
    }

    {
        bool ok = true;
        for (Algebra a : {Algebra::D21A, Algebra::G3, Algebra::F4S})
            for (const auto& e : classify(a)) {
                bool expect = (a == Algebra::D21A && e.dim_g0 == DimPair{7, 0})
                              || (a == Algebra::G3 && e.dim_g0 == DimPair{15, 0})
                              || (a == Algebra::F4S && e.dim_g0 == DimPair{22, 0})
                              || (a == Algebra::F4S && e.dim_g0 == DimPair{14, 0});
                if (e.consistent != expect)
                    ok = false;
            }
        out.push_back(make_check("consistency_flags", ok,
                                 "consistent rows differ from the expected four"));
    }

    out.push_back(check_d21a_suite(Rat(1), "1"));
    out.push_back(check_d21a_suite(Rat(-1, 3), "-1_3"));
    out.push_back(check_d21a_suite(Rat(2, 3), "2_3"));

    for (Algebra a : kAllAlgebras)
        out.push_back(check_grading_axioms(a));

    {
        bool ok = true;
        std::string detail;
        try {
            auto g = d21a_length3_grading();
            auto t = build_d21a({Rat(1)});
            auto bad = cross_module_oracle(t, g);
            if (!bad.empty()) {
                ok = false;
                detail = bad.front();
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        out.push_back(make_check("cross_module_oracle", ok, detail));
    }

    return out;
}

} // namespace gqs
