#include "gqs/grading.hpp"

#include "gqs/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gqs {

namespace {

// centered residue: for modulus 3 maps ...,-2,-1,0,1,2,... to 1,-1,0,1,-1,...
int reduce_grade(int g, int modulus)
{
    if (modulus == 0)
        return g;
    int r = ((g % modulus) + modulus) % modulus;
    if (2 * r > modulus)
        r -= modulus;
    return r;
}

} // namespace

const std::vector<Root>& GradedDecomposition::level(int k) const
{
    static const std::vector<Root> empty;
    auto it = levels.find(k);
    return it == levels.end() ? empty : it->second;
}

int GradedDecomposition::grade_of(const Coords& root) const
{
    const auto& sys = RootSystem::get(spec.algebra);
    const auto& exp = sys.expansion(root);
    int g = 0;
    for (std::size_t i = 0; i < exp.size(); ++i)
        g += spec.marks[i] * exp[i];
    return reduce_grade(g, spec.modulus);
}

GradedDecomposition grade_decomposition(const GradingSpec& spec)
{
    const auto& sys = RootSystem::get(spec.algebra);
    if (spec.marks.size() != static_cast<std::size_t>(sys.rank()))
        throw std::invalid_argument("marks length must equal the rank");

    GradedDecomposition g;
    g.spec = spec;
    bool overflow = false;
    bool consistent = true;
    for (const auto& root : sys.roots()) {
        const auto& exp = sys.expansion(root.v);
        int grade = 0;
        for (std::size_t i = 0; i < exp.size(); ++i)
            grade += spec.marks[i] * exp[i];
        grade = reduce_grade(grade, spec.modulus);
        if (grade < -2 || grade > 2) {
            overflow = true;
            continue;
        }
        g.levels[grade].push_back(root);
        const bool odd_grade = grade % 2 != 0;
        if ((root.parity == Parity::Odd) != odd_grade)
            consistent = false;
    }
    for (auto& [k, v] : g.levels)
        std::sort(v.begin(), v.end());

    if (overflow) {
        g.rejections.push_back("grade overflow");
        return g;
    }
    g.consistent = consistent;
    if (g.level(1).empty() || g.level(-1).empty()) {
        g.rejections.push_back("empty G_{+-1}");
        return g;
    }
    g.length = g.level(2).empty() && g.level(-2).empty() ? 3 : 5;
    g.admissible = true;
    return g;
}

GenerationReport check_generation(GradedDecomposition& g)
{
    const auto& sys = RootSystem::get(g.spec.algebra);
    GenerationReport rep;

    std::set<Coords> level1;
    for (const auto& r : g.level(1))
        level1.insert(r.v);

    for (int sign : {1, -1}) {
        for (const auto& r : g.level(2 * sign)) {
            bool found = false;
            for (const auto& a : g.level(sign)) {
                Coords rest = sys.canonical(sys.add(r.v, RootSystem::negate(a.v)));
                const Root* b = sys.find_root(rest);
                if (b) {
                    // rest must itself sit at the right level
                    const auto& lv = g.level(sign);
                    if (std::binary_search(lv.begin(), lv.end(), Root{rest, b->parity})) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                rep.level2_from_level1 = false;
                rep.failures.push_back("level +-2 root not a sum of two level +-1 roots");
                break;
            }
        }
        if (!rep.level2_from_level1)
            break;
    }

    for (const auto& r : g.level(0)) {
        bool found = false;
        for (const auto& a : g.level(1)) {
            Coords beta = sys.canonical(sys.add(a.v, RootSystem::negate(r.v)));
            if (level1.count(beta)) {
                found = true;
                break;
            }
        }
        if (!found) {
            rep.level0_differences = false;
            rep.failures.push_back("level 0 root not a difference of level 1 roots");
            break;
        }
    }

    std::vector<std::vector<int>> exps;
    for (const auto& r : g.level(1))
        exps.push_back(sys.expansion(r.v));
    if (int_rank(exps) != sys.rank()) {
        rep.level1_spans = false;
        rep.failures.push_back("level 1 roots do not span the weight space");
    }

    if (!rep.ok()) {
        g.admissible = false;
        for (const auto& f : rep.failures)
            g.rejections.push_back(f);
    }
    return rep;
}

std::vector<ModuleComponent> decompose_modules(const GradedDecomposition& g, int level)
{
    if (level == 0)
        throw std::invalid_argument("decompose_modules expects a nonzero level");
    const auto& sys = RootSystem::get(g.spec.algebra);
    const auto& roots = g.level(level);

    std::map<Coords, int> comp;
    for (const auto& r : roots)
        comp[r.v] = -1;

    // union-find over the level set
    std::vector<int> parent(roots.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    std::map<Coords, int> idx;
    for (std::size_t i = 0; i < roots.size(); ++i)
        idx[roots[i].v] = static_cast<int>(i);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (const auto& gamma : g.level(0)) {
            Coords t = sys.add(roots[i].v, gamma.v);
            auto it = idx.find(t);
            if (it != idx.end())
                parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(it->second);
        }

    std::map<int, ModuleComponent> by_rep;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        auto& c = by_rep[find(static_cast<int>(i))];
        c.level = level;
        c.roots.push_back(roots[i]);
        if (roots[i].parity == Parity::Even)
            ++c.dim_even;
        else
            ++c.dim_odd;
    }
    std::vector<ModuleComponent> out;
    for (auto& [rep, c] : by_rep) {
        std::sort(c.roots.begin(), c.roots.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const ModuleComponent& a, const ModuleComponent& b) {
        if (a.roots.size() != b.roots.size())
            return a.roots.size() < b.roots.size();
        return a.roots.front().v < b.roots.front().v;
    });
    return out;
}

int total_module_count(const GradedDecomposition& g)
{
    int n = 0;
    for (int level : {-2, -1, 1, 2})
        if (!g.level(level).empty())
            n += static_cast<int>(decompose_modules(g, level).size());
    return n;
}

std::vector<GradedDecomposition> enumerate_gradings(Algebra a)
{
    const auto& sys = RootSystem::get(a);
    const int rank = sys.rank();
    const int lo = sys.is_super() ? -2 : 0;
    const int hi = 2;

    std::vector<GradedDecomposition> out;
    std::vector<int> marks(static_cast<std::size_t>(rank), lo);
    for (;;) {
        bool all_zero = std::all_of(marks.begin(), marks.end(), [](int m) { return m == 0; });
        if (!all_zero) {
            auto g = grade_decomposition({a, marks});
            if (g.admissible) {
                check_generation(g);
                if (g.admissible)
                    out.push_back(std::move(g));
            }
        }
        int i = rank - 1;
        while (i >= 0 && marks[static_cast<std::size_t>(i)] == hi)
            marks[static_cast<std::size_t>(i--)] = lo;
        if (i < 0)
            break;
        ++marks[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<GradedDecomposition> enumerate_mod3_gradings(Algebra a)
{
    const auto& sys = RootSystem::get(a);
    if (!sys.is_super())
        throw std::invalid_argument("mod-3 gradings are enumerated for superalgebras only");
    const int rank = sys.rank();

    // a mark class in {-1,0,1} mod 3 lifts into the Z-sweep window [-2,2] as
    // the class itself and (for nonzero classes) its shift by -+3
    auto lifts_of = [](int m) {
        return m == 0 ? std::vector<int>{0} : std::vector<int>{m, m - 3 * (m > 0 ? 1 : -1)};
    };
    auto has_admissible_lift = [&](const std::vector<int>& marks) {
        std::vector<int> lift(marks.size(), 0);
        std::size_t n = marks.size();
        std::vector<std::size_t> choice(n, 0);
        for (;;) {
            for (std::size_t i = 0; i < n; ++i)
                lift[i] = lifts_of(marks[i])[choice[i]];
            auto g = grade_decomposition({a, lift});
            if (g.admissible) {
                check_generation(g);
                if (g.admissible)
                    return true;
            }
            std::size_t i = 0;
            while (i < n && choice[i] + 1 >= lifts_of(marks[i]).size())
                choice[i++] = 0;
            if (i == n)
                return false;
            ++choice[i];
        }
    };

    std::vector<GradedDecomposition> out;
    std::vector<int> marks(static_cast<std::size_t>(rank), -1);
    for (;;) {
        bool all_zero = std::all_of(marks.begin(), marks.end(), [](int m) { return m == 0; });
        if (!all_zero && !has_admissible_lift(marks)) {
            auto g = grade_decomposition({a, marks, 3});
            if (g.admissible) {
                check_generation(g);
                if (g.admissible)
                    out.push_back(std::move(g));
            }
        }
        int i = rank - 1;
        while (i >= 0 && marks[static_cast<std::size_t>(i)] == 1)
            marks[static_cast<std::size_t>(i--)] = -1;
        if (i < 0)
            break;
        ++marks[static_cast<std::size_t>(i)];
    }
    return out;
}

RelationSkeleton relation_skeleton(const GradedDecomposition& g)
{
    if (!g.admissible)
        throw std::invalid_argument("relation_skeleton expects an admissible grading");
    const auto& sys = RootSystem::get(g.spec.algebra);

    std::vector<Root> cao;   // level +1 then level -1, each sorted
    for (int k : {1, -1})
        for (const auto& r : g.level(k))
            cao.push_back(r);

    auto is_zero = [](const Coords& v) {
        return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    };

    RelationSkeleton sk;
    for (const auto& a : cao)
        for (const auto& b : cao) {
            Coords s = sys.add(a.v, b.v);
            if (is_zero(s))
                continue;
            const Root* target = sys.find_root(s);
            if (!target) {
                sk.vanishing.emplace_back(a, b);
            } else {
                int grade = g.grade_of(s);
                if (grade == 2 || grade == -2)
                    sk.level2.emplace_back(a, b, *target);
            }
        }

    for (const auto& a : cao)
        for (const auto& b : cao) {
            Coords s = sys.add(a.v, b.v);
            const bool zero = is_zero(s);
            if (!zero && (!sys.is_root(s) || g.grade_of(s) != 0))
                continue;
            for (const auto& c : cao) {
                Coords t = sys.add(s, c.v);
                RelationSkeleton::Triple tr{a, b, c, std::nullopt};
                if (const Root* root = sys.find_root(t))
                    tr.target = *root;
                sk.triples.push_back(std::move(tr));
            }
        }
    return sk;
}

} // namespace gqs
