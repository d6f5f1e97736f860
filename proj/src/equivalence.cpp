#include "gqs/equivalence.hpp"

#include "gqs/recognize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gqs {

int cartan_int(const RootSystem& sys, int i, int j)
{
    const auto& s = sys.simple_roots();
    const auto& a = s[static_cast<std::size_t>(i)].v;
    const auto& b = s[static_cast<std::size_t>(j)].v;
    long long num = 2 * RootSystem::dot(a, b);
    long long den = RootSystem::dot(a, a);
    if (num % den != 0)
        throw std::logic_error("non-integral Cartan pairing");
    return static_cast<int>(num / den);
}

std::vector<int> canonicalize_marks(const RootSystem& sys, std::vector<int> marks)
{
    if (sys.is_super())
        throw std::invalid_argument("canonicalize_marks is defined for Lie algebras only");
    const int rank = sys.rank();
    if (marks.size() != static_cast<std::size_t>(rank))
        throw std::invalid_argument("marks length must equal the rank");

    for (int guard = 0; guard < 100000; ++guard) {
        int i = 0;
        while (i < rank && marks[static_cast<std::size_t>(i)] >= 0)
            ++i;
        if (i == rank)
            return marks;
        // simple reflection in root i: m_j -> m_j - <a_j, a_i^v> m_i
        const int mi = marks[static_cast<std::size_t>(i)];
        for (int j = 0; j < rank; ++j)
            marks[static_cast<std::size_t>(j)] -= cartan_int(sys, i, j) * mi;
    }
    throw std::logic_error("dominance walk failed to terminate");
}

std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& sys)
{
    const int rank = sys.rank();
    // pairwise invariant to preserve: Cartan integers for Lie algebras,
    // bond multiplicities (plus node parity on the diagonal) for superalgebras
    std::vector<std::vector<int>> cartan(static_cast<std::size_t>(rank),
                                         std::vector<int>(static_cast<std::size_t>(rank)));
    if (sys.is_super()) {
        DiagramData d = sys.diagram(false);
        for (const auto& n : d.nodes)
            cartan[static_cast<std::size_t>(n.label - 1)][static_cast<std::size_t>(n.label - 1)] =
                n.odd ? -1 : 1;
        for (const auto& e : d.edges) {
            cartan[static_cast<std::size_t>(e.a - 1)][static_cast<std::size_t>(e.b - 1)] = e.bond;
            cartan[static_cast<std::size_t>(e.b - 1)][static_cast<std::size_t>(e.a - 1)] = e.bond;
        }
    } else {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    cartan_int(sys, i, j);
    }

    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; ok && i < rank; ++i)
            for (int j = 0; ok && j < rank; ++j)
                if (cartan[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                          [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]
                    != cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    ok = false;
        if (ok)
            out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<int> canonical_lie_key(const RootSystem& sys, const std::vector<int>& marks)
{
    const auto autos = diagram_automorphisms(sys);
    std::vector<int> best;
    for (int sign : {1, -1}) {
        std::vector<int> m = marks;
        for (int& x : m)
            x *= sign;
        m = canonicalize_marks(sys, std::move(m));
        for (const auto& p : autos) {
            std::vector<int> cand(m.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                cand[static_cast<std::size_t>(p[i])] = m[i];
            if (best.empty() || cand < best)
                best = std::move(cand);
        }
    }
    return best;
}

namespace {

// Search state for the super linear-map search.
struct SuperSearch {
    const RootSystem& sys;
    const GradedDecomposition& g1;
    const GradedDecomposition& g2;
    int sign;                                   // target grade = sign * source grade
    std::vector<std::vector<int>> by_max_support;   // root indices grouped by max simple index
    std::vector<Coords> images;                 // chosen images of the simple roots

    bool extend(int depth);
    bool check_roots(const std::vector<int>& idxs) const;
};

bool SuperSearch::check_roots(const std::vector<int>& idxs) const
{
    for (int ri : idxs) {
        const Root& r = sys.roots()[static_cast<std::size_t>(ri)];
        const auto& exp = sys.expansion(r.v);
        Coords img(static_cast<std::size_t>(sys.ambient_dim()), 0);
        for (std::size_t j = 0; j < images.size(); ++j)
            for (std::size_t c = 0; c < img.size(); ++c)
                img[c] += exp[j] * images[j][c];
        img = sys.canonical(std::move(img));
        const Root* target = sys.find_root(img);
        if (!target || target->parity != r.parity)
            return false;
        if (g2.grade_of(img) != sign * g1.grade_of(r.v))
            return false;
    }
    return true;
}

bool SuperSearch::extend(int depth)
{
    const int rank = sys.rank();
    if (depth == rank) {
        // images of the simple roots must stay independent (all roots land on
        // distinct roots)
        std::set<Coords> seen;
        for (const auto& r : sys.roots()) {
            const auto& exp = sys.expansion(r.v);
            Coords img(static_cast<std::size_t>(sys.ambient_dim()), 0);
            for (std::size_t j = 0; j < images.size(); ++j)
                for (std::size_t c = 0; c < img.size(); ++c)
                    img[c] += exp[j] * images[j][c];
            seen.insert(sys.canonical(std::move(img)));
        }
        return seen.size() == sys.roots().size();
    }
    const Root& alpha = sys.simple_roots()[static_cast<std::size_t>(depth)];
    for (const auto& beta : sys.roots()) {
        if (beta.parity != alpha.parity)
            continue;
        if (g2.grade_of(beta.v) != sign * g1.grade_of(alpha.v))
            continue;
        images.push_back(beta.v);
        if (check_roots(by_max_support[static_cast<std::size_t>(depth)]) && extend(depth + 1))
            return true;
        images.pop_back();
    }
    return false;
}

} // namespace

bool equivalent_super(const GradedDecomposition& g1, const GradedDecomposition& g2)
{
    if (g1.spec.algebra != g2.spec.algebra || g1.spec.modulus != g2.spec.modulus)
        return false;
    const auto& sys = RootSystem::get(g1.spec.algebra);
    if (!sys.is_super())
        throw std::invalid_argument("equivalent_super is defined for superalgebras only");

    std::vector<std::vector<int>> by_max(static_cast<std::size_t>(sys.rank()));
    for (std::size_t i = 0; i < sys.roots().size(); ++i) {
        const auto& exp = sys.expansion(sys.roots()[i].v);
        int mx = 0;
        for (std::size_t j = 0; j < exp.size(); ++j)
            if (exp[j] != 0)
                mx = static_cast<int>(j);
        by_max[static_cast<std::size_t>(mx)].push_back(static_cast<int>(i));
    }

    for (int sign : {1, -1}) {
        // cheap rejection on per-level dimensions and parities
        bool sizes_ok = true;
        for (int k = -2; k <= 2 && sizes_ok; ++k) {
            const auto& a = g1.level(k);
            const auto& b = g2.level(sign * k);
            if (a.size() != b.size()) {
                sizes_ok = false;
                break;
            }
            auto odd_count = [](const std::vector<Root>& v) {
                return std::count_if(v.begin(), v.end(),
                                     [](const Root& r) { return r.parity == Parity::Odd; });
            };
            if (odd_count(a) != odd_count(b))
                sizes_ok = false;
        }
        if (!sizes_ok)
            continue;
        SuperSearch s{sys, g1, g2, sign, by_max, {}};
        if (s.extend(0))
            return true;
    }
    return false;
}

std::vector<ClassificationEntry> classify(Algebra a)
{
    const auto& sys = RootSystem::get(a);
    auto all = enumerate_gradings(a);

    std::vector<GradedDecomposition> reps;
    if (sys.is_super()) {
        // when no integer functional gives a length-3 decomposition, the
        // remaining length-3 rows live on the mod-3 fold of the root lattice
        bool any_length3 = std::any_of(all.begin(), all.end(),
                                       [](const GradedDecomposition& g) { return g.length == 3; });
        if (!any_length3)
            for (auto& g : enumerate_mod3_gradings(a))
                all.push_back(std::move(g));
        for (auto& g : all) {
            bool known = false;
            for (const auto& r : reps)
                if (equivalent_super(r, g)) {
                    known = true;
                    break;
                }
            if (!known)
                reps.push_back(std::move(g));
        }
    } else {
        std::set<std::vector<int>> seen;
        for (auto& g : all)
            if (seen.insert(canonical_lie_key(sys, g.spec.marks)).second)
                reps.push_back(std::move(g));
    }

    std::vector<ClassificationEntry> out;
    for (const auto& g : reps) {
        ClassificationEntry e;
        e.algebra = a;
        e.length = g.length;
        e.consistent = g.consistent;
        e.marks = g.spec.marks;
        e.modulus = g.spec.modulus;
        e.module_count = total_module_count(g);
        e.g0_label = identify_type(sys, g.level(0)).label();

        auto dims = [](const std::vector<Root>& roots) {
            DimPair d;
            for (const auto& r : roots)
                (r.parity == Parity::Even ? d.even : d.odd)++;
            return d;
        };
        e.dim_g0 = dims(g.level(0));
        e.dim_g0.even += sys.rank();   // the Cartan subalgebra sits in G_0
        e.dim_g1 = dims(g.level(1));
        e.dim_g2 = dims(g.level(2));
        out.push_back(std::move(e));
    }

    std::sort(out.begin(), out.end(), [](const ClassificationEntry& x, const ClassificationEntry& y) {
        if (x.dim_g0.total() != y.dim_g0.total())
            return x.dim_g0.total() > y.dim_g0.total();
        if (x.dim_g1.total() != y.dim_g1.total())
            return x.dim_g1.total() > y.dim_g1.total();
        if (x.length != y.length)
            return x.length < y.length;
        return x.marks < y.marks;
    });
    return out;
}

} // namespace gqs
