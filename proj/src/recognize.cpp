#include "gqs/recognize.hpp"

#include "gqs/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gqs {

std::string SubalgebraType::label() const
{
    std::ostringstream os;
    for (int i = 0; i < central_rank; ++i)
        os << (i ? " + " : "") << "C";
    for (std::size_t i = 0; i < components.size(); ++i)
        os << (central_rank + static_cast<int>(i) ? " + " : "") << components[i];
    if (central_rank == 0 && components.empty())
        return "0";
    return os.str();
}

std::vector<Root> subsystem_simple_roots(const RootSystem& sys, const std::vector<Root>& rootset)
{
    std::set<Coords> all;
    for (const auto& r : rootset)
        all.insert(r.v);
    for (const auto& r : rootset)
        if (!all.count(RootSystem::negate(r.v)))
            throw std::invalid_argument("rootset is not closed under negation");

    std::vector<Root> pos;
    for (const auto& r : rootset)
        if (sys.positivity(r.v) > 0)
            pos.push_back(r);
    std::sort(pos.begin(), pos.end());

    std::set<Coords> pos_set;
    for (const auto& r : pos)
        pos_set.insert(r.v);

    std::vector<Root> simple;
    for (const auto& r : pos) {
        bool decomposable = false;
        for (const auto& b : pos) {
            if (b.v == r.v)
                continue;
            Coords rest = sys.add(r.v, RootSystem::negate(b.v));
            if (pos_set.count(rest)) {   // r = b + rest, both positive in the subsystem
                decomposable = true;
                break;
            }
        }
        if (!decomposable)
            simple.push_back(r);
    }
    return simple;
}

namespace {

struct Fingerprint {
    int rank;
    int n_even;
    int n_odd;
    int n_longest;   // roots of maximal squared length; only used when n_odd == 0

    bool operator<(const Fingerprint& o) const
    {
        return std::tie(rank, n_even, n_odd, n_longest)
               < std::tie(o.rank, o.n_even, o.n_odd, o.n_longest);
    }
};

// Hand-assembled catalog covering exactly the types occurring in the
// classification tables (and the even parts of their super entries).
const std::map<Fingerprint, std::string>& catalog()
{
    static const std::map<Fingerprint, std::string> table = {
        // pure even: (rank, #roots, 0, #longest)
        {{1, 2, 0, 2}, "sl(2)"},
        {{2, 6, 0, 6}, "sl(3)"},
        {{2, 8, 0, 4}, "so(5)"},
        {{2, 12, 0, 6}, "G2"},
        {{3, 12, 0, 12}, "sl(4)"},
        {{3, 18, 0, 12}, "so(7)"},
        {{3, 18, 0, 6}, "sp(6)"},
        {{4, 20, 0, 20}, "sl(5)"},
        {{4, 24, 0, 24}, "so(8)"},
        {{5, 30, 0, 30}, "sl(6)"},
        {{5, 40, 0, 40}, "so(10)"},
        {{6, 42, 0, 42}, "sl(7)"},
        {{6, 60, 0, 60}, "so(12)"},
        {{6, 72, 0, 72}, "E6"},
        {{7, 84, 0, 84}, "so(14)"},
        {{7, 126, 0, 126}, "E7"},
        // super: (rank, #even, #odd, 0); labels normalized to the
        // classification tables' spelling (B(1|1)->osp(3|2) etc.)
        {{1, 0, 2, 0}, "sl(1|1)"},
        {{1, 2, 2, 0}, "osp(1|2)"},
        {{2, 2, 4, 0}, "sl(1|2)"},
        {{2, 4, 6, 0}, "osp(3|2)"},
        {{3, 6, 6, 0}, "sl(3|1)"},
        {{3, 8, 8, 0}, "osp(2|4)"},
        {{3, 6, 8, 0}, "D(2,1;-1/3)"},
    };
    return table;
}

} // namespace

std::vector<SubsystemComponent> split_components(const RootSystem& sys,
                                                 const std::vector<Root>& rootset)
{
    std::map<Coords, int> idx;
    for (std::size_t i = 0; i < rootset.size(); ++i)
        idx[rootset[i].v] = static_cast<int>(i);

    std::vector<int> parent(rootset.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

    for (std::size_t i = 0; i < rootset.size(); ++i)
        for (std::size_t j = i + 1; j < rootset.size(); ++j) {
            Coords s = sys.add(rootset[i].v, rootset[j].v);
            Coords d = sys.add(rootset[i].v, RootSystem::negate(rootset[j].v));
            const bool sz = s == Coords(s.size(), 0);
            const bool dz = d == Coords(d.size(), 0);
            if (sz || idx.count(s) || (!dz && idx.count(d)))
                unite(static_cast<int>(i), static_cast<int>(j));
        }

    std::map<int, SubsystemComponent> by_rep;
    for (std::size_t i = 0; i < rootset.size(); ++i) {
        auto& c = by_rep[find(static_cast<int>(i))];
        c.roots.push_back(rootset[i]);
        if (rootset[i].parity == Parity::Even)
            ++c.n_even;
        else
            ++c.n_odd;
    }

    std::vector<SubsystemComponent> out;
    for (auto& [rep, c] : by_rep) {
        std::sort(c.roots.begin(), c.roots.end());
        std::vector<std::vector<int>> exps;
        for (const auto& r : c.roots)
            exps.push_back(sys.expansion(r.v));
        c.rank = int_rank(exps);

        Fingerprint fp{c.rank, c.n_even, c.n_odd, 0};
        if (c.n_odd == 0) {
            long long maxlen = 0;
            for (const auto& r : c.roots)
                maxlen = std::max(maxlen, RootSystem::dot(r.v, r.v));
            for (const auto& r : c.roots)
                if (RootSystem::dot(r.v, r.v) == maxlen)
                    ++fp.n_longest;
        }
        auto it = catalog().find(fp);
        if (it == catalog().end()) {
            std::ostringstream os;
            os << "unrecognized subsystem fingerprint (rank " << fp.rank << ", " << fp.n_even
               << " even, " << fp.n_odd << " odd, " << fp.n_longest << " longest) in "
               << algebra_name(sys.algebra());
            throw std::runtime_error(os.str());
        }
        c.type = it->second;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const SubsystemComponent& a, const SubsystemComponent& b) {
        if (a.type != b.type)
            return a.type < b.type;
        return a.roots < b.roots;
    });
    return out;
}

SubalgebraType identify_type(const RootSystem& sys, const std::vector<Root>& rootset)
{
    std::set<Coords> all;
    for (const auto& r : rootset)
        all.insert(r.v);
    for (const auto& r : rootset)
        if (!all.count(RootSystem::negate(r.v)))
            throw std::invalid_argument("rootset is not closed under negation");

    SubalgebraType t;
    int used_rank = 0;
    for (auto& c : split_components(sys, rootset)) {
        used_rank += c.rank;
        t.components.push_back(c.type);
    }
    std::sort(t.components.begin(), t.components.end());
    t.central_rank = sys.rank() - used_rank;
    if (t.central_rank < 0)
        throw std::runtime_error("component ranks exceed the ambient rank");
    return t;
}

std::vector<std::string> expected_even_part(const std::string& super_label)
{
    if (super_label == "sl(1|1)")
        return {};
    if (super_label == "osp(1|2)")
        return {"sl(2)"};
    if (super_label == "sl(1|2)")
        return {"sl(2)"};
    if (super_label == "osp(3|2)")
        return {"sl(2)", "sl(2)"};
    if (super_label == "sl(3|1)")
        return {"sl(3)"};
    if (super_label == "osp(2|4)")
        return {"so(5)"};
    if (super_label == "D(2,1;-1/3)")
        return {"sl(2)", "sl(2)", "sl(2)"};
    throw std::invalid_argument("not a super component label: " + super_label);
}

} // namespace gqs
