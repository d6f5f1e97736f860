#include "gqs/rootdata.hpp"

#include "gqs/linalg.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace gqs {

std::optional<Algebra> algebra_from_name(const std::string& name)
{
    for (Algebra a : kAllAlgebras)
        if (algebra_name(a) == name)
            return a;
    return std::nullopt;
}

std::string algebra_name(Algebra a)
{
    switch (a) {
    case Algebra::G2: return "G2";
    case Algebra::F4: return "F4";
    case Algebra::E6: return "E6";
    case Algebra::E7: return "E7";
    case Algebra::E8: return "E8";
    case Algebra::D21A: return "D21A";
    case Algebra::G3: return "G3";
    case Algebra::F4S: return "F4S";
    }
    throw std::logic_error("bad algebra enum");
}

std::string display_name(Algebra a)
{
    switch (a) {
    case Algebra::D21A: return "D(2,1;a)";
    case Algebra::G3: return "G(3)";
    case Algebra::F4S: return "F(4)";
    default: return algebra_name(a);
    }
}

bool is_superalgebra(Algebra a)
{
    return a == Algebra::D21A || a == Algebra::G3 || a == Algebra::F4S;
}

namespace {

Coords scaled(std::initializer_list<int> undoubled)
{
    Coords v;
    for (int x : undoubled)
        v.push_back(2 * x);
    return v;
}

} // namespace

RootSystem::RootSystem(Algebra a) : algebra_(a)
{
    switch (a) {
    case Algebra::G2: build_g2(); break;
    case Algebra::F4: build_f4(); break;
    case Algebra::E6:
    case Algebra::E7:
    case Algebra::E8: build_e_series(); break;
    case Algebra::D21A: build_d21a(); break;
    case Algebra::G3: build_g3(); break;
    case Algebra::F4S: build_f4s(); break;
    }
    finalize();
}

const RootSystem& RootSystem::get(Algebra a)
{
    static std::mutex mu;
    static std::map<Algebra, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(a);
    if (it == cache.end())
        it = cache.emplace(a, std::unique_ptr<RootSystem>(new RootSystem(a))).first;
    return *it->second;
}

const RootSystem& build_root_system(const std::string& name)
{
    auto a = algebra_from_name(name);
    if (!a)
        throw std::invalid_argument("unknown algebra identifier: " + name);
    return RootSystem::get(*a);
}

void RootSystem::build_g2()
{
    rank_ = 2;
    ambient_dim_ = 3;
    relation_ = {2, 2, 2};
    pos_weights_ = {3, 1, -4};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j)
                continue;
            Coords v(3, 0);
            v[i] = 2;
            v[j] = -2;
            roots_.push_back({v, Parity::Even});
        }
    for (int k = 0; k < 3; ++k) {
        Coords v(3, 2);
        v[k] = -4;
        roots_.push_back({v, Parity::Even});
        roots_.push_back({negate(v), Parity::Even});
    }
    simple_ = {{scaled({-2, 1, 1}), Parity::Even}, {scaled({1, -1, 0}), Parity::Even}};
}

void RootSystem::build_f4()
{
    rank_ = 4;
    ambient_dim_ = 4;
    pos_weights_ = {1000, 100, 10, 1};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si : {2, -2})
                for (int sj : {2, -2}) {
                    Coords v(4, 0);
                    v[i] = si;
                    v[j] = sj;
                    roots_.push_back({v, Parity::Even});
                }
    for (int j = 0; j < 4; ++j)
        for (int s : {2, -2}) {
            Coords v(4, 0);
            v[j] = s;
            roots_.push_back({v, Parity::Even});
        }
    for (int mask = 0; mask < 16; ++mask) {
        Coords v(4);
        for (int i = 0; i < 4; ++i)
            v[i] = (mask >> i) & 1 ? -1 : 1;
        roots_.push_back({v, Parity::Even});
    }
    simple_ = {{scaled({0, 1, -1, 0}), Parity::Even},
               {scaled({0, 0, 1, -1}), Parity::Even},
               {scaled({0, 0, 0, 1}), Parity::Even},
               {{1, -1, -1, -1}, Parity::Even}};
}

void RootSystem::build_e_series()
{
    ambient_dim_ = 8;
    pos_weights_.assign(8, 0);
    long long w = 10000000;
    for (int i = 0; i < 8; ++i, w /= 10)
        pos_weights_[i] = w;

    auto half_root = [](int mask) {
        Coords v(8);
        for (int i = 0; i < 8; ++i)
            v[i] = (mask >> i) & 1 ? -1 : 1;
        return v;
    };

    if (algebra_ == Algebra::E6) {
        rank_ = 6;
        // +-(e_i - e_j) inside {1,2} and inside {3..8}
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                if (i == j)
                    continue;
                const bool both_low = i < 2 && j < 2;
                const bool both_high = i >= 2 && j >= 2;
                if (!both_low && !both_high)
                    continue;
                Coords v(8, 0);
                v[i] = 2;
                v[j] = -2;
                roots_.push_back({v, Parity::Even});
            }
        for (int mask = 0; mask < 256; ++mask) {
            int low = (mask & 1) + ((mask >> 1) & 1);
            int high = 0;
            for (int i = 2; i < 8; ++i)
                high += (mask >> i) & 1;
            if (low == 1 && high == 3)
                roots_.push_back({half_root(mask), Parity::Even});
        }
    } else if (algebra_ == Algebra::E7) {
        rank_ = 7;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                if (i == j)
                    continue;
                Coords v(8, 0);
                v[i] = 2;
                v[j] = -2;
                roots_.push_back({v, Parity::Even});
            }
        for (int mask = 0; mask < 256; ++mask)
            if (__builtin_popcount(mask) == 4)
                roots_.push_back({half_root(mask), Parity::Even});
    } else {
        rank_ = 8;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                for (int si : {2, -2})
                    for (int sj : {2, -2}) {
                        Coords v(8, 0);
                        v[i] = si;
                        v[j] = sj;
                        roots_.push_back({v, Parity::Even});
                    }
        // half-sum roots: even number of +1 signs
        for (int mask = 0; mask < 256; ++mask)
            if ((8 - __builtin_popcount(mask)) % 2 == 0)
                roots_.push_back({half_root(mask), Parity::Even});
    }

    // Simple roots: E6 per its defining list; E7 prepends e2-e3; E8 prepends -e1-e2.
    std::vector<Root> e6_simple;
    for (int i = 0; i < 5; ++i) {
        Coords v(8, 0);
        v[i + 2] = 2;
        v[i + 3] = -2;
        e6_simple.push_back({v, Parity::Even});
    }
    e6_simple.push_back({{1, -1, -1, -1, -1, 1, 1, 1}, Parity::Even});

    if (algebra_ == Algebra::E6) {
        simple_ = e6_simple;
    } else {
        Coords extra7(8, 0);
        extra7[1] = 2;
        extra7[2] = -2;
        std::vector<Root> e7_simple = {{extra7, Parity::Even}};
        e7_simple.insert(e7_simple.end(), e6_simple.begin(), e6_simple.end());
        if (algebra_ == Algebra::E7) {
            simple_ = e7_simple;
        } else {
            Coords extra8(8, 0);
            extra8[0] = -2;
            extra8[1] = -2;
            simple_ = {{extra8, Parity::Even}};
            simple_.insert(simple_.end(), e7_simple.begin(), e7_simple.end());
        }
    }
}

void RootSystem::build_d21a()
{
    rank_ = 3;
    ambient_dim_ = 3;
    pos_weights_ = {100, 10, 1};
    for (int i = 0; i < 3; ++i)
        for (int s : {4, -4}) {
            Coords v(3, 0);
            v[i] = s;
            roots_.push_back({v, Parity::Even});
        }
    for (int mask = 0; mask < 8; ++mask) {
        Coords v(3);
        for (int i = 0; i < 3; ++i)
            v[i] = (mask >> i) & 1 ? -2 : 2;
        roots_.push_back({v, Parity::Odd});
    }
    simple_ = {{scaled({1, -1, -1}), Parity::Odd},
               {scaled({0, 2, 0}), Parity::Even},
               {scaled({0, 0, 2}), Parity::Even}};
}

void RootSystem::build_g3()
{
    rank_ = 3;
    ambient_dim_ = 4;   // (e1, e2, e3, delta), e1+e2+e3 = 0
    relation_ = {2, 2, 2, 0};
    pos_weights_ = {3, 1, -4, 9};
    // even: e_j - e_k, +-e_j (the G2 part), +-2 delta
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            if (j == k)
                continue;
            Coords v(4, 0);
            v[j] = 2;
            v[k] = -2;
            roots_.push_back({v, Parity::Even});
        }
    for (int j = 0; j < 3; ++j)
        for (int s : {2, -2}) {
            Coords v(4, 0);
            v[j] = s;
            roots_.push_back({v, Parity::Even});
        }
    roots_.push_back({{0, 0, 0, 4}, Parity::Even});
    roots_.push_back({{0, 0, 0, -4}, Parity::Even});
    // odd: +-(e_j + delta), +-(e_j - delta), +-delta
    for (int j = 0; j < 3; ++j)
        for (int sd : {2, -2})
            for (int s : {1, -1}) {
                Coords v(4, 0);
                v[j] = 2 * s;
                v[3] = sd * s;
                roots_.push_back({v, Parity::Odd});
            }
    roots_.push_back({{0, 0, 0, 2}, Parity::Odd});
    roots_.push_back({{0, 0, 0, -2}, Parity::Odd});
    simple_ = {{{2, 0, 0, 2}, Parity::Odd},      // delta + e1
               {{0, 2, 0, 0}, Parity::Even},     // e2
               {{0, -2, 2, 0}, Parity::Even}};   // e3 - e2
}

void RootSystem::build_f4s()
{
    rank_ = 4;
    ambient_dim_ = 4;   // (delta, e1, e2, e3)
    pos_weights_ = {1000, 100, 10, 1};
    for (int s : {2, -2})
        roots_.push_back({{s, 0, 0, 0}, Parity::Even});
    for (int i = 1; i < 4; ++i)
        for (int s : {2, -2}) {
            Coords v(4, 0);
            v[i] = s;
            roots_.push_back({v, Parity::Even});
        }
    for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si : {2, -2})
                for (int sj : {2, -2}) {
                    Coords v(4, 0);
                    v[i] = si;
                    v[j] = sj;
                    roots_.push_back({v, Parity::Even});
                }
    for (int mask = 0; mask < 16; ++mask) {
        Coords v(4);
        for (int i = 0; i < 4; ++i)
            v[i] = (mask >> i) & 1 ? -1 : 1;
        roots_.push_back({v, Parity::Odd});
    }
    simple_ = {{{1, -1, -1, -1}, Parity::Odd},    // (delta - e1 - e2 - e3)/2
               {{0, 0, 0, 2}, Parity::Even},      // e3
               {{0, 0, 2, -2}, Parity::Even},     // e2 - e3
               {{0, 2, -2, 0}, Parity::Even}};    // e1 - e2
}

Coords RootSystem::canonical(Coords v) const
{
    if (relation_.empty())
        return v;
    long long s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (relation_[i] != 0)
            s += v[i];
    // Centered residue of the doubled epsilon-sum, in {-2, 0, 2}.
    long long r = ((s + 2) % 6 + 6) % 6 - 2;
    long long k = (s - r) / 6;
    if (k != 0)
        for (std::size_t i = 0; i < v.size(); ++i)
            if (relation_[i] != 0)
                v[i] -= static_cast<int>(2 * k);
    return v;
}

Coords RootSystem::add(const Coords& a, const Coords& b) const
{
    Coords v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        v[i] = a[i] + b[i];
    return canonical(std::move(v));
}

Coords RootSystem::negate(const Coords& v)
{
    Coords r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = -v[i];
    return r;
}

bool RootSystem::is_root(const Coords& v) const
{
    return index_.find(v) != index_.end();
}

const Root* RootSystem::find_root(const Coords& v) const
{
    auto it = index_.find(v);
    return it == index_.end() ? nullptr : &roots_[static_cast<std::size_t>(it->second)];
}

Parity RootSystem::parity_of(const Coords& v) const
{
    const Root* r = find_root(v);
    if (!r)
        throw std::invalid_argument("not a root of " + algebra_name(algebra_));
    return r->parity;
}

const std::vector<int>& RootSystem::expansion(const Coords& root) const
{
    auto it = expansions_.find(root);
    if (it == expansions_.end())
        throw std::invalid_argument("not a root of " + algebra_name(algebra_));
    return it->second;
}

long long RootSystem::positivity(const Coords& v) const
{
    long long s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += pos_weights_[i] * v[i];
    return s;
}

long long RootSystem::dot(const Coords& a, const Coords& b)
{
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long long>(a[i]) * b[i];
    return s;
}

const Root& RootSystem::highest_root() const
{
    if (!highest_)
        throw std::logic_error("highest_root is defined for the Lie algebras only");
    return *highest_;
}

void RootSystem::finalize()
{
    for (auto& r : roots_)
        r.v = canonical(std::move(r.v));
    std::sort(roots_.begin(), roots_.end());
    roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
    even_count_ = 0;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        index_[roots_[i].v] = static_cast<int>(i);
        if (roots_[i].parity == Parity::Even)
            ++even_count_;
    }

    // Expansion of every root over the simple roots: exact solve of
    //   sum_i c_i alpha_i (+ t * relation) = root
    // requiring all-integer c.
    const std::size_t cols = simple_.size() + (relation_.empty() ? 0 : 1);
    for (const auto& root : roots_) {
        RatMatrix a(static_cast<std::size_t>(ambient_dim_), RatVector(cols, Rat(0)));
        RatVector b(static_cast<std::size_t>(ambient_dim_));
        for (int i = 0; i < ambient_dim_; ++i) {
            for (std::size_t j = 0; j < simple_.size(); ++j)
                a[static_cast<std::size_t>(i)][j] = Rat(simple_[j].v[static_cast<std::size_t>(i)]);
            if (!relation_.empty())
                a[static_cast<std::size_t>(i)][simple_.size()] = Rat(relation_[static_cast<std::size_t>(i)]);
            b[static_cast<std::size_t>(i)] = Rat(root.v[static_cast<std::size_t>(i)]);
        }
        auto sol = solve_linear(std::move(a), std::move(b));
        if (!sol)
            throw std::logic_error("root does not expand over the simple roots: " + algebra_name(algebra_));
        std::vector<int> coeffs;
        for (std::size_t j = 0; j < simple_.size(); ++j) {
            if ((*sol)[j].denominator() != 1)
                throw std::logic_error("non-integral simple-root expansion in " + algebra_name(algebra_));
            coeffs.push_back(static_cast<int>((*sol)[j].numerator()));
        }
        expansions_[root.v] = std::move(coeffs);
    }

    if (!is_super()) {
        std::vector<Root> candidates;
        for (const auto& root : roots_) {
            const auto& exp = expansions_[root.v];
            if (std::any_of(exp.begin(), exp.end(), [](int c) { return c < 0; }))
                continue;   // only positive roots can be highest
            bool addable = false;
            for (const auto& s : simple_)
                if (is_root(add(root.v, s.v))) {
                    addable = true;
                    break;
                }
            if (!addable)
                candidates.push_back(root);
        }
        if (candidates.size() != 1)
            throw std::logic_error("highest root is not unique in " + algebra_name(algebra_));
        highest_ = candidates[0];
    }
}

namespace {

// Cartan integer 2(a,b)/(b,b); exact by construction.
int cartan_int(const Coords& a, const Coords& b)
{
    long long num = 2 * RootSystem::dot(a, b);
    long long den = RootSystem::dot(b, b);
    assert(num % den == 0);
    return static_cast<int>(num / den);
}

} // namespace

DiagramData RootSystem::diagram(bool extended) const
{
    DiagramData d;
    if (!is_super()) {
        std::vector<Coords> nodes;
        if (extended) {
            d.nodes.push_back({0, false});
            nodes.push_back(negate(highest_root().v));
        }
        for (std::size_t i = 0; i < simple_.size(); ++i) {
            d.nodes.push_back({static_cast<int>(i) + 1, false});
            nodes.push_back(simple_[i].v);
        }
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                int bond = cartan_int(nodes[i], nodes[j]) * cartan_int(nodes[j], nodes[i]);
                if (bond != 0)
                    d.edges.push_back({d.nodes[i].label, d.nodes[j].label, bond});
            }
        return d;
    }

    // Superalgebra diagrams come from a stored catalog (the distinguished
    // diagrams with their bond multiplicities); node 1 carries the odd
    // simple root in all three cases, and the extension node attaches to it.
    if (extended)
        d.nodes.push_back({0, false});
    for (int i = 1; i <= rank_; ++i)
        d.nodes.push_back({i, i == 1});
    switch (algebra_) {
    case Algebra::D21A:
        d.edges = {{1, 2, 1}, {1, 3, 1}};
        break;
    case Algebra::G3:
        d.edges = {{1, 2, 1}, {2, 3, 3}};
        break;
    case Algebra::F4S:
        d.edges = {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}};
        break;
    default:
        break;
    }
    if (extended)
        d.edges.insert(d.edges.begin(), {0, 1, 1});
    return d;
}

} // namespace gqs
