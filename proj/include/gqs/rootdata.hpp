#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gqs {

enum class Algebra { G2, F4, E6, E7, E8, D21A, G3, F4S };

constexpr Algebra kAllAlgebras[] = {Algebra::G2, Algebra::F4, Algebra::E6, Algebra::E7,
                                    Algebra::E8, Algebra::D21A, Algebra::G3, Algebra::F4S};

std::optional<Algebra> algebra_from_name(const std::string& name);
std::string algebra_name(Algebra a);    // identifier: "G2".."E8", "D21A", "G3", "F4S"
std::string display_name(Algebra a);    // "D(2,1;a)", "G(3)", "F(4)" for the superalgebras
bool is_superalgebra(Algebra a);

// All coordinates are stored doubled (2x the rational value) so that the
// half-integer roots of F4, F(4) and the E series are exact integer data.
using Coords = std::vector<int>;

enum class Parity { Even, Odd };

struct Root {
    Coords v;
    Parity parity = Parity::Even;

    friend bool operator==(const Root&, const Root&) = default;
};

inline bool operator<(const Root& a, const Root& b) { return a.v < b.v; }

struct DiagramNode {
    int label = 0;        // 1..rank, 0 for the extension node
    bool odd = false;     // isotropic/odd node marker (superalgebra diagrams)
};

struct DiagramEdge {
    int a = 0;
    int b = 0;
    int bond = 1;         // bond multiplicity 1..3
};

struct DiagramData {
    std::vector<DiagramNode> nodes;
    std::vector<DiagramEdge> edges;
};

class RootSystem {
public:
    // Cached immutable instance per algebra.
    static const RootSystem& get(Algebra a);

    Algebra algebra() const { return algebra_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(roots_.size()) + rank_; }
    bool is_super() const { return is_superalgebra(algebra_); }

    const std::vector<Root>& roots() const { return roots_; }           // sorted
    const std::vector<Root>& simple_roots() const { return simple_; }
    int even_count() const { return even_count_; }
    int odd_count() const { return static_cast<int>(roots_.size()) - even_count_; }

    // Canonical representative modulo the redundant-coordinate relation
    // (G2 and the epsilon part of G(3)); identity elsewhere.
    Coords canonical(Coords v) const;
    Coords add(const Coords& a, const Coords& b) const;
    static Coords negate(const Coords& v);

    bool is_root(const Coords& v) const;               // expects canonical input
    const Root* find_root(const Coords& v) const;
    Parity parity_of(const Coords& v) const;           // throws if not a root

    // Integer coefficients over the simple roots.
    const std::vector<int>& expansion(const Coords& root) const;

    // Generic positivity functional: linear, nonzero on every root,
    // invariant under the redundant-coordinate relation.
    long long positivity(const Coords& v) const;

    // Euclidean inner product on doubled coordinates. Defined for the five
    // Lie algebras; also used for the length fingerprints of even
    // sub-root-systems inside the superalgebra ambients.
    static long long dot(const Coords& a, const Coords& b);

    // Lie algebras only: the unique root with no addable simple root.
    const Root& highest_root() const;

    DiagramData diagram(bool extended) const;

private:
    explicit RootSystem(Algebra a);

    void build_g2();
    void build_f4();
    void build_e_series();  // E6/E7/E8
    void build_d21a();
    void build_g3();
    void build_f4s();
    void finalize();        // sort, compute expansions, highest root

    Algebra algebra_;
    int rank_ = 0;
    int ambient_dim_ = 0;
    int even_count_ = 0;
    std::vector<Root> roots_;
    std::vector<Root> simple_;
    std::map<Coords, int> index_;                 // canonical coords -> roots_ index
    std::map<Coords, std::vector<int>> expansions_;
    std::vector<long long> pos_weights_;
    Coords relation_;                             // doubled null direction, empty if none
    std::optional<Root> highest_;
};

// Fresh (uncached) construction; RootSystem::get is the normal entry point.
// Throws std::invalid_argument on an unknown identifier string.
const RootSystem& build_root_system(const std::string& name);

} // namespace gqs
