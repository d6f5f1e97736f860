#pragma once

#include "gqs/grading.hpp"
#include "gqs/rootdata.hpp"

#include <string>
#include <vector>

namespace gqs {

// Cartan integer 2(a_i, a_j)/(a_i, a_i) of two simple roots. Lie algebras only.
int cartan_int(const RootSystem& sys, int i, int j);

// Weyl-dominant representative of the marks functional (simple-reflection
// walk). Lie algebras only; throws std::invalid_argument for superalgebras.
std::vector<int> canonicalize_marks(const RootSystem& sys, std::vector<int> marks);

// All permutations of the simple roots preserving the Cartan matrix.
// Always contains the identity.
std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& sys);

// Deduplication key for a Lie-algebra grading: lexicographically least image
// of the dominant marks (of the functional and its negation) under the
// diagram automorphisms.
std::vector<int> canonical_lie_key(const RootSystem& sys, const std::vector<int>& marks);

// True if some linear automorphism of the root system (parity-preserving,
// determined by images of the simple roots) carries one grading functional to
// the other or to its negation. Superalgebras; exhaustive search with pruning.
bool equivalent_super(const GradedDecomposition& g1, const GradedDecomposition& g2);

struct DimPair {
    int even = 0;
    int odd = 0;

    int total() const { return even + odd; }
    friend bool operator==(const DimPair&, const DimPair&) = default;
};

struct ClassificationEntry {
    Algebra algebra;
    std::string g0_label;      // e.g. "C + sl(2) + so(10)"
    int length = 0;            // 3 or 5
    DimPair dim_g0, dim_g1, dim_g2;
    bool consistent = false;
    std::vector<int> marks;    // representative grading functional
    int modulus = 0;           // 0 for Z-gradings, 3 for folded Z/3-gradings
    int module_count = 0;
};

// Full pipeline: enumerate admissible gradings, deduplicate, recognize G_0,
// count modules. Sorted by (dim G_0 desc, dim G_1 desc, length, marks).
std::vector<ClassificationEntry> classify(Algebra a);

} // namespace gqs
