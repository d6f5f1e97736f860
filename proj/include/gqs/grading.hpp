#pragma once

#include "gqs/rootdata.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gqs {

struct GradingSpec {
    Algebra algebra;
    std::vector<int> marks;   // one per simple root
    int modulus = 0;          // 0 for a Z-grading; 3 for a Z/3-grading (folded levels)

    friend bool operator==(const GradingSpec&, const GradingSpec&) = default;
};

struct GradedDecomposition {
    GradingSpec spec;
    std::map<int, std::vector<Root>> levels;   // grade -> sorted roots (grades -2..2 only)
    int length = 0;                            // 3 or 5 once admissible
    bool consistent = false;                   // odd roots at odd grades, even at even
    bool admissible = false;
    std::vector<std::string> rejections;

    const std::vector<Root>& level(int k) const;
    int grade_of(const Coords& root) const;    // via the marks functional
};

// Evaluates the marks functional on every root. Out-of-range grades and empty
// G_{+-1} are recorded as rejection reasons, not errors.
GradedDecomposition grade_decomposition(const GradingSpec& spec);

struct GenerationReport {
    bool level2_from_level1 = true;   // every level +-2 root is a sum of two level +-1 roots
    bool level0_differences = true;   // every level 0 root is a difference of level 1 roots
    bool level1_spans = true;         // level 1 roots span the full weight space
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Combinatorial generation check; on failure flips g.admissible to false and
// appends the reasons.
GenerationReport check_generation(GradedDecomposition& g);

struct ModuleComponent {
    int level = 0;
    std::vector<Root> roots;   // sorted
    int dim_even = 0;
    int dim_odd = 0;
};

// Connected components of a nonzero level under addition of level-0 roots,
// sorted by (size, lexicographic least root).
std::vector<ModuleComponent> decompose_modules(const GradedDecomposition& g, int level);

int total_module_count(const GradedDecomposition& g);

// All admissible gradings, before any equivalence deduplication, in marks order.
// Lie algebras sweep marks in {0,1,2}^rank, superalgebras in {-2..2}^rank.
std::vector<GradedDecomposition> enumerate_gradings(Algebra a);

// Z/3-graded decompositions (grades reduced to the centered residues -1,0,1),
// for superalgebras whose root lattice admits no integer functional realizing
// the decomposition. Marks sweep {-1,0,1}^rank; a candidate is dropped when
// some integer lift of its marks already yields an admissible Z-grading, so
// only genuinely folded decompositions survive. Same admissibility and
// generation conditions, applied level-wise.
std::vector<GradedDecomposition> enumerate_mod3_gradings(Algebra a);

struct RelationSkeleton {
    // Pairs of level +-1 roots whose sum is neither a root nor zero.
    std::vector<std::pair<Root, Root>> vanishing;
    // Pairs whose sum is a level +-2 root.
    std::vector<std::tuple<Root, Root, Root>> level2;
    struct Triple {
        Root a, b, c;
        std::optional<Root> target;   // nullopt renders as "0"
    };
    // ((a,b),c) with a+b a level-0 root or zero and c at level +-1.
    std::vector<Triple> triples;
};

RelationSkeleton relation_skeleton(const GradedDecomposition& g);

} // namespace gqs
