#pragma once

#include "gqs/rational.hpp"
#include "gqs/rootdata.hpp"

#include <array>
#include <string>
#include <vector>

namespace gqs {

struct D21Params {
    Rat alpha;

    bool valid() const { return alpha != Rat(0) && alpha != Rat(-1); }
    std::array<Rat, 3> sigma() const { return {Rat(1) + alpha, Rat(-1), -alpha}; }
};

// Coefficient vector over the 17-element basis.
using Vec = std::vector<Rat>;

struct D21Basis {
    std::string label;
    Parity parity = Parity::Even;
    Coords root;      // doubled epsilon coordinates; empty for the Cartan h_k
    int grade = 0;    // level in the length-3 grading
};

// Explicit D(2,1;alpha) with exact rational structure constants. Basis layout:
// h1 h2 h3 | a1+ a1- a2+ a2- t3+ t3- | b+1+ b-1+ b+1- b-1- o+-+ o+-- o-++ o-+-
// where a/b are the creation/annihilation operators of the length-3 grading
// (a_i^+- at roots +-2eps_i, b_k^+- at roots +-(eps1+eps2)+k*eps3) and t3/o
// fill out the remaining root vectors.
struct StructureTable {
    D21Params params;
    std::array<int, 3> tau{};             // odd-odd bracket sign pattern used
    int t = 1, s = 1;                     // b_{+1} and b_{-1} normalization signs
    std::vector<D21Basis> basis;          // size 17
    std::vector<std::vector<Vec>> table;  // [i][j] -> coefficients of [x_i, x_j]

    int dim() const { return static_cast<int>(basis.size()); }
    int index_of(const std::string& label) const;   // throws std::out_of_range
    Vec unit(const std::string& label) const;
    // Bilinear extension of the basis brackets.
    Vec bracket(const Vec& x, const Vec& y) const;
};

// Three-sl(2) tensor model with sigma-weighted odd-odd bracket; the sign
// pattern and the CAO normalization are solved during the build so that the
// quadratic and triple relations hold exactly. Throws std::invalid_argument
// for alpha in {0,-1}, std::logic_error if no normalization works.
StructureTable build_d21a(const D21Params& params);

// Graded Jacobi identity on all ordered basis triples; returns the
// (expected-empty) list of violating triples.
std::vector<std::string> check_super_jacobi(const StructureTable& t);

struct RelationReport {
    int checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Every instance of the defining quadratic and triple relations of the
// creation/annihilation presentation (out-of-range b subscripts read as zero).
RelationReport verify_relations(const StructureTable& t);

// Brackets of grade-g and grade-h elements must land at grade g+h.
std::vector<std::string> check_grade_compatibility(const StructureTable& t);

} // namespace gqs
