#pragma once

#include "gqs/d21a.hpp"
#include "gqs/equivalence.hpp"
#include "gqs/grading.hpp"

#include <string>
#include <vector>

namespace gqs {

struct GoldenRow {
    Algebra algebra;
    std::string g0;
    int length;
    DimPair dim_g0, dim_g1, dim_g2;
    bool consistent;
    int modules;   // -1 when not pinned
};

// Embedded copies of the two summary tables (13 Lie rows, 14 super rows).
const std::vector<GoldenRow>& golden_lie_rows();
const std::vector<GoldenRow>& golden_super_rows();

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // empty when passing
};

bool all_passed(const std::vector<CheckResult>& results);

// The length-3 grading of D(2,1;alpha), oriented so that G_{+1} carries the
// roots {2e1, 2e2, e1+e2+e3, e1+e2-e3}. Throws if the enumeration does not
// produce it.
GradedDecomposition d21a_length3_grading();

// Zero/nonzero pattern of the root-level relation skeleton against the exact
// brackets of the structure table (empty result = agreement).
std::vector<std::string> cross_module_oracle(const StructureTable& t,
                                             const GradedDecomposition& g);

// Full verification battery: tables, root counts, explicit listings, module
// counts, consistency flags, structure suite, grading axioms, cross-module
// oracle.
std::vector<CheckResult> verify_all();

} // namespace gqs
