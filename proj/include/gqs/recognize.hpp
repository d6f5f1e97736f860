#pragma once

#include "gqs/rootdata.hpp"

#include <string>
#include <vector>

namespace gqs {

struct SubalgebraType {
    std::vector<std::string> components;   // sorted labels, e.g. {"sl(2)", "so(10)"}
    int central_rank = 0;                  // number of central C factors

    // ASCII rendering, central factors first: "C + C + so(8)".
    std::string label() const;

    friend bool operator==(const SubalgebraType&, const SubalgebraType&) = default;
};

// Indecomposable positive roots of a negation-closed, addition-closed subset,
// positive w.r.t. the system's generic positivity functional.
// Throws std::invalid_argument if the set is not negation-closed.
std::vector<Root> subsystem_simple_roots(const RootSystem& sys, const std::vector<Root>& rootset);

// Identifies the isomorphism type of the subalgebra spanned by the Cartan and
// the given roots. Unknown fingerprints throw std::runtime_error.
SubalgebraType identify_type(const RootSystem& sys, const std::vector<Root>& rootset);

struct SubsystemComponent {
    std::vector<Root> roots;
    int rank = 0;
    int n_even = 0;
    int n_odd = 0;
    std::string type;
};

// Connected components (under root addition) with their recognized types.
std::vector<SubsystemComponent> split_components(const RootSystem& sys,
                                                 const std::vector<Root>& rootset);

// Expected even-part component labels of a recognized super component,
// for consistency checking (empty list for sl(1|1)).
std::vector<std::string> expected_even_part(const std::string& super_label);

} // namespace gqs
