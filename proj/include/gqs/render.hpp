#pragma once

#include "gqs/equivalence.hpp"
#include "gqs/grading.hpp"
#include "gqs/rootdata.hpp"

#include <string>
#include <vector>

namespace gqs {

// One coordinate (stored doubled) as "3", "-1" or "1/2".
std::string coord_str(int doubled);
// Whole root as "(1/2, -1/2, 1, 0)".
std::string root_str(const Coords& v);

std::string render_roots_text(const RootSystem& sys);
std::string render_roots_tsv(const RootSystem& sys);

std::string render_grading_text(const GradedDecomposition& g);
std::string render_modules_text(const GradedDecomposition& g);
std::string render_relations_text(const GradedDecomposition& g);

// Aligned table in the layout of the summary tables; "a+b" dims for
// superalgebras, plain totals for Lie algebras.
std::string render_classification_text(const std::vector<ClassificationEntry>& entries);
std::string render_classification_tsv(const std::vector<ClassificationEntry>& entries);

// Graphviz output; byte-stable for a given input.
std::string render_dot(const RootSystem& sys, bool extended);

} // namespace gqs
