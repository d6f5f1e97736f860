#include "gqs/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace gqs {

std::string coord_str(int doubled)
{
    if (doubled % 2 == 0)
        return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

std::string root_str(const Coords& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << coord_str(v[i]);
    os << ")";
    return os.str();
}

namespace {

std::string parity_str(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

std::string marks_str(const std::vector<int>& marks)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < marks.size(); ++i)
        os << (i ? "," : "") << marks[i];
    return os.str();
}

std::string spec_str(const GradingSpec& spec)
{
    std::string s = "marks (" + marks_str(spec.marks) + ")";
    if (spec.modulus)
        s += " mod " + std::to_string(spec.modulus);
    return s;
}

std::string dims_str(Algebra a, const DimPair& d)
{
    if (is_superalgebra(a))
        return std::to_string(d.even) + "+" + std::to_string(d.odd);
    return std::to_string(d.total());
}

std::string aligned(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c)
                width.resize(c + 1, 0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
            os << (c + 1 == row.size() ? "" : "  ");
        }
        os << "\n";
    }
    return os.str();
}

} // namespace

std::string render_roots_text(const RootSystem& sys)
{
    std::ostringstream os;
    os << display_name(sys.algebra()) << ": rank " << sys.rank() << ", " << sys.roots().size()
       << " roots (" << sys.even_count() << " even, " << sys.odd_count() << " odd), dim "
       << sys.dim() << "\n";
    os << "simple roots:\n";
    for (const auto& r : sys.simple_roots())
        os << "  " << root_str(r.v) << "  " << parity_str(r.parity) << "\n";
    os << "roots:\n";
    for (const auto& r : sys.roots())
        os << "  " << root_str(r.v) << "  " << parity_str(r.parity) << "\n";
    return os.str();
}

std::string render_roots_tsv(const RootSystem& sys)
{
    std::ostringstream os;
    os << "system\tcoords\tparity\n";
    for (const auto& r : sys.roots())
        os << algebra_name(sys.algebra()) << "\t" << root_str(r.v) << "\t" << parity_str(r.parity)
           << "\n";
    return os.str();
}

std::string render_grading_text(const GradedDecomposition& g)
{
    std::ostringstream os;
    os << display_name(g.spec.algebra) << " " << spec_str(g.spec) << ": ";
    if (!g.admissible) {
        os << "not admissible";
        for (const auto& r : g.rejections)
            os << "; " << r;
        os << "\n";
        return os.str();
    }
    os << "length " << g.length << ", " << (g.consistent ? "consistent" : "not consistent")
       << "\n";
    for (int k = 2; k >= -2; --k) {
        const auto& roots = g.level(k);
        if (roots.empty() && (k == 2 || k == -2))
            continue;
        int even = 0, odd = 0;
        for (const auto& r : roots)
            (r.parity == Parity::Even ? even : odd)++;
        if (k == 0)
            even += RootSystem::get(g.spec.algebra).rank();
        os << "  G_{" << (k > 0 ? "+" : "") << k << "}: dim " << even << "+" << odd << " {";
        for (std::size_t i = 0; i < roots.size(); ++i)
            os << (i ? ", " : "") << root_str(roots[i].v);
        os << "}\n";
    }
    return os.str();
}

std::string render_modules_text(const GradedDecomposition& g)
{
    std::ostringstream os;
    os << display_name(g.spec.algebra) << " " << spec_str(g.spec) << ": "
       << total_module_count(g) << " modules at nonzero levels\n";
    for (int level : {-2, -1, 1, 2}) {
        if (g.level(level).empty())
            continue;
        for (const auto& m : decompose_modules(g, level)) {
            os << "  level " << (level > 0 ? "+" : "") << level << ": dim " << m.dim_even << "+"
               << m.dim_odd << " {";
            for (std::size_t i = 0; i < m.roots.size(); ++i)
                os << (i ? ", " : "") << root_str(m.roots[i].v);
            os << "}\n";
        }
    }
    return os.str();
}

std::string render_relations_text(const GradedDecomposition& g)
{
    RelationSkeleton sk = relation_skeleton(g);
    std::ostringstream os;
    os << display_name(g.spec.algebra) << " " << spec_str(g.spec) << ": relation skeleton\n";
    os << "vanishing quadratic brackets:\n";
    for (const auto& [a, b] : sk.vanishing)
        os << "  [x" << root_str(a.v) << ", x" << root_str(b.v) << "] = 0\n";
    os << "level +-2 quadratic brackets:\n";
    for (const auto& [a, b, t] : sk.level2)
        os << "  [x" << root_str(a.v) << ", x" << root_str(b.v) << "] = x" << root_str(t.v)
           << "\n";
    os << "triple brackets through level 0:\n";
    for (const auto& tr : sk.triples) {
        os << "  [[x" << root_str(tr.a.v) << ", x" << root_str(tr.b.v) << "], x"
           << root_str(tr.c.v) << "] = ";
        if (tr.target)
            os << "x" << root_str(tr.target->v) << "\n";
        else
            os << "0\n";
    }
    return os.str();
}

std::string render_classification_text(const std::vector<ClassificationEntry>& entries)
{
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"system", "G0", "l", "dim G0", "dim G1", "dim G2", "consistent", "modules",
                    "marks"});
    for (const auto& e : entries)
        rows.push_back({display_name(e.algebra), e.g0_label, std::to_string(e.length),
                        dims_str(e.algebra, e.dim_g0), dims_str(e.algebra, e.dim_g1),
                        dims_str(e.algebra, e.dim_g2), e.consistent ? "yes" : "no",
                        std::to_string(e.module_count),
                        "(" + marks_str(e.marks) + ")"
                            + (e.modulus ? " mod " + std::to_string(e.modulus) : "")});
    return aligned(rows);
}

std::string render_classification_tsv(const std::vector<ClassificationEntry>& entries)
{
    std::ostringstream os;
    os << "system\tg0\tlength\tdim_g0_even\tdim_g0_odd\tdim_g1_even\tdim_g1_odd\tdim_g2_even\t"
          "dim_g2_odd\tconsistent\tmodules\tmarks\tmodulus\n";
    for (const auto& e : entries)
        os << algebra_name(e.algebra) << "\t" << e.g0_label << "\t" << e.length << "\t"
           << e.dim_g0.even << "\t" << e.dim_g0.odd << "\t" << e.dim_g1.even << "\t"
           << e.dim_g1.odd << "\t" << e.dim_g2.even << "\t" << e.dim_g2.odd << "\t"
           << (e.consistent ? "yes" : "no") << "\t" << e.module_count << "\t"
           << marks_str(e.marks) << "\t" << e.modulus << "\n";
    return os.str();
}

std::string render_dot(const RootSystem& sys, bool extended)
{
    DiagramData d = sys.diagram(extended);
    std::ostringstream os;
    os << "graph \"" << algebra_name(sys.algebra()) << (extended ? "_extended" : "") << "\" {\n";
    os << "  node [shape=circle];\n";
    for (const auto& n : d.nodes) {
        os << "  n" << n.label << " [label=\"" << n.label << "\"";
        if (n.odd)
            os << ", style=dashed";   // odd/isotropic node
        os << "];\n";
    }
    for (const auto& e : d.edges)
        os << "  n" << e.a << " -- n" << e.b << " [label=\"" << e.bond << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace gqs
