#include "gqs/d21a.hpp"
#include "gqs/equivalence.hpp"
#include "gqs/golden.hpp"
#include "gqs/grading.hpp"
#include "gqs/json_io.hpp"
#include "gqs/render.hpp"
#include "gqs/rootdata.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<gqs::Algebra> resolve_systems(const std::string& name)
{
    if (name == "all")
        return {std::begin(gqs::kAllAlgebras), std::end(gqs::kAllAlgebras)};
    auto a = gqs::algebra_from_name(name);
    if (!a)
        throw UsageError("unknown system: " + name);
    return {*a};
}

std::vector<int> parse_marks(const std::string& text, int rank)
{
    std::vector<int> marks;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            marks.push_back(std::stoi(part, &used));
            if (used != part.size())
                throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw UsageError("malformed marks entry: " + part);
        }
    }
    if (static_cast<int>(marks.size()) != rank)
        throw UsageError("marks must list exactly " + std::to_string(rank) + " integers");
    return marks;
}

void write_out(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

std::string d21a_text(const gqs::StructureTable& t)
{
    std::ostringstream os;
    os << "D(2,1;a) at alpha = " << gqs::rat_str(t.params.alpha) << ", dim " << t.dim() << "\n";
    os << "basis (label, parity, grade):\n";
    for (const auto& b : t.basis)
        os << "  " << b.label << "  " << (b.parity == gqs::Parity::Odd ? "odd" : "even") << "  "
           << b.grade << "\n";
    os << "nonzero brackets:\n";
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) {
            const gqs::Vec& v = t.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            bool any = false;
            std::ostringstream rhs;
            for (int k = 0; k < t.dim(); ++k) {
                const gqs::Rat& c = v[static_cast<std::size_t>(k)];
                if (c == gqs::Rat(0))
                    continue;
                if (any)
                    rhs << " + ";
                rhs << gqs::rat_str(c) << "*" << t.basis[static_cast<std::size_t>(k)].label;
                any = true;
            }
            if (any)
                os << "  [" << t.basis[static_cast<std::size_t>(i)].label << ", "
                   << t.basis[static_cast<std::size_t>(j)].label << "] = " << rhs.str() << "\n";
        }
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact toolkit for Z-gradings of the exceptional Lie (super)algebras"};
    app.require_subcommand(1);

    std::string system = "all";
    std::string format = "text";
    std::string marks_text;
    std::string alpha_text = "1";
    std::string output;
    bool extended = false;

    auto add_common = [&](CLI::App* cmd, bool with_system) {
        if (with_system)
            cmd->add_option("system", system, "algebra identifier or 'all'");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "tsv", "text", "dot"}));
        cmd->add_option("--output", output, "write to a file instead of stdout");
    };

    auto* roots = app.add_subcommand("roots", "emit root system data");
    add_common(roots, true);
    auto* classify_cmd = app.add_subcommand("classify", "classification table rows");
    add_common(classify_cmd, true);
    auto* grading = app.add_subcommand("grading", "grade a system by explicit marks");
    add_common(grading, true);
    grading->add_option("--marks", marks_text, "comma-separated marks")->required();
    auto* modules = app.add_subcommand("modules", "module decomposition for explicit marks");
    add_common(modules, true);
    modules->add_option("--marks", marks_text, "comma-separated marks")->required();
    auto* relations = app.add_subcommand("relations", "root-level relation skeleton");
    add_common(relations, true);
    relations->add_option("--marks", marks_text, "comma-separated marks")->required();
    auto* d21a = app.add_subcommand("d21a", "explicit D(2,1;alpha) structure table");
    add_common(d21a, false);
    d21a->add_option("--alpha", alpha_text, "rational alpha, e.g. -1/3");
    auto* diagram = app.add_subcommand("diagram", "Dynkin diagram as DOT");
    add_common(diagram, true);
    diagram->add_flag("--extended", extended, "extended diagram");
    auto* verify = app.add_subcommand("verify", "run the full verification battery");
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::ostringstream out;

        if (roots->parsed()) {
            for (gqs::Algebra a : resolve_systems(system)) {
                const auto& sys = gqs::RootSystem::get(a);
                if (format == "json")
                    out << gqs::to_json(sys).dump(2) << "\n";
                else if (format == "tsv")
                    out << gqs::render_roots_tsv(sys);
                else if (format == "text")
                    out << gqs::render_roots_text(sys);
                else
                    throw UsageError("roots supports json, tsv or text");
            }
        } else if (classify_cmd->parsed()) {
            std::vector<gqs::ClassificationEntry> entries;
            for (gqs::Algebra a : resolve_systems(system))
                for (auto& e : gqs::classify(a))
                    entries.push_back(std::move(e));
            if (format == "json")
                out << gqs::to_json(entries).dump(2) << "\n";
            else if (format == "tsv")
                out << gqs::render_classification_tsv(entries);
            else if (format == "text")
                out << gqs::render_classification_text(entries);
            else
                throw UsageError("classify supports json, tsv or text");
        } else if (grading->parsed() || modules->parsed() || relations->parsed()) {
            auto systems = resolve_systems(system);
            if (systems.size() != 1)
                throw UsageError("this command needs one explicit system");
            const auto& sys = gqs::RootSystem::get(systems.front());
            auto g = gqs::grade_decomposition(
                {systems.front(), parse_marks(marks_text, sys.rank())});
            if (g.admissible)
                gqs::check_generation(g);
            if (grading->parsed()) {
                if (format == "json")
                    out << gqs::to_json(g).dump(2) << "\n";
                else if (format == "text")
                    out << gqs::render_grading_text(g);
                else
                    throw UsageError("grading supports json or text");
            } else if (modules->parsed()) {
                if (!g.admissible)
                    throw UsageError("marks do not give an admissible grading");
                if (format == "json")
                    out << gqs::to_json(g).dump(2) << "\n";
                else if (format == "text")
                    out << gqs::render_modules_text(g);
                else
                    throw UsageError("modules supports json or text");
            } else {
                if (!g.admissible)
                    throw UsageError("marks do not give an admissible grading");
                if (format != "text")
                    throw UsageError("relations supports text only");
                out << gqs::render_relations_text(g);
            }
        } else if (d21a->parsed()) {
            auto alpha = gqs::parse_rational(alpha_text);
            if (!alpha)
                throw UsageError("malformed alpha: " + alpha_text);
            gqs::D21Params params{*alpha};
            if (!params.valid())
                throw UsageError("alpha must avoid 0 and -1");
            auto table = gqs::build_d21a(params);
            if (format == "json")
                out << gqs::to_json(table).dump(2) << "\n";
            else if (format == "text")
                out << d21a_text(table);
            else
                throw UsageError("d21a supports json or text");
        } else if (diagram->parsed()) {
            if (format != "dot" && format != "text")
                throw UsageError("diagram supports dot output");
            for (gqs::Algebra a : resolve_systems(system))
                out << gqs::render_dot(gqs::RootSystem::get(a), extended);
        } else if (verify->parsed()) {
            auto results = gqs::verify_all();
            for (const auto& r : results) {
                out << (r.pass ? "PASS " : "FAIL ") << r.name;
                if (!r.pass && !r.detail.empty())
                    out << ": " << r.detail;
                out << "\n";
            }
            write_out(out.str(), output);
            return gqs::all_passed(results) ? kExitOk : kExitMismatch;
        }

        write_out(out.str(), output);
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
}
