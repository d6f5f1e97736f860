#include "gqs/json_io.hpp"

#include <stdexcept>
#include <string>

namespace gqs {

namespace {

using nlohmann::json;

std::string parity_str(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

Parity parity_from(const std::string& s)
{
    if (s == "even")
        return Parity::Even;
    if (s == "odd")
        return Parity::Odd;
    throw std::runtime_error("bad parity string: " + s);
}

json root_to_json(const Root& r)
{
    return json{{"coords", r.v}, {"parity", parity_str(r.parity)}};
}

Root root_from_json(const json& j)
{
    return Root{j.at("coords").get<Coords>(), parity_from(j.at("parity").get<std::string>())};
}

} // namespace

json to_json(const RootSystem& sys)
{
    json simple = json::array();
    for (const auto& r : sys.simple_roots())
        simple.push_back(r.v);
    json roots = json::array();
    for (const auto& r : sys.roots())
        roots.push_back(root_to_json(r));
    return json{{"name", algebra_name(sys.algebra())},
                {"rank", sys.rank()},
                {"ambient_dim", sys.ambient_dim()},
                {"simple_roots", simple},
                {"roots", roots}};
}

json to_json(const GradedDecomposition& g)
{
    json levels = json::object();
    for (const auto& [k, roots] : g.levels) {
        json arr = json::array();
        for (const auto& r : roots)
            arr.push_back(root_to_json(r));
        levels[std::to_string(k)] = arr;
    }
    json j{{"system", algebra_name(g.spec.algebra)},
           {"marks", g.spec.marks},
           {"modulus", g.spec.modulus},
           {"length", g.length},
           {"consistent", g.consistent},
           {"admissible", g.admissible},
           {"rejections", g.rejections},
           {"levels", levels}};
    if (g.admissible) {
        json modules = json::array();
        for (int level : {-2, -1, 1, 2}) {
            if (g.level(level).empty())
                continue;
            for (const auto& m : decompose_modules(g, level)) {
                json roots = json::array();
                for (const auto& r : m.roots)
                    roots.push_back(root_to_json(r));
                modules.push_back(json{{"level", m.level},
                                       {"dim_even", m.dim_even},
                                       {"dim_odd", m.dim_odd},
                                       {"roots", roots}});
            }
        }
        j["modules"] = modules;
    }
    return j;
}

json to_json(const ClassificationEntry& e)
{
    auto dims = [](const DimPair& d) { return json{{"even", d.even}, {"odd", d.odd}}; };
    return json{{"system", algebra_name(e.algebra)},
                {"g0", e.g0_label},
                {"length", e.length},
                {"dim_g0", dims(e.dim_g0)},
                {"dim_g1", dims(e.dim_g1)},
                {"dim_g2", dims(e.dim_g2)},
                {"consistent", e.consistent},
                {"marks", e.marks},
                {"modulus", e.modulus},
                {"modules", e.module_count}};
}

json to_json(const std::vector<ClassificationEntry>& entries)
{
    json arr = json::array();
    for (const auto& e : entries)
        arr.push_back(to_json(e));
    return arr;
}

json to_json(const StructureTable& t)
{
    json basis = json::array();
    for (const auto& b : t.basis)
        basis.push_back(json{{"label", b.label},
                             {"parity", parity_str(b.parity)},
                             {"grade", b.grade}});
    json brackets = json::array();
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) {
            const Vec& v = t.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            bool nonzero = false;
            json coeffs = json::array();
            for (const Rat& c : v) {
                coeffs.push_back(rat_str(c));
                if (c != Rat(0))
                    nonzero = true;
            }
            if (nonzero)
                brackets.push_back(json{{"i", i}, {"j", j}, {"coeffs", coeffs}});
        }
    return json{{"alpha", rat_str(t.params.alpha)}, {"basis", basis}, {"brackets", brackets}};
}

const RootSystem& root_system_from_json(const json& j)
{
    const RootSystem& sys = build_root_system(j.at("name").get<std::string>());
    if (j.at("rank").get<int>() != sys.rank()
        || j.at("ambient_dim").get<int>() != sys.ambient_dim())
        throw std::runtime_error("root system payload disagrees with built system");
    std::vector<Root> roots;
    for (const auto& r : j.at("roots"))
        roots.push_back(root_from_json(r));
    if (roots != sys.roots())
        throw std::runtime_error("root list payload disagrees with built system");
    std::size_t i = 0;
    for (const auto& s : j.at("simple_roots")) {
        if (i >= sys.simple_roots().size() || s.get<Coords>() != sys.simple_roots()[i].v)
            throw std::runtime_error("simple root payload disagrees with built system");
        ++i;
    }
    if (i != sys.simple_roots().size())
        throw std::runtime_error("simple root count disagrees with built system");
    return sys;
}

GradedDecomposition grading_from_json(const json& j)
{
    auto alg = algebra_from_name(j.at("system").get<std::string>());
    if (!alg)
        throw std::runtime_error("unknown system in grading payload");
    GradedDecomposition g = grade_decomposition(
        {*alg, j.at("marks").get<std::vector<int>>(), j.value("modulus", 0)});
    if (g.admissible)
        check_generation(g);
    for (const auto& [key, arr] : j.at("levels").items()) {
        std::vector<Root> roots;
        for (const auto& r : arr)
            roots.push_back(root_from_json(r));
        if (roots != g.level(std::stoi(key)))
            throw std::runtime_error("level payload disagrees with recomputed grading");
    }
    if (j.at("length").get<int>() != g.length
        || j.at("consistent").get<bool>() != g.consistent
        || j.at("admissible").get<bool>() != g.admissible)
        throw std::runtime_error("grading flags disagree with recomputed grading");
    return g;
}

} // namespace gqs
