#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nesto/families.hpp"
#include "nesto/gamma.hpp"
#include "nesto/json_io.hpp"
#include "nesto/nested.hpp"
#include "nesto/series.hpp"

using namespace nesto;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open file " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::pair<std::string, std::vector<int>> parse_family_spec(const std::string& spec) {
    std::string name = spec;
    std::vector<int> params;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::stringstream ps(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ps, item, ',')) {
            try {
                params.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw invalid_input_error("bad family parameter: " + item);
            }
        }
    }
    return {name, params};
}

struct InputFlags {
    std::string family, graph_file, building_file;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
    auto* f = cmd->add_option("--family", in.family, "named family, e.g. complete:4");
    auto* g = cmd->add_option("--graph", in.graph_file, "graph JSON file");
    auto* b = cmd->add_option("--building", in.building_file, "building JSON file");
    f->excludes(g)->excludes(b);
    g->excludes(b);
}

BuildingSet load_building(const InputFlags& in) {
    int sources = !in.family.empty() + !in.graph_file.empty() + !in.building_file.empty();
    if (sources != 1) throw invalid_input_error("exactly one of --family/--graph/--building");
    if (!in.family.empty()) {
        auto [name, params] = parse_family_spec(in.family);
        FamilyObject obj = named_family(name, params);
        if (std::holds_alternative<Graph>(obj))
            return graphical_building(std::get<Graph>(obj));
        return std::get<BuildingSet>(obj);
    }
    if (!in.graph_file.empty()) return graphical_building(graph_from_json(read_file(in.graph_file)));
    return building_from_json(read_file(in.building_file));
}

std::size_t default_cap() {
    if (const char* env = std::getenv("NESTO_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw invalid_input_error("NESTO_CAP must be a positive integer");
    }
    return 10000000;
}

int run_compute(const InputFlags& in, std::size_t cap, const std::string& format) {
    ComputeResult r = compute_result(load_building(in), cap);
    if (format == "json")
        std::cout << result_to_json(r);
    else if (format == "csv")
        std::cout << result_to_csv(r);
    else
        std::cout << result_to_pretty(r);
    return 0;
}

int run_check(const InputFlags& in, std::size_t cap) {
    BuildingSet b = load_building(in);
    FVector fv = nested_complex_fvector(b, cap);
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw cross_check_error("mismatch: " + what);
        std::cout << "ok: " << what << "\n";
    };
    require(fv.f == f_recurrence_restriction(b), "face count agrees with deletion recurrence");
    require(fv.f == f_recurrence_contraction(b),
            "face count agrees with derivative recurrence");
    IntPoly h = h_from_f(fv.f, fv.d);
    require(h.is_palindromic(fv.d), "h-polynomial palindromic");
    require(h.nonnegative(), "h-polynomial nonnegative");
    if (b.is_connected()) {
        require(h == h_via_descents(b, cap), "h-polynomial agrees with tree descent count");
        if (is_chordal(b).chordal) {
            IntPoly g = gamma_chordal(b, cap);  // internally checked against h
            std::cout << "ok: gamma agrees with peak enumeration\n";
            require(g.nonnegative(), "gamma nonnegative");
        }
    }
    std::cout << "all checks passed\n";
    return 0;
}

int run_survey(int nodes, const std::string& format) {
    TreeSurvey s = tree_gamma_survey(nodes);
    if (format == "json") {
        std::cout << "{\"n\":" << s.n << ",\"trees\":" << s.rows.size()
                  << ",\"path_unique_min\":" << (s.path_unique_min ? "true" : "false")
                  << ",\"star_unique_max\":" << (s.star_unique_max ? "true" : "false")
                  << ",\"incomparable_pairs\":" << s.incomparable_pairs.size() << "}\n";
        return 0;
    }
    std::cout << tree_survey_csv(s);
    if (format == "pretty") {
        std::cout << "trees: " << s.rows.size()
                  << ", path gamma unique min: " << (s.path_unique_min ? "yes" : "no")
                  << ", star gamma unique max: " << (s.star_unique_max ? "yes" : "no")
                  << ", incomparable pairs: " << s.incomparable_pairs.size() << "\n";
    }
    return 0;
}

int run_series(const std::string& name, int order, int vars, const std::string& family) {
    if (name == "narayana") {
        PolySeries1 c = narayana_series(order);
        for (int n = 1; n <= order; ++n)
            std::cout << "x^" << n << ": " << c.coeff(n).pretty() << "\n";
        return 0;
    }
    auto print_k = [](const PolySeriesK& s) {
        for (const auto& [e, p] : s.coeffs) {
            for (size_t i = 0; i < e.size(); ++i) std::cout << (i ? "," : "") << e[i];
            std::cout << ": " << p.pretty() << "\n";
        }
    };
    std::vector<int> orders(std::max(vars, 1), order);
    if (name == "t") {
        print_k(t_series(orders));
        return 0;
    }
    if (name == "newcomb") {
        print_k(newcomb_series(orders));
        return 0;
    }
    if (name == "fa" || name == "ft" || name == "fh") {
        FSeriesBundle fs = fa_fh_ft_series(orders);
        if (name == "fa")
            for (int n = 0; n <= fs.fa.order; ++n)
                std::cout << "x^" << n << ": " << fs.fa.coeff(n).pretty() << "\n";
        else
            print_k(name == "ft" ? fs.ft : fs.fh);
        return 0;
    }
    if (name == "g") {
        auto [fam, params] = parse_family_spec(family);
        Graph point(1);
        Graph star2(3), star3(4), star4(5), tri(3);
        star2.add_edge(1, 2);
        star2.add_edge(1, 3);
        for (int v = 2; v <= 4; ++v) star3.add_edge(1, v);
        for (int v = 2; v <= 5; ++v) star4.add_edge(1, v);
        tri.add_edge(1, 2);
        tri.add_edge(2, 3);
        tri.add_edge(1, 3);
        std::vector<IntPoly> g;
        if (fam == "path")
            g = g_polynomial(point, 1, point, 1);
        else if (fam == "dynkinD")
            g = g_polynomial(star2, 1, point, 1);
        else if (fam == "affineD")
            g = g_polynomial(star2, 1, star2, 1);
        else if (fam == "kite" && params == std::vector<int>{3})
            g = g_polynomial(tri, 1, point, 1);
        else if (fam == "daisy" && params == std::vector<int>{3})
            g = g_polynomial(star3, 1, point, 1);
        else if (fam == "daisy" && params == std::vector<int>{4})
            g = g_polynomial(star4, 1, point, 1);
        else
            throw invalid_input_error("series g: unsupported family " + family);
        for (size_t i = 0; i < g.size(); ++i)
            std::cout << "g_" << i << ": " << g[i].pretty() << "\n";
        return 0;
    }
    throw invalid_input_error("unknown series: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nested-complex face polynomial toolkit"};
    app.require_subcommand(1);

    InputFlags in;
    std::string format = "pretty";
    std::size_t cap = 0;
    int threads = 1;
    int order = 8, vars = 1, nodes = 7;
    std::string series_name = "narayana", series_family;

    auto* compute = app.add_subcommand("compute", "face polynomials of one building set");
    add_input_flags(compute, in);
    compute->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    compute->add_option("--cap", cap, "enumeration cap");
    compute->add_option("--threads", threads);

    auto* check = app.add_subcommand("check", "run the cross-validation suite");
    add_input_flags(check, in);
    check->add_option("--cap", cap);
    check->add_option("--threads", threads);

    auto* survey = app.add_subcommand("survey", "gamma survey over unlabelled trees");
    survey->add_option("--order", nodes, "number of tree nodes");
    survey->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    survey->add_option("--threads", threads);

    auto* series = app.add_subcommand("series", "truncated generating functions");
    series->add_option("--name", series_name)
        ->check(CLI::IsMember({"narayana", "t", "newcomb", "fa", "ft", "fh", "g"}));
    series->add_option("--order", order, "truncation order per variable");
    series->add_option("--vars", vars, "number of variables");
    series->add_option("--family", series_family, "family for g-polynomials");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cap == 0) cap = default_cap();
        if (compute->parsed()) return run_compute(in, cap, format);
        if (check->parsed()) return run_check(in, cap);
        if (survey->parsed()) return run_survey(nodes, format);
        return run_series(series_name, order, vars, series_family);
    } catch (const cross_check_error& e) {
        std::cerr << "cross-check failed: " << e.what() << "\n";
        return 3;
    } catch (const resource_cap_error& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const invalid_input_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
