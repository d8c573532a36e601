#include "nesto/json_io.hpp"

#include <json.hpp>
#include <sstream>

#include "nesto/gamma.hpp"
#include "nesto/nested.hpp"

namespace nesto {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw invalid_input_error("json: malformed document");
    return j;
}

int read_n(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw invalid_input_error("json: missing integer field \"n\"");
    int n = j["n"].get<int>();
    if (n < 0 || n > 64) throw invalid_input_error("json: n out of range");
    return n;
}

json poly_to_array(const IntPoly& p) {
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i) {
        const Int& c = p.coeff(i);
        if (!c.fits_slong_p())
            throw resource_cap_error("json: coefficient too large to serialize");
        a.push_back(static_cast<long long>(c.get_si()));
    }
    if (a.empty()) a.push_back(0);
    return a;
}

IntPoly poly_from_array(const json& a) {
    if (!a.is_array()) throw invalid_input_error("json: polynomial must be an array");
    std::vector<Int> c;
    for (const auto& v : a) {
        if (!v.is_number_integer()) throw invalid_input_error("json: non-integer coefficient");
        c.push_back(Int(v.get<long>()));
    }
    return IntPoly(c);
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace

Graph graph_from_json(const std::string& text) {
    json j = parse(text);
    Graph g(read_n(j));
    if (!j.contains("edges") || !j["edges"].is_array())
        throw invalid_input_error("json: missing array field \"edges\"");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw invalid_input_error("json: edge must be a pair of integers");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

std::string graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return dump(j);
}

BuildingSet building_from_json(const std::string& text) {
    json j = parse(text);
    int n = read_n(j);
    if (!j.contains("members") || !j["members"].is_array())
        throw invalid_input_error("json: missing array field \"members\"");
    std::vector<Mask> mem;
    for (const auto& m : j["members"]) {
        if (!m.is_array()) throw invalid_input_error("json: member must be an array");
        Mask mask = 0;
        for (const auto& v : m) {
            if (!v.is_number_integer()) throw invalid_input_error("json: non-integer element");
            int e = v.get<int>();
            if (e < 1 || e > n) throw invalid_input_error("json: element out of range");
            mask |= bit_of(e);
        }
        mem.push_back(mask);
    }
    return validate_building(mem, n);
}

std::string building_to_json(const BuildingSet& b) {
    json j;
    j["n"] = b.ground_size();
    j["members"] = json::array();
    for (Mask m : b.members()) {
        json mem = json::array();
        for (int e = 1; e <= b.ground_size(); ++e)
            if (contains(m, e)) mem.push_back(e);
        j["members"].push_back(mem);
    }
    return dump(j);
}

Preposet poset_from_json(const std::string& text) {
    json j = parse(text);
    int n = read_n(j);
    if (!j.contains("relations") || !j["relations"].is_array())
        throw invalid_input_error("json: missing array field \"relations\"");
    std::vector<std::pair<int, int>> rel;
    for (const auto& r : j["relations"]) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
            !r[1].is_number_integer())
            throw invalid_input_error("json: relation must be a pair of integers");
        rel.emplace_back(r[0].get<int>(), r[1].get<int>());
    }
    return Preposet(n, rel);
}

ComputeResult compute_result(const BuildingSet& b, std::size_t cap) {
    ComputeResult r;
    r.n = b.ground_size();
    FVector fv = nested_complex_fvector(b, cap);
    r.f = fv.f;
    r.h = h_from_f(fv.f, fv.d);
    r.num_vertices = fv.f.coeff(0);
    r.connected = b.is_connected();
    r.chordal = is_chordal(b).chordal;
    r.flag = is_flag(b).flag;
    r.gamma_has_permutation_model = r.connected && r.chordal;
    if (r.gamma_has_permutation_model) {
        r.gamma = gamma_chordal(b, cap);  // cross-checked internally
    } else if (r.h.is_palindromic(fv.d)) {
        r.gamma = gamma_from_h(r.h, fv.d).poly();
    }
    return r;
}

std::string result_to_json(const ComputeResult& r) {
    json j;
    j["n"] = r.n;
    j["f"] = poly_to_array(r.f);
    j["h"] = poly_to_array(r.h);
    j["gamma"] = r.gamma ? poly_to_array(*r.gamma) : json(nullptr);
    if (!r.num_vertices.fits_slong_p())
        throw resource_cap_error("json: vertex count too large to serialize");
    j["num_vertices"] = static_cast<long long>(r.num_vertices.get_si());
    j["connected"] = r.connected;
    j["chordal"] = r.chordal;
    j["flag"] = r.flag;
    j["gamma_permutation_model"] = r.gamma_has_permutation_model;
    return dump(j);
}

ComputeResult result_from_json(const std::string& text) {
    json j = parse(text);
    ComputeResult r;
    r.n = read_n(j);
    r.f = poly_from_array(j.at("f"));
    r.h = poly_from_array(j.at("h"));
    if (!j.at("gamma").is_null()) r.gamma = poly_from_array(j.at("gamma"));
    r.num_vertices = Int(j.at("num_vertices").get<long>());
    r.connected = j.at("connected").get<bool>();
    r.chordal = j.at("chordal").get<bool>();
    r.flag = j.at("flag").get<bool>();
    r.gamma_has_permutation_model = j.at("gamma_permutation_model").get<bool>();
    return r;
}

std::string result_to_csv(const ComputeResult& r) {
    std::ostringstream out;
    auto row = [&](const char* key, const std::string& value) {
        out << key << "," << value << "\n";
    };
    auto poly_cells = [](const IntPoly& p) {
        std::ostringstream s;
        for (int i = 0; i <= std::max(p.degree(), 0); ++i) s << (i ? " " : "") << p.coeff(i);
        return s.str();
    };
    row("n", std::to_string(r.n));
    row("f", poly_cells(r.f));
    row("h", poly_cells(r.h));
    row("gamma", r.gamma ? poly_cells(*r.gamma) : "");
    row("num_vertices", r.num_vertices.get_str());
    row("connected", r.connected ? "true" : "false");
    row("chordal", r.chordal ? "true" : "false");
    row("flag", r.flag ? "true" : "false");
    row("gamma_permutation_model", r.gamma_has_permutation_model ? "true" : "false");
    return out.str();
}

std::string result_to_pretty(const ComputeResult& r) {
    std::ostringstream out;
    out << "n            " << r.n << "\n";
    out << "f            " << r.f.pretty() << "\n";
    out << "h            " << r.h.pretty() << "\n";
    if (r.gamma)
        out << "gamma        " << r.gamma->pretty()
            << (r.gamma_has_permutation_model ? "" : "  (no permutation model)") << "\n";
    else
        out << "gamma        undefined (h not palindromic)\n";
    out << "vertices     " << r.num_vertices.get_str() << "\n";
    out << "connected    " << (r.connected ? "yes" : "no") << "\n";
    out << "chordal      " << (r.chordal ? "yes" : "no") << "\n";
    out << "flag         " << (r.flag ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace nesto
