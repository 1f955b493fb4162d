#include "ising/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ising {

using json = nlohmann::ordered_json;

std::string graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    if (g.has_names()) j["names"] = g.names();
    if (g.has_labels()) j["labels"] = g.labels();
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw UsageError("graph JSON needs \"n\" and \"edges\"");
    try {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw UsageError("edge entries must be pairs");
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
        std::vector<std::string> names;
        if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
        std::vector<int> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<int>>();
        return Graph(n, std::move(edges), std::move(names), std::move(labels));
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad graph JSON: ") + e.what());
    }
}

Graph graph_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

namespace {
// Order exponent vectors by their reversed tuples.
bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}
}  // namespace

std::string poly_to_json(const Poly& p, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != p.arity())
        throw UsageError("variable name list does not match arity");
    std::vector<const Poly::TermMap::value_type*> order;
    for (const auto& term : p.terms()) order.push_back(&term);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return colex_less(a->first, b->first); });

    json j;
    j["vars"] = vars;
    json terms = json::array();
    for (auto* term : order)
        terms.push_back(json::array({json(term->first), json(to_string(term->second))}));
    j["terms"] = std::move(terms);
    return j.dump();
}

Poly poly_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad polynomial JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw UsageError("polynomial JSON needs \"vars\" and \"terms\"");
    try {
        const int arity = static_cast<int>(j.at("vars").size());
        Poly p(arity);
        for (const auto& t : j.at("terms")) {
            if (!t.is_array() || t.size() != 2) throw UsageError("term entries must be pairs");
            auto exps = t.at(0).get<std::vector<int>>();
            p.add_term(exps, parse_rat(t.at(1).get<std::string>()));
        }
        return p;
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad polynomial JSON: ") + e.what());
    }
}

}  // namespace ising
