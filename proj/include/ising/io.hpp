#pragma once

#include <string>
#include <vector>

#include "ising/graph.hpp"
#include "ising/poly.hpp"

namespace ising {

// Graph JSON: {"n": int, "edges": [[u,v],...], "names": [...]?, "labels": [...]?}
// with edges sorted lexicographically.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
Graph graph_from_json_file(const std::string& path);

// Polynomial JSON: {"vars": [...], "terms": [[[e...], "coeff"], ...]}.
// Terms are ordered by exponent vector read from the last variable to the
// first, matching the conventional writing order of the bivariate
// polynomial (t-only terms first, then ascending y-degree).
std::string poly_to_json(const Poly& p, const std::vector<std::string>& vars);
Poly poly_from_json(const std::string& text);

}  // namespace ising
