#pragma once

#include "rtour/tournament.hpp"

#include <optional>
#include <vector>

namespace rtour {

/// Number of edges directed from A to B, optionally only those of one colour.
/// A and B must be disjoint.
long long edge_count(const ColoredTournament &g, const VertexSet &a, const VertexSet &b,
                     std::optional<Color> filter = std::nullopt);
long long edge_count(const Tournament &g, const VertexSet &a, const VertexSet &b);

/// Directed Hamiltonian path built by sequential insertion.
std::vector<Vertex> hamiltonian_path(const Tournament &g);

/// Transitive subtournament found by repeatedly keeping the larger of the
/// out- and in-neighbourhoods of the lowest remaining vertex. Returned in
/// transitive order (each vertex beats all later ones); its size is at least
/// floor(log2 |within|) + 1.
std::vector<Vertex> transitive_subtournament(const Tournament &g, const VertexSet &within);
std::vector<Vertex> transitive_subtournament(const Tournament &g);

/// True when consecutive entries are joined by edges u -> v of `view`.
bool is_directed_path(DigraphRef view, const std::vector<Vertex> &seq);
/// True when every earlier entry beats every later one.
bool is_transitive_order(const Tournament &g, const std::vector<Vertex> &seq);

} // namespace rtour
