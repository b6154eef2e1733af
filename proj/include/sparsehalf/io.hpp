#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/homomorphism.hpp"
#include "sparsehalf/weighted.hpp"

namespace sparsehalf {

// Edge-list text format: first line "n m", then m lines "u v" with
// 0-based endpoints and u < v. Lines starting with '#' are comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Weight and half files: one line per vertex, "index p/q", every vertex
// present exactly once. Comments as above.
std::vector<Rat> read_vertex_rationals(std::istream& in, int n);
void write_vertex_rationals(std::ostream& out, const std::vector<Rat>& values);

WeightFunction read_weight_file(const std::string& path, std::shared_ptr<const Graph> g);
Half read_half_file(const std::string& path, const WeightFunction& wf);

// Distribution files: header "halves k", then k blocks, each a "prob p/q"
// line followed by the half's per-vertex lines.
void write_distribution(std::ostream& out, const HalfDistribution& dist);
HalfDistribution read_distribution(std::istream& in, const WeightFunction& wf);

// Homomorphism files: first line "n_source n_target", then one "v image"
// line per source vertex.
void write_homomorphism(std::ostream& out, const Homomorphism& phi);
Homomorphism read_homomorphism(std::istream& in, std::shared_ptr<const Graph> source,
                               std::shared_ptr<const Graph> target);

/// Generator name grammar used by the CLI: "fd:<d>", "c5", "petersen",
/// "pstar", or "blowup:<name>:<s1,s2,...>".
Graph graph_from_generator_name(const std::string& name);

}  // namespace sparsehalf
