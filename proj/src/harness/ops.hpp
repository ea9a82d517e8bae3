#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutation/gsp.hpp"

namespace gsp::harness {

using nlohmann::json;

// Vertex labels in, vertex labels out. Every function throws gsp::Error on domain failures.

std::vector<std::size_t> indices_of(const species::GroupSpecies& s, const std::vector<int>& labels);

json b_matrix_op(const mutation::GSP& g);
json species_from_matrix_op(const json& matrix, const json& d);
json mutate_op(const mutation::GSP& g, int k);

enum class Engine { Combinatorial, Representation, Both };
// F and g of the cluster variable at `vertex` after mutating along seq. The representation
// engine reports every character of the vertex; Both also checks that the two agree.
json fg_op(const mutation::GSP& g, const std::vector<int>& seq, int vertex, Engine engine);

// Mutates the decorated representation at k; the GSP part is the mutated GSP.
json rep_mutate_op(const mutation::GSP& g, const json& rep, int k);

// Groups 1, 1, Z/2 with A_12 = K, A_23 = K[Z/2] and S = 0.
mutation::GSP c3_gsp();
// The worked example: mu_3 mu_1 mu_2 of the GSP, each step of the representation mutation, and
// F, g, h of the final representation.
json example_c3_op();

json probe_op(const species::GroupSpecies& s, std::size_t max_len, std::size_t trials, std::uint64_t seed, int N);

}  // namespace gsp::harness
