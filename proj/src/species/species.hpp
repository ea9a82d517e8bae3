#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "seed/exchange_matrix.hpp"

namespace gsp::species {

// Product of cyclic groups Z/d; characters are residue tuples in lexicographic order.
struct FiniteAbelianGroup {
  std::vector<int> factors;

  int order() const;
  std::vector<int> character(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& residues) const;
  std::size_t inverse(std::size_t index) const;
  std::string character_label(std::size_t index) const;
  bool operator==(const FiniteAbelianGroup& o) const { return factors == o.factors; }
};

using MultMatrix = std::vector<std::vector<int>>;

MultMatrix zero_mult(std::size_t rows, std::size_t cols);
bool is_zero(const MultMatrix& m);
int total(const MultMatrix& m);

struct Bimodule {
  std::size_t from = 0;
  std::size_t to = 0;
  MultMatrix mult;  // irr_from x irr_to
};

struct CharacterIndex {
  std::size_t vertex;
  std::size_t character;
  bool operator==(const CharacterIndex& o) const { return vertex == o.vertex && character == o.character; }
};

// Vertices with groups plus one multiplicity matrix per ordered pair. Character vertices
// (i, rho) are numbered block by block.
struct GroupSpecies {
  std::vector<int> labels;
  std::vector<FiniteAbelianGroup> groups;
  std::vector<std::vector<MultMatrix>> mult;

  static GroupSpecies empty(std::vector<int> labels, std::vector<FiniteAbelianGroup> groups);

  std::size_t size() const { return groups.size(); }
  std::size_t irr(std::size_t i) const { return static_cast<std::size_t>(groups[i].order()); }
  std::size_t num_characters() const;
  std::size_t offset(std::size_t i) const;
  std::size_t character_vertex(std::size_t i, std::size_t rho) const { return offset(i) + rho; }
  CharacterIndex character_of(std::size_t v) const;
  std::vector<std::size_t> block_map() const;
  std::string character_label(std::size_t v) const;
  std::size_t index_of(int label) const;

  Bimodule bimodule(std::size_t i, std::size_t j) const { return {i, j, mult[i][j]}; }
  void set_bimodule(const Bimodule& b);
  bool is_loop_free() const;
  bool operator==(const GroupSpecies& o) const {
    return labels == o.labels && groups == o.groups && mult == o.mult;
  }
};

Bimodule dual_bimodule(const Bimodule& m);
Bimodule tensor_bimodule(const Bimodule& m, const Bimodule& n);

struct Ranks {
  int left;
  int right;
};
// Left rank (constant row sum) and right rank (constant column sum) when locally free.
std::optional<Ranks> bimodule_ranks(const MultMatrix& m);
bool is_locally_free(const GroupSpecies& s);
bool is_globally_free(const GroupSpecies& s);

seed::ExchangeMatrix exchange_matrix(const GroupSpecies& s);
GroupSpecies species_from_matrix(const seed::ExchangeMatrix& b, const std::vector<int>& d);
GroupSpecies species_from_matrix(const seed::ExchangeMatrix& b);

}  // namespace gsp::species
