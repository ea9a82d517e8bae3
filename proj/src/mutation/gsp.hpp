#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "potential/path_algebra.hpp"
#include "potential/reduction.hpp"
#include "seed/exchange_matrix.hpp"
#include "seed/sfrational.hpp"
#include "species/species.hpp"

namespace gsp::mutation {

using potential::Path;
using potential::Potential;
using potential::Quiver;

struct GSP {
  species::GroupSpecies species;
  Potential potential;

  static GSP with_zero_potential(species::GroupSpecies s, int N = 6) {
    return {std::move(s), Potential{N, Potential::kExact, {}}};
  }
  bool operator==(const GSP& o) const { return species == o.species && potential == o.potential; }
};

// Premutation together with the arrow correspondence it uses.
struct Premutation {
  GSP result;
  std::vector<int> kept;                    // old arrow away from block k -> same arrow, else -1
  std::vector<int> dual;                    // old arrow touching block k -> its dual, else -1
  std::map<std::pair<int, int>, int> composite;  // (a into k, b out of k) -> [ab]
};

// Throws NotTwoAcyclicAtK (witness: a path from block k back to k) or MutationUndefined.
Premutation premutate(const GSP& g, std::size_t k);

struct MutationReport {
  std::size_t k = 0;
  Premutation pre;
  potential::Reduction reduction;
  GSP reduced;
  bool two_acyclic = true;
  std::vector<std::pair<std::size_t, std::size_t>> two_cycles;  // in the reduced species
  std::optional<seed::ExchangeMatrix> b_before, b_after;         // when locally free
};

MutationReport mutate(const GSP& g, std::size_t k);

// Error witness for a failed 2-acyclicity precondition, or nullopt when g is 2-acyclic at k.
std::optional<std::vector<std::string>> two_cycle_witness(const species::GroupSpecies& s, std::size_t k);

// mutate_matrix(B(g), k) == B(mu_k g); throws MutationNotTwoAcyclic when mu_k g has 2-cycles.
bool b_compat_check(const GSP& g, std::size_t k);

// Truncated Def(A,S) vanishes.
bool rigidity_check(const GSP& g, std::size_t max_len);

struct ProbeOptions {
  std::size_t max_len = 2;
  std::size_t trials = 4;
  std::uint64_t seed = 1;
  std::size_t max_degree = 4;
  int max_coeff = 5;
};

struct ProbeTrial {
  Potential potential;
  bool degenerate = false;
  std::vector<std::size_t> sequence;  // first degenerating sequence (0-based vertices)
  std::vector<std::pair<std::size_t, std::size_t>> two_cycles;
  std::size_t sequences_checked = 0;
};

struct ProbeReport {
  std::vector<ProbeTrial> trials;
  bool any_degenerate() const {
    for (const auto& t : trials)
      if (t.degenerate) return true;
    return false;
  }
};

// Cycles of length 2..max_degree in canonical rotation.
std::vector<Path> cycle_basis(const Quiver& q, std::size_t max_degree);

// Samples potentials on the cycle basis and runs every mutation sequence up to max_len.
ProbeReport probe_nondegeneracy(const species::GroupSpecies& s, const ProbeOptions& opt, int N = 6);
// Same with a fixed potential.
ProbeTrial probe_sequences(const GSP& g, std::size_t max_len);

// Y-variables per character vertex (i, rho) together with the GSP they are attached to.
struct ExtendedYSeed {
  std::vector<seed::SFRational> y;
  GSP gsp;

  static ExtendedYSeed free(const GSP& g);
};

ExtendedYSeed extended_y_seed_mutate(const ExtendedYSeed& s, std::size_t k);

}  // namespace gsp::mutation
