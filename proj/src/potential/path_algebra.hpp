#pragma once

#include <climits>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "exact/qmatrix.hpp"
#include "species/species.hpp"

namespace gsp::potential {

using exact::Q;
using Path = std::vector<int>;

struct Arrow {
  std::size_t source;
  std::size_t target;
  std::size_t copy;
};

// Character-basis quiver of a species. Arrows are ordered by (block from, block to, rho, sigma, copy).
class Quiver {
 public:
  explicit Quiver(const species::GroupSpecies& s);

  const species::GroupSpecies& species() const { return species_; }
  std::size_t num_vertices() const { return block_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const Arrow& arrow(int a) const { return arrows_[static_cast<std::size_t>(a)]; }
  std::size_t block_of(std::size_t v) const { return block_[v]; }
  const std::vector<int>& between(std::size_t u, std::size_t v) const;
  const std::vector<int>& out(std::size_t v) const { return out_[v]; }
  const std::vector<int>& in(std::size_t v) const { return in_[v]; }
  // Arrows whose source and target blocks are i and j.
  std::vector<int> block_arrows(std::size_t i, std::size_t j) const;

  std::string arrow_id(int a) const;
  int arrow_by_id(const std::string& id) const;
  std::string vertex_label(std::size_t v) const { return species_.character_label(v); }

  bool composable(const Path& p) const;
  bool is_cycle(const Path& p) const;
  std::size_t source(const Path& p) const { return arrow(p.front()).source; }
  std::size_t target(const Path& p) const { return arrow(p.back()).target; }

 private:
  species::GroupSpecies species_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> block_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<int>> between_;
  std::vector<std::vector<int>> out_, in_;
  std::map<std::string, int> by_id_;
};

// Element of the complete path algebra modulo paths longer than N; no idempotent terms.
struct Element {
  int N = 0;
  std::map<Path, Q> terms;

  void add(const Path& p, const Q& c);
  bool is_zero() const { return terms.empty(); }
  Element operator+(const Element& o) const;
  Element scaled(const Q& c) const;
  bool operator==(const Element& o) const { return terms == o.terms; }
};

// Truncated product; paths longer than N are dropped.
Element multiply(const Element& a, const Element& b, int N);

// Lexicographically minimal rotation.
Path canonical_rotation(const Path& cycle);

// Potential truncated at degree N. exact_through records the largest degree up to which the
// stored terms are known to be exact; kExact means nothing beyond N was ever dropped.
struct Potential {
  static constexpr int kExact = INT_MAX;
  int N = 6;
  int exact_through = kExact;
  std::map<Path, Q> terms;

  void add_cycle(const Path& cycle, const Q& c);
  bool is_exact() const { return exact_through == kExact; }
  // Highest degree through which every coefficient is known.
  int precision() const { return is_exact() ? INT_MAX : exact_through; }
  void mark_truncated(int degree) { exact_through = std::min(exact_through, degree); }
  Potential degree_part(std::size_t d) const;
  bool operator==(const Potential& o) const { return N == o.N && terms == o.terms; }
};

// Sum over occurrences of arrow a in each cycle of the rotation starting after a.
Element cyclic_derivative(const Potential& s, int a);
// Same for consecutive arrows a then b; the remaining path runs from target(b) to source(a).
Element pair_derivative(const Potential& s, int a, int b);

// Algebra morphism given by arrow images; images[a] lives on the target quiver.
struct EMorphism {
  std::vector<Element> images;
  static EMorphism identity(std::size_t num_arrows, int N);
};

Element apply(const EMorphism& phi, const Element& x, int N);
Potential apply(const EMorphism& phi, const Potential& s);
// a -> phi(psi(a)).
EMorphism compose(const EMorphism& phi, const EMorphism& psi, int N);
// Inverse modulo paths longer than N; throws NotInvertible when the linear part is singular.
EMorphism inverse(const EMorphism& phi, int N);

// Block-level checks.
bool is_2_acyclic_at(const species::GroupSpecies& s, std::size_t k);
bool is_2_acyclic(const species::GroupSpecies& s);
// Pairs {i,j} (i < j) with arrows in both directions.
std::vector<std::pair<std::size_t, std::size_t>> two_cycle_pairs(const species::GroupSpecies& s);

// Matrix of alpha_{S,ij} on the dual bases of A_ij and A_ji (rows: arrows i->j, columns: arrows j->i).
exact::QMatrix alpha_form(const Quiver& q, const Potential& s, std::size_t i, std::size_t j);
bool max_rank_check(const Quiver& q, const Potential& s, std::size_t i, std::size_t j);
bool is_cancellable_pair(const species::GroupSpecies& s, std::size_t i, std::size_t j);

}  // namespace gsp::potential
