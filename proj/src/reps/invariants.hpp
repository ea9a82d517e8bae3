#pragma once

#include <optional>
#include <vector>

#include "reps/decorated_rep.hpp"
#include "seed/exchange_matrix.hpp"
#include "seed/int_polynomial.hpp"

namespace gsp::reps {

// Every character vertex carries dimension at most 1.
bool is_thin(const DecoratedRep& r);

struct EulerOptions {
  // Allows thick representations: F_p-point counts at several primes, fitted by a polynomial in
  // q and evaluated at q = 1. Only correct when the submodule variety has polynomial count.
  bool allow_counting = false;
};

// chi(Gr_e(X)). Throws UnsupportedRegime for thick reps without allow_counting.
seed::Z grassmannian_euler(const DecoratedRep& r, const ClassVector& e, const EulerOptions& opt = {});

struct FPolynomial {
  seed::IntPolynomial f;  // one variable per character vertex
  bool assumes_polynomial_count = false;
};
FPolynomial f_polynomial(const DecoratedRep& r, const EulerOptions& opt = {});
// Specialization y_{i,rho} -> z_i.
seed::IntPolynomial reduced_f(const DecoratedRep& r, const EulerOptions& opt = {});

ClassVector g_vector(const DecoratedRep& r);
ClassVector h_vector(const DecoratedRep& r);
// Sum over the characters of each vertex.
std::vector<int> reduce_classes(const species::GroupSpecies& s, const ClassVector& c);

int pairing(const ClassVector& a, const ClassVector& b);

// Intertwiners X -> Y: one matrix per character vertex, X(v) -> Y(v) in row convention.
using Intertwiner = std::vector<QMatrix>;
std::vector<Intertwiner> hom_basis(const DecoratedRep& x, const DecoratedRep& y);
std::size_t hom_dim(const DecoratedRep& x, const DecoratedRep& y);
// Intertwiners vanishing on every vertex outside block k.
std::size_t hom_k_dim(const DecoratedRep& x, const DecoratedRep& y, std::size_t k);

// Equal dimension data and an invertible intertwiner. Both reps must live on the same species.
std::optional<Intertwiner> find_isomorphism(const DecoratedRep& x, const DecoratedRep& y);

DecoratedRep direct_sum(const DecoratedRep& x, const DecoratedRep& y);

int e_inj(const DecoratedRep& x, const DecoratedRep& y);
int e_sym(const DecoratedRep& x, const DecoratedRep& y);
int e_inv(const DecoratedRep& x);
// ([sum ker beta_i] | [sum ker gamma_i / im beta_i]) + ([X] | [V]).
int e_lower_bound(const DecoratedRep& x);
// The two dichotomies that follow from E = 0 at every character vertex: X(v) = 0 or V(v) = 0, and
// ker beta_v = 0 or ker gamma_v = im beta_v.
bool eics_holds(const DecoratedRep& x);

// Opposite species: A^op_ji has the character-inverted multiplicities of A_ij.
species::GroupSpecies opposite_species(const species::GroupSpecies& s);
// Arrow of the opposite character quiver matching each arrow of q.
std::vector<int> opposite_arrow_map(const Quiver& q, const Quiver& qop);
GSP opposite_gsp(const GSP& g);
DecoratedRep dual_rep(const DecoratedRep& r);

// Cluster character of a positive rep in the variables x_i, one per vertex.
seed::LaurentPolynomial cluster_character(const DecoratedRep& r, const EulerOptions& opt = {});

}  // namespace gsp::reps
