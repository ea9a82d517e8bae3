#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "exact/qmatrix.hpp"
#include "mutation/gsp.hpp"

namespace gsp::reps {

using exact::QMatrix;
using mutation::GSP;
using potential::Path;
using potential::Potential;
using potential::Quiver;
// One entry per character vertex (i, rho).
using ClassVector = std::vector<int>;

// Right module over the truncated Jacobian algebra in the character basis: x . a = x * arrows[a],
// arrows[a] is dims[source] x dims[target]. decoration is the E-module V.
struct DecoratedRep {
  GSP gsp;
  std::vector<std::size_t> dims;
  std::vector<QMatrix> arrows;
  ClassVector decoration;

  static DecoratedRep zero(const GSP& g);
  static DecoratedRep negative_simple(const GSP& g, std::size_t vertex);
  static DecoratedRep positive_simple(const GSP& g, std::size_t vertex);

  std::size_t total_dim() const;
  ClassVector dim_vector() const;
  bool is_zero() const;
};

// Matrix of an algebra element whose paths run from character vertex `from` to `to`.
QMatrix act(const Quiver& q, const DecoratedRep& r, const potential::Element& e, std::size_t from, std::size_t to);
QMatrix act_path(const DecoratedRep& r, const Quiver& q, const Path& p, std::size_t from, std::size_t to);

// Shape errors throw InvalidRep.
void check_shape(const DecoratedRep& r);
bool satisfies_relations(const DecoratedRep& r);
bool is_nilpotent(const DecoratedRep& r);
// Shape, relations and nilpotency; throws InvalidRep or RelationViolation.
void validate(const DecoratedRep& r);

// Triangle X_in -> X(v) -> X_out -> X_in at one character vertex v of block k, in row convention.
struct TriangleAt {
  std::size_t vertex = 0;
  std::vector<int> in_arrows;   // X_in = sum over a of X(source a)
  std::vector<int> out_arrows;  // X_out = sum over b of X(target b)
  QMatrix alpha;                // X_in x X(v)
  QMatrix beta;                 // X(v) x X_out
  QMatrix gamma;                // X_out x X_in
};

struct TriangleMaps {
  std::size_t k = 0;
  std::vector<TriangleAt> at;  // one per character of block k
};

// Requires 2-acyclicity at k. Throws RelationViolation if alpha gamma or gamma beta is nonzero.
TriangleMaps triangle_maps(const DecoratedRep& r, std::size_t k);
// Same maps without the 2-acyclicity precondition or the composition check.
TriangleMaps raw_triangle(const DecoratedRep& r, std::size_t k);

// Mutation of a GSPDR. The GSP part equals mutation::mutate(gsp, k).reduced, computed at a
// truncation raised to cover the representation; throws InsufficientPrecision when the potential
// is not known to that degree.
DecoratedRep mutate_rep(const DecoratedRep& r, std::size_t k);

// mu_{i1} ... mu_{in}(mu_{in} ... mu_{i1}(g), 0, V): the GSP is mutated along seq in order, then
// the rep (0, V) is mutated back along reversed seq. Restarts with a larger truncation when needed.
DecoratedRep mutate_gspdr_sequence(const GSP& g, const ClassVector& v, const std::vector<std::size_t>& seq);

// Row-convention linear algebra shared with the invariant code.
QMatrix left_kernel(const QMatrix& m);
QMatrix row_basis(const QMatrix& m);

}  // namespace gsp::reps
