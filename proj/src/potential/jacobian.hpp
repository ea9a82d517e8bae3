#pragma once

#include <optional>
#include <vector>

#include "potential/path_algebra.hpp"

namespace gsp::potential {

// A path of the truncated path algebra; an empty arrow list denotes the idempotent at `vertex`.
struct BasisPath {
  std::size_t vertex = 0;
  Path arrows;
  std::size_t source(const Quiver& q) const { return arrows.empty() ? vertex : q.source(arrows); }
  std::size_t target(const Quiver& q) const { return arrows.empty() ? vertex : q.target(arrows); }
  bool operator==(const BasisPath& o) const { return vertex == o.vertex && arrows == o.arrows; }
};

struct JacobianBasis {
  std::size_t dimension = 0;
  std::vector<BasisPath> basis;  // shorter paths preferred as representatives
  bool exact = true;             // false when the potential is not known up to the needed degree
};

// All paths of length <= max_len, including idempotents.
std::vector<BasisPath> enumerate_paths(const Quiver& q, std::size_t max_len);

// Basis of paths of length <= max_len modulo the ideal generated by cyclic derivatives.
JacobianBasis jacobian_basis(const Quiver& q, const Potential& s, std::size_t max_len);
// Dimension of the part with both endpoints outside block k.
std::size_t jacobian_dim_avoiding(const Quiver& q, const Potential& s, std::size_t max_len, std::size_t k);
// Dimension of the quotient by the Jacobian ideal, the idempotents and the span of commutators.
std::size_t deformation_space_truncated(const Quiver& q, const Potential& s, std::size_t max_len);

}  // namespace gsp::potential
