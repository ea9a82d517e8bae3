#pragma once

#include <utility>
#include <vector>

#include "potential/path_algebra.hpp"

namespace gsp::potential {

struct Reduction {
  // The witness maps every arrow of the input quiver to an element over the same quiver read in
  // the new basis; in that basis the potential splits as s_triv + (s_rd on the remaining arrows).
  EMorphism witness;
  Potential transformed;                           // witness applied to the input potential
  std::vector<std::pair<int, int>> trivial_pairs;  // (x->y arrow, y->x arrow) with s_triv = sum a b
  Potential s_triv;
  species::GroupSpecies triv_species;
  species::GroupSpecies rd_species;
  Potential s_rd;
  std::vector<int> to_reduced;  // new-basis arrow -> arrow of rd_species, or -1 when trivial
  int passes = 0;
};

Reduction split_reduce(const Quiver& q, const Potential& s);

}  // namespace gsp::potential
