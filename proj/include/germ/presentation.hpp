#ifndef GERM_PRESENTATION_HPP
#define GERM_PRESENTATION_HPP

#include <vector>

#include "germ/invariants.hpp"

namespace germ {

// A function-germ as its irreducible decomposition: factor branches with
// multiplicities, plus the cached characteristic data and intersection matrix
// everything downstream consumes.
class GermPresentation {
  public:
    // Validates pairwise distinctness and fills the caches. Throws NotDistinct
    // for repeated branches and propagates InsufficientTruncation from the
    // invariant computations.
    static GermPresentation build(std::vector<GermFactor> factors);

    const std::vector<GermFactor>& factors() const { return factors_; }
    const std::vector<CharData>& char_data() const { return chars_; }
    // Symmetric with zero diagonal; entry (i, j) is the intersection number
    // of the i-th and j-th branches.
    const std::vector<std::vector<Integer>>& intersection_matrix() const { return inter_; }

    unsigned factor_count() const { return static_cast<unsigned>(factors_.size()); }

  private:
    std::vector<GermFactor> factors_;
    std::vector<CharData> chars_;
    std::vector<std::vector<Integer>> inter_;
};

ExtRational order_of_germ(const GermPresentation& g, const Arc& a);

}  // namespace germ

#endif
