#include "germ/presentation.hpp"

namespace germ {

GermPresentation GermPresentation::build(std::vector<GermFactor> factors) {
    if (factors.empty())
        throw Error(ErrorCode::InvalidInput, "a germ presentation needs at least one factor");
    GermPresentation g;
    g.factors_ = std::move(factors);
    const size_t r = g.factors_.size();
    for (size_t i = 0; i < r; ++i) {
        if (g.factors_[i].multiplicity == 0)
            throw Error(ErrorCode::InvalidInput, "factor multiplicity must be positive");
        for (size_t j = i + 1; j < r; ++j) {
            auto same = same_branch(g.factors_[i].branch, g.factors_[j].branch);
            if (!same.has_value())
                throw Error(ErrorCode::InsufficientTruncation,
                            "factors " + std::to_string(i) + " and " + std::to_string(j) +
                                " agree within truncation");
            if (*same)
                throw Error(ErrorCode::NotDistinct,
                            "factors " + std::to_string(i) + " and " + std::to_string(j) +
                                " are the same branch");
        }
    }
    g.chars_.reserve(r);
    for (const auto& f : g.factors_) g.chars_.push_back(characteristic_data(f.branch));
    g.inter_.assign(r, std::vector<Integer>(r, Integer(0)));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j) {
            Integer v = intersection_number(g.factors_[i].branch, g.factors_[j].branch);
            g.inter_[i][j] = v;
            g.inter_[j][i] = v;
        }
    return g;
}

ExtRational order_of_germ(const GermPresentation& g, const Arc& a) {
    return order_of_germ(g.factors(), a);
}

}  // namespace germ
