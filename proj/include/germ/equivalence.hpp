#ifndef GERM_EQUIVALENCE_HPP
#define GERM_EQUIVALENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "germ/presentation.hpp"

namespace germ {

// Structured reason for a negative verdict, named after the first violated
// condition in the fixed order: factor count, multiplicity multiset, Puiseux
// pairs, intersection matrix, no consistent bijection.
struct Witness {
    enum class Kind {
        FactorCountMismatch,
        MultiplicityMultisetMismatch,
        PuiseuxPairMismatch,
        IntersectionMatrixMismatch,
        NoConsistentBijection,
    };
    Kind kind;
    int i = -1;  // factor index (PuiseuxPairMismatch) or pair (IntersectionMatrixMismatch)
    int j = -1;

    std::string to_string() const;
};

struct EquivalenceCertificate {
    bool equivalent = false;
    std::optional<std::vector<unsigned>> sigma;  // factor bijection f -> g
    std::optional<Witness> witness;
};

// Deterministic canonical form of the invariants: factors sorted by
// (multiplicity, characteristic data), refined by intersection rows to a fixed
// point, residual ties broken by exhaustive search for the lexicographically
// least matrix. Two presentations are equivalent iff their signatures match.
std::string invariant_signature(const GermPresentation& g);

// Decides bi-Lipschitz contact equivalence (equivalently right topological
// equivalence): a bijection matching multiplicities, Puiseux pairs and
// intersection numbers. The returned sigma is re-checked independently.
EquivalenceCertificate decide_equivalence(const GermPresentation& f, const GermPresentation& g);

// Checks the three conditions for an explicit bijection.
// Throws InvalidCertificate when sigma is not a permutation of the indices.
bool verify_certificate(const GermPresentation& f, const GermPresentation& g,
                        const std::vector<unsigned>& sigma);

}  // namespace germ

#endif
