#ifndef GERM_NEWTON_PUISEUX_HPP
#define GERM_NEWTON_PUISEUX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "germ/bivariate.hpp"
#include "germ/presentation.hpp"

namespace germ {

struct ExpandOptions {
    // Requested completeness of each branch series, in exponents of the branch
    // parameter t. The engine always continues past the last characteristic
    // exponent and past all pairwise branch coincidences, whichever is larger.
    Rational target_trunc = Rational(12);
    // Largest cyclotomic conductor the coefficient tower may reach.
    unsigned conductor_cap = 120;
};

struct BranchEntry {
    BranchGerm branch;
    unsigned multiplicity;     // exponent of the factor in the decomposition
    Rational certified_trunc;  // branch series certified complete through here
};

// Result of a Newton-Puiseux expansion: one entry per conjugacy class of
// branches, plus the coordinate change that was applied when the input was
// degenerate with respect to y. The recorded pair (a, b) means the expansion
// ran on f(x + a*y, y + b*x); b is always 0 here.
struct ExpansionReport {
    std::vector<BranchEntry> branches;
    std::optional<std::pair<Rational, Rational>> applied_shear;
    unsigned multiplicity = 0;  // multiplicity of the germ at the origin
};

// Expands a germ with f(0,0) = 0, f != 0 into its branches. Face-polynomial
// roots must stay inside the cyclotomic tower (rational roots of general
// faces, k-th roots of rational-times-root-of-unity constants); anything else
// raises UnsupportedExtension with a pointer at the branch-data input path.
ExpansionReport expand(const BivariatePoly& f, const ExpandOptions& opts = {});

GermPresentation presentation_from_report(const ExpansionReport& report);

// Direct branch-data input, bypassing the expansion: psi is exact, all
// omitted terms zero.
struct BranchSpec {
    unsigned m;
    std::vector<std::pair<long long, CycloNumber>> psi_terms;  // exponent -> coefficient
    unsigned multiplicity;
};

GermPresentation germ_from_branch_data(const std::vector<BranchSpec>& specs);

// All nonzero roots (with multiplicities) of a face polynomial over the
// supported tower. Exposed for the expansion tests.
std::vector<std::pair<CycloNumber, unsigned>> face_roots(const CPoly& phi, unsigned conductor_cap);

}  // namespace germ

#endif
