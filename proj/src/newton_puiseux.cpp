#include "germ/newton_puiseux.hpp"

#include <algorithm>

namespace germ {

namespace {

// --- face-polynomial roots ---------------------------------------------------

std::optional<std::vector<Integer>> divisors_of(const Integer& n_in, size_t limit = 4000) {
    Integer n = abs(n_in);
    if (n == 0) return std::nullopt;
    std::vector<std::pair<Integer, unsigned>> fact;
    Integer m = n;
    for (unsigned long p = 2; p <= 1000000 && Integer(p) * Integer(p) <= m;
         p == 2 ? p = 3 : p += 2) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) fact.push_back({Integer(p), e});
    }
    if (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 0) return std::nullopt;
        fact.push_back({m, 1});
    }
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : fact) {
        size_t base = divs.size();
        Integer pk(1);
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t b = 0; b < base; ++b) {
                divs.push_back(divs[b] * pk);
                if (divs.size() > limit) return std::nullopt;
            }
        }
    }
    return divs;
}

Rational eval_rational_poly(const std::vector<Rational>& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// divide by (z - r), assuming r is a root
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& r) {
    std::vector<Rational> q(p.size() - 1);
    Rational carry = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * r;
    }
    return q;
}

// Extract every rational root of a rational-coefficient polynomial with
// multiplicities. Returns false when the divisor enumeration is infeasible.
bool rational_roots(std::vector<Rational>& work,
                    std::vector<std::pair<CycloNumber, unsigned>>& out) {
    while (!work.empty() && work.back().is_zero()) work.pop_back();
    if (work.size() <= 1) return true;
    Integer den(1);
    for (const auto& c : work) den = lcm(den, c.denominator());
    Integer a0 = (work.front() * Rational(den)).as_integer();
    Integer an = (work.back() * Rational(den)).as_integer();
    auto num_divs = divisors_of(a0);
    auto den_divs = divisors_of(an);
    if (!num_divs || !den_divs) return false;
    std::vector<Rational> candidates;
    for (const auto& p : *num_divs)
        for (const auto& q : *den_divs) {
            candidates.push_back(Rational(p, q));
            candidates.push_back(Rational(-p, q));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
        unsigned mult = 0;
        while (work.size() > 1 && eval_rational_poly(work, r).is_zero()) {
            work = deflate(work, r);
            ++mult;
        }
        if (mult) out.push_back({CycloNumber(r), mult});
    }
    return true;
}

[[noreturn]] void unsupported_face(const CPoly& phi) {
    throw Error(ErrorCode::UnsupportedExtension,
                "face polynomial " + cp_to_string(phi) +
                    " has roots outside the supported cyclotomic tower; supply the branch "
                    "data directly");
}

}  // namespace

std::vector<std::pair<CycloNumber, unsigned>> face_roots(const CPoly& phi, unsigned conductor_cap) {
    if (cp_deg(phi) < 1 || phi[0].is_zero())
        throw Error(ErrorCode::InternalError, "face polynomial must have a nonzero constant term");
    std::vector<std::pair<CycloNumber, unsigned>> out;
    CPoly work = phi;

    bool all_rational = std::all_of(work.begin(), work.end(),
                                    [](const CycloNumber& c) { return c.is_rational(); });
    if (all_rational) {
        std::vector<Rational> rw(work.size());
        for (size_t i = 0; i < work.size(); ++i) rw[i] = work[i].rational_value();
        if (rational_roots(rw, out)) {
            work.assign(rw.size(), CycloNumber(Rational(0)));
            for (size_t i = 0; i < rw.size(); ++i) work[i] = CycloNumber(rw[i]);
            cp_trim(work);
        }
    }

    int deg = cp_deg(work);
    if (deg <= 0) return out;
    if (deg == 1) {
        out.push_back({-(work[0] * work[1].inverse()), 1});
        return out;
    }

    // remaining factor of the shape lead * (z^k - c)^rho
    for (unsigned rho = 1; rho <= static_cast<unsigned>(deg); ++rho) {
        if (static_cast<unsigned>(deg) % rho != 0) continue;
        unsigned k = static_cast<unsigned>(deg) / rho;
        const CycloNumber& lead = work.back();
        CycloNumber c = -(work[static_cast<size_t>(k) * (rho - 1)] *
                          (lead * CycloNumber(Rational(static_cast<long>(rho)))).inverse());
        CPoly probe{-c};
        probe.resize(k + 1);
        probe[k] = CycloNumber(Rational(1));
        CPoly built{CycloNumber(Rational(1))};
        for (unsigned i = 0; i < rho; ++i) built = cp_mul(built, probe);
        built = cp_scale(built, lead);
        if (!(built == work)) continue;
        auto z0 = kth_root_in_tower(c, k, conductor_cap);
        if (!z0) unsupported_face(phi);
        for (unsigned i = 0; i < k; ++i) {
            CycloNumber root = *z0 * CycloNumber::root_of_unity(k, static_cast<long>(i));
            if (root.conductor() > conductor_cap) unsupported_face(phi);
            out.push_back({root, rho});
        }
        return out;
    }
    unsupported_face(phi);
}

namespace {

// --- sheet recursion ---------------------------------------------------------

long y_order_at_x0(const BivariatePoly& f) {
    long best = -1;
    for (const auto& [k, c] : f.terms())
        if (k.first == 0 && (best < 0 || static_cast<long>(k.second) < best))
            best = static_cast<long>(k.second);
    return best;  // -1 when x | f
}

PuiseuxSeries compose_step(long p, long q, const CycloNumber& c, const PuiseuxSeries& tail) {
    std::vector<PuiseuxSeries::Term> terms{{Rational(p, q), c}};
    for (const auto& t : tail.terms())
        terms.push_back({(Rational(p) + t.exp) / Rational(q), t.coeff});
    ExtRational trunc = tail.exact()
                            ? ExtRational::infinity()
                            : ExtRational((Rational(p) + tail.trunc().value()) / Rational(q));
    return PuiseuxSeries::make(std::move(terms), trunc);
}

// All Puiseux roots y(x) of F with positive valuation, each complete through
// x-exponent `budget` (or exact when the expansion terminates).
std::vector<PuiseuxSeries> np_sheets(const BivariatePoly& F, const Rational& budget, unsigned cap,
                                     unsigned depth) {
    if (depth > 4000) throw Error(ErrorCode::InternalError, "expansion recursion runaway");
    std::vector<PuiseuxSeries> res;
    BivariatePoly work = F;
    if (work.divisible_by_y()) {
        res.push_back(PuiseuxSeries::zero());
        work = work.div_y();
        if (work.divisible_by_y())
            throw Error(ErrorCode::InternalError, "repeated factor reached the sheet recursion");
    }
    long expected = y_order_at_x0(work);
    if (expected < 0)
        throw Error(ErrorCode::InternalError, "sheet recursion lost y-generality");

    for (const auto& edge : newton_polygon(work)) {
        if (edge.vertical) throw Error(ErrorCode::InternalError, "unexpected vertical edge");
        CPoly shifted(edge.face.begin() + edge.j_lo, edge.face.end());
        for (const auto& [c, mult] : face_roots(shifted, cap)) {
            std::vector<PuiseuxSeries> subs;
            Rational sub_budget = budget * Rational(edge.q) - Rational(edge.p);
            if (sub_budget.sign() > 0) {
                BivariatePoly G = work.newton_transform(static_cast<unsigned>(edge.q),
                                                        static_cast<unsigned>(edge.p), c);
                subs = np_sheets(G, sub_budget, cap, depth + 1);
                if (subs.size() != mult)
                    throw Error(ErrorCode::InternalError, "sheet count mismatch below a face root");
            } else {
                subs.assign(mult, PuiseuxSeries::make({}, ExtRational(Rational(0))));
            }
            for (const auto& s : subs) res.push_back(compose_step(edge.p, edge.q, c, s));
        }
    }
    // `expected` is the y-order of `work` at x = 0, which counts the positive
    // valuation roots of `work`; the y = 0 sheet was peeled off separately.
    size_t want = static_cast<size_t>(expected) + (F.divisible_by_y() ? 1 : 0);
    if (res.size() != want)
        throw Error(ErrorCode::InternalError, "sheet count does not match the y-order");
    return res;
}

struct RawSheet {
    PuiseuxSeries x_series;  // exponents in x
    unsigned part_mult;      // multiplicity of the squarefree layer
};

struct RawBranch {
    BranchGerm branch;       // psi truncated at the known bound (or exact)
    unsigned mult;
    ExtRational known;       // completeness bound of psi in t-exponents
};

// signalling type for "raise the working budget and retry"
struct NeedMoreBudget {};

unsigned lcm_of_denominators(const PuiseuxSeries& s) {
    Integer l(1);
    for (const auto& t : s.terms()) l = lcm(l, t.exp.denominator());
    if (!l.fits_ulong_p()) throw Error(ErrorCode::InternalError, "ramification overflow");
    return static_cast<unsigned>(l.get_ui());
}

// Groups sheets of one squarefree layer into conjugacy classes.
std::vector<RawBranch> group_sheets(std::vector<RawSheet> sheets, const Rational& budget_x) {
    std::vector<RawBranch> out;
    std::vector<bool> used(sheets.size(), false);
    for (size_t i = 0; i < sheets.size(); ++i) {
        if (used[i]) continue;
        const PuiseuxSeries& s = sheets[i].x_series;
        if (s.terms().empty() && !s.exact()) throw NeedMoreBudget{};
        unsigned m = lcm_of_denominators(s);
        PuiseuxSeries psi = reparameterize(s, m, 1);
        std::vector<size_t> group{i};
        for (size_t j = i + 1; j < sheets.size(); ++j) {
            if (used[j] || sheets[j].part_mult != sheets[i].part_mult) continue;
            const PuiseuxSeries& u = sheets[j].x_series;
            if (u.terms().empty() && !u.exact()) throw NeedMoreBudget{};
            if (lcm_of_denominators(u) != m) continue;
            PuiseuxSeries psi_u = reparameterize(u, m, 1);
            bool conj = false;
            for (unsigned l = 0; l < m && !conj; ++l) {
                Valuation v = valuation(sub(psi, scale_variable(psi_u, m, static_cast<long>(l))));
                if (v.is_infinite()) conj = true;
                if (v.is_above_trunc()) throw NeedMoreBudget{};
            }
            if (conj) {
                used[j] = true;
                group.push_back(j);
            }
        }
        used[i] = true;
        if (group.size() != m) throw NeedMoreBudget{};
        ExtRational known = psi.exact() ? ExtRational::infinity()
                                        : ExtRational(budget_x * Rational(static_cast<long>(m)));
        out.push_back({BranchGerm(m, psi), sheets[i].part_mult, known});
    }
    return out;
}

// Largest conjugate coincidence of branch i against branch j, in t_i units.
Rational max_pairwise_coincidence(const RawBranch& bi, const RawBranch& bj) {
    Rational best(0);
    for (unsigned l = 1; l <= bj.branch.m(); ++l) {
        PuiseuxSeries conj = reparameterize(bj.branch.conjugate_psi(static_cast<long>(l)),
                                            bi.branch.m(), bj.branch.m());
        Valuation v = valuation(sub(bi.branch.psi(), conj));
        if (v.is_above_trunc()) throw NeedMoreBudget{};
        if (v.is_infinite())
            throw Error(ErrorCode::InternalError, "distinct branches with infinite coincidence");
        best = std::max(best, v.value);
    }
    return best;
}

std::vector<Rational> shear_candidates() {
    std::vector<Rational> cands;
    for (long k = 1; k <= 30; ++k) {
        cands.push_back(Rational(k));
        cands.push_back(Rational(-k));
        cands.push_back(Rational(1, k + 1));
        cands.push_back(Rational(-1, k + 1));
    }
    return cands;
}

}  // namespace

ExpansionReport expand(const BivariatePoly& f, const ExpandOptions& opts) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "cannot expand the zero germ");
    if (!f.coeff(0, 0).is_zero())
        throw Error(ErrorCode::GermNotVanishing, "f(0,0) != 0: not a germ through the origin");

    ExpansionReport report;
    unsigned d = f.multiplicity_at_origin();
    report.multiplicity = d;

    // normalize so that the tangent cone avoids the y-axis: the coefficient of
    // y^d in the lowest form must not vanish
    BivariatePoly g = f;
    if (g.coeff(0, d).is_zero()) {
        bool fixed = false;
        for (const Rational& a : shear_candidates()) {
            BivariatePoly cand = f.compose_linear(CycloNumber(Rational(1)), CycloNumber(a),
                                                  CycloNumber(Rational(0)), CycloNumber(Rational(1)));
            if (!cand.coeff(0, d).is_zero()) {
                g = cand;
                report.applied_shear = {a, Rational(0)};
                fixed = true;
                break;
            }
        }
        if (!fixed)
            throw Error(ErrorCode::DegenerateAxis, "no candidate shear made the germ y-general");
    }

    auto parts = squarefree_decomposition_y(g);
    // layers not through the origin are unit factors of the germ
    std::erase_if(parts, [](const auto& kv) { return !kv.second.coeff(0, 0).is_zero(); });
    if (parts.empty())
        throw Error(ErrorCode::InternalError, "no branch through the origin after normalization");

    Rational budget = std::max(opts.target_trunc, Rational(4));
    for (int attempt = 0; attempt < 16; ++attempt, budget *= Rational(2)) {
        try {
            std::vector<RawSheet> sheets;
            for (const auto& [mult, part] : parts) {
                for (auto& s : np_sheets(part, budget, opts.conductor_cap, 0))
                    sheets.push_back({std::move(s), mult});
            }
            std::vector<RawBranch> raw = group_sheets(std::move(sheets), budget);

            // multiplicity bookkeeping: sum of mult * m over origin branches
            Integer total(0);
            for (const auto& b : raw)
                total += Integer(static_cast<long>(b.mult)) * Integer(static_cast<long>(b.branch.m()));
            if (total != Integer(static_cast<long>(d)))
                throw Error(ErrorCode::InternalError, "branch multiplicities do not add up to " +
                                                          std::to_string(d));

            // certified truncation: past the characteristic exponents and past
            // every pairwise coincidence
            std::vector<Rational> certified(raw.size());
            for (size_t i = 0; i < raw.size(); ++i) {
                CharData cd = characteristic_data(raw[i].branch);
                Rational need = opts.target_trunc;
                if (cd.s() > 0) need = std::max(need, Rational(cd.beta.back() + 1));
                for (size_t j = 0; j < raw.size(); ++j) {
                    if (i == j) continue;
                    need = std::max(need, max_pairwise_coincidence(raw[i], raw[j]) + Rational(1));
                }
                if (ExtRational(need) > raw[i].known) throw NeedMoreBudget{};
                certified[i] = need;
            }

            for (size_t i = 0; i < raw.size(); ++i) {
                PuiseuxSeries psi = raw[i].branch.psi().exact()
                                        ? raw[i].branch.psi()
                                        : raw[i].branch.psi().truncated(ExtRational(certified[i]));
                BranchGerm branch(raw[i].branch.m(), std::move(psi));
                // residual self-check: f(t^m, psi) vanishes past the certified bound
                Valuation res = valuation(g.eval_series(branch.m(), branch.psi()));
                if (res.is_finite() && res.value <= certified[i])
                    throw Error(ErrorCode::InternalError,
                                "residual valuation " + res.value.to_string() +
                                    " within certified bound " + certified[i].to_string());
                report.branches.push_back({std::move(branch), raw[i].mult, certified[i]});
            }
            // deterministic output order
            std::sort(report.branches.begin(), report.branches.end(),
                      [](const BranchEntry& a, const BranchEntry& b) {
                          if (a.branch.m() != b.branch.m()) return a.branch.m() < b.branch.m();
                          if (a.multiplicity != b.multiplicity)
                              return a.multiplicity < b.multiplicity;
                          return a.branch.psi().to_string() < b.branch.psi().to_string();
                      });
            return report;
        } catch (const NeedMoreBudget&) {
            report.branches.clear();
            continue;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::InsufficientTruncation) {
                report.branches.clear();
                continue;
            }
            throw;
        }
    }
    throw Error(ErrorCode::InsufficientTruncation,
                "expansion failed to separate branches within the budget ceiling");
}

GermPresentation presentation_from_report(const ExpansionReport& report) {
    std::vector<GermFactor> factors;
    factors.reserve(report.branches.size());
    for (const auto& b : report.branches) factors.push_back({b.branch, b.multiplicity});
    return GermPresentation::build(std::move(factors));
}

GermPresentation germ_from_branch_data(const std::vector<BranchSpec>& specs) {
    if (specs.empty()) throw Error(ErrorCode::InvalidInput, "no branch data supplied");
    std::vector<GermFactor> factors;
    for (const auto& spec : specs) {
        std::vector<PuiseuxSeries::Term> terms;
        for (const auto& [e, c] : spec.psi_terms) terms.push_back({Rational(e), c});
        PuiseuxSeries psi = PuiseuxSeries::make(std::move(terms), ExtRational::infinity());
        factors.push_back({BranchGerm(spec.m, std::move(psi)), spec.multiplicity});
    }
    return GermPresentation::build(std::move(factors));
}

}  // namespace germ
