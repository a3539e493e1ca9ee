#include "germ/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace germ {

std::string Witness::to_string() const {
    switch (kind) {
        case Kind::FactorCountMismatch: return "FactorCountMismatch";
        case Kind::MultiplicityMultisetMismatch: return "MultiplicityMultisetMismatch";
        case Kind::PuiseuxPairMismatch: return "PuiseuxPairMismatch(" + std::to_string(i) + ")";
        case Kind::IntersectionMatrixMismatch:
            return "IntersectionMatrixMismatch(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Kind::NoConsistentBijection: return "NoConsistentBijection";
    }
    return "?";
}

namespace {

struct FactorKey {
    unsigned mult;
    CharData cd;

    friend bool operator==(const FactorKey& a, const FactorKey& b) {
        return a.mult == b.mult && a.cd == b.cd;
    }
    friend bool operator<(const FactorKey& a, const FactorKey& b) {
        if (a.mult != b.mult) return a.mult < b.mult;
        return a.cd < b.cd;
    }
};

std::vector<FactorKey> factor_keys(const GermPresentation& g) {
    std::vector<FactorKey> keys;
    keys.reserve(g.factor_count());
    for (unsigned i = 0; i < g.factor_count(); ++i)
        keys.push_back({g.factors()[i].multiplicity, g.char_data()[i]});
    return keys;
}

std::string key_string(const FactorKey& k) {
    std::ostringstream os;
    os << "m*=" << k.mult << ";m=" << k.cd.m << ";pairs=";
    for (unsigned i = 0; i < k.cd.s(); ++i)
        os << "(" << k.cd.beta[i] << "," << k.cd.e[i] << ")";
    return os.str();
}

bool backtrack(const GermPresentation& f, const GermPresentation& g,
               const std::vector<FactorKey>& fk, const std::vector<FactorKey>& gk,
               std::vector<unsigned>& sigma, std::vector<bool>& used, unsigned i) {
    const unsigned r = f.factor_count();
    if (i == r) return true;
    for (unsigned j = 0; j < r; ++j) {
        if (used[j] || !(fk[i] == gk[j])) continue;
        bool ok = true;
        for (unsigned prev = 0; prev < i; ++prev) {
            if (f.intersection_matrix()[i][prev] != g.intersection_matrix()[j][sigma[prev]]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        sigma[i] = j;
        used[j] = true;
        if (backtrack(f, g, fk, gk, sigma, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

bool verify_certificate(const GermPresentation& f, const GermPresentation& g,
                        const std::vector<unsigned>& sigma) {
    const unsigned r = f.factor_count();
    if (sigma.size() != r)
        throw Error(ErrorCode::InvalidCertificate,
                    "sigma has " + std::to_string(sigma.size()) + " entries, expected " +
                        std::to_string(r));
    std::vector<bool> hit(g.factor_count(), false);
    for (unsigned j : sigma) {
        if (j >= g.factor_count())
            throw Error(ErrorCode::InvalidCertificate, "sigma index " + std::to_string(j) +
                                                           " out of range");
        if (hit[j]) throw Error(ErrorCode::InvalidCertificate, "sigma is not injective");
        hit[j] = true;
    }
    if (g.factor_count() != r) return false;
    for (unsigned i = 0; i < r; ++i) {
        if (f.factors()[i].multiplicity != g.factors()[sigma[i]].multiplicity) return false;
        if (!(f.char_data()[i] == g.char_data()[sigma[i]])) return false;
    }
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = i + 1; j < r; ++j)
            if (f.intersection_matrix()[i][j] != g.intersection_matrix()[sigma[i]][sigma[j]])
                return false;
    return true;
}

EquivalenceCertificate decide_equivalence(const GermPresentation& f, const GermPresentation& g) {
    EquivalenceCertificate cert;
    const unsigned r = f.factor_count();
    if (r != g.factor_count()) {
        cert.witness = Witness{Witness::Kind::FactorCountMismatch};
        return cert;
    }

    std::vector<unsigned> fm, gm;
    for (const auto& x : f.factors()) fm.push_back(x.multiplicity);
    for (const auto& x : g.factors()) gm.push_back(x.multiplicity);
    std::sort(fm.begin(), fm.end());
    std::sort(gm.begin(), gm.end());
    if (fm != gm) {
        cert.witness = Witness{Witness::Kind::MultiplicityMultisetMismatch};
        return cert;
    }

    std::vector<FactorKey> fk = factor_keys(f), gk = factor_keys(g);
    {
        std::vector<FactorKey> fs = fk, gs = gk;
        std::sort(fs.begin(), fs.end());
        std::sort(gs.begin(), gs.end());
        if (!(fs == gs)) {
            // first f-factor whose key is over-represented on the f side
            std::map<std::string, int> count;
            for (const auto& k : gk) ++count[key_string(k)];
            int bad = 0;
            for (unsigned i = 0; i < r; ++i) {
                if (--count[key_string(fk[i])] < 0) {
                    bad = static_cast<int>(i);
                    break;
                }
            }
            cert.witness = Witness{Witness::Kind::PuiseuxPairMismatch, bad};
            return cert;
        }
    }

    {
        std::vector<Integer> fe, ge;
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = i + 1; j < r; ++j) {
                fe.push_back(f.intersection_matrix()[i][j]);
                ge.push_back(g.intersection_matrix()[i][j]);
            }
        std::vector<Integer> fs = fe, gs = ge;
        std::sort(fs.begin(), fs.end());
        std::sort(gs.begin(), gs.end());
        if (fs != gs) {
            std::map<Integer, int> count;
            for (const auto& v : gs) ++count[v];
            int bi = 0, bj = 1;
            size_t idx = 0;
            for (unsigned i = 0; i < r && idx < fe.size(); ++i)
                for (unsigned j = i + 1; j < r; ++j, ++idx) {
                    if (--count[fe[idx]] < 0) {
                        bi = static_cast<int>(i);
                        bj = static_cast<int>(j);
                        i = r;  // break both loops
                        break;
                    }
                }
            cert.witness = Witness{Witness::Kind::IntersectionMatrixMismatch, bi, bj};
            return cert;
        }
    }

    std::vector<unsigned> sigma(r, 0);
    std::vector<bool> used(r, false);
    if (backtrack(f, g, fk, gk, sigma, used, 0)) {
        if (!verify_certificate(f, g, sigma))
            throw Error(ErrorCode::InternalError, "search produced an invalid bijection");
        cert.equivalent = true;
        cert.sigma = std::move(sigma);
        return cert;
    }
    cert.witness = Witness{Witness::Kind::NoConsistentBijection};
    return cert;
}

std::string invariant_signature(const GermPresentation& g) {
    const unsigned r = g.factor_count();
    std::vector<FactorKey> keys = factor_keys(g);
    const auto& inter = g.intersection_matrix();

    // initial colors from the sorted distinct keys
    std::vector<FactorKey> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<unsigned> color(r);
    for (unsigned i = 0; i < r; ++i)
        color[i] = static_cast<unsigned>(
            std::lower_bound(distinct.begin(), distinct.end(), keys[i]) - distinct.begin());

    // refine by sorted rows of (neighbor color, intersection entry)
    for (unsigned round = 0; round < r + 1; ++round) {
        std::vector<std::pair<unsigned, std::vector<std::pair<unsigned, Integer>>>> sig(r);
        for (unsigned i = 0; i < r; ++i) {
            sig[i].first = color[i];
            for (unsigned j = 0; j < r; ++j)
                if (j != i) sig[i].second.push_back({color[j], inter[i][j]});
            std::sort(sig[i].second.begin(), sig[i].second.end());
        }
        std::vector<std::pair<unsigned, std::vector<std::pair<unsigned, Integer>>>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<unsigned> next(r);
        for (unsigned i = 0; i < r; ++i)
            next[i] = static_cast<unsigned>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[i]) - uniq.begin());
        if (next == color) break;
        color = std::move(next);
    }

    // order factors by (color, key); resolve residual symmetry exhaustively,
    // choosing the lexicographically least flattened matrix
    std::vector<unsigned> order(r);
    for (unsigned i = 0; i < r; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](unsigned a, unsigned b) {
        if (color[a] != color[b]) return color[a] < color[b];
        return a < b;
    });

    // group boundaries of equal colors
    std::vector<std::pair<unsigned, unsigned>> blocks;
    for (unsigned i = 0; i < r;) {
        unsigned j = i;
        while (j < r && color[order[j]] == color[order[i]]) ++j;
        if (j - i > 1) blocks.push_back({i, j});
        i = j;
    }

    auto flat = [&](const std::vector<unsigned>& perm) {
        std::vector<Integer> out;
        out.reserve(r * r);
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < r; ++j) out.push_back(inter[perm[i]][perm[j]]);
        return out;
    };

    std::vector<unsigned> best = order;
    std::vector<Integer> best_flat = flat(order);
    std::vector<unsigned> cur = order;
    // iterate over the product of in-block permutations
    std::vector<std::vector<unsigned>> block_perms;
    unsigned long total = 1;
    for (auto [lo, hi] : blocks) total *= [&] {
        unsigned long fact = 1;
        for (unsigned k = 2; k <= hi - lo; ++k) fact *= k;
        return fact;
    }();
    if (total > 1000000)
        throw Error(ErrorCode::InternalError, "residual symmetry too large to canonicalize");
    std::function<void(size_t)> rec = [&](size_t bi) {
        if (bi == blocks.size()) {
            auto fl = flat(cur);
            if (fl < best_flat) {
                best_flat = fl;
                best = cur;
            }
            return;
        }
        auto [lo, hi] = blocks[bi];
        std::vector<unsigned> slice(cur.begin() + lo, cur.begin() + hi);
        std::sort(slice.begin(), slice.end());
        do {
            std::copy(slice.begin(), slice.end(), cur.begin() + lo);
            rec(bi + 1);
        } while (std::next_permutation(slice.begin(), slice.end()));
        std::sort(cur.begin() + lo, cur.begin() + hi);
    };
    rec(0);

    std::ostringstream os;
    for (unsigned i = 0; i < r; ++i) os << "[" << key_string(keys[best[i]]) << "]";
    os << "|";
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = i + 1; j < r; ++j) os << inter[best[i]][best[j]].get_str() << ",";
    return os.str();
}

}  // namespace germ
