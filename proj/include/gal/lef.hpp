#pragma once

/// Constructive local embedding of the Laurent quotient group into a finite
/// one: pick a window bound n from the finite subset F, substitute the formal
/// 6n-th root of unity for t, and reduce by the half-window centre. The
/// checker verifies - rather than trusts - injectivity and multiplicativity.

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "quotient.hpp"
#include "rings.hpp"

namespace gal {

struct LefParams {
    i64 p = 2;
    i64 n = 1;  // window bound: exponents of magnitude >= n do not occur in F
    i64 m = 6;  // order of the formal root, 6n

    CentralReduction<Cyclo> reduction() const { return lef_reduction(n); }
};

/// Partial embedding: images of F, F.F and the identity under
/// g -> normal form of the entrywise substitution t^k -> x^(k mod 6n).
struct LefWitness {
    LefParams params;
    std::unordered_map<std::string, QuotientElem<Cyclo>> phi;  // keyed by source class

    const QuotientElem<Cyclo>& image_of(const QuotientElem<LaurentPoly>& g) const {
        auto it = phi.find(g.key());
        if (it == phi.end()) throw std::out_of_range("element missing from the embedding domain");
        return it->second;
    }
};

/// 1 + the largest |exponent| of t in any entry of any element of F u F.F.
/// Scanning the products too is strictly safe: multiplicativity quantifies
/// over products. Empty F gives 1.
inline i64 choose_degree_bound(const std::vector<QuotientElem<LaurentPoly>>& F) {
    i64 worst = 0;
    auto scan = [&](const QuotientElem<LaurentPoly>& g) {
        const auto& m = g.rep();
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j) worst = std::max(worst, m.at(i, j).max_abs_exponent());
    };
    for (const auto& f : F) scan(f);
    for (const auto& f1 : F)
        for (const auto& f2 : F) scan(f1 * f2);
    return worst + 1;
}

/// Image of one element under the witness parameters (no table lookup).
inline QuotientElem<Cyclo> lef_image(const LefParams& params, const QuotientElem<LaurentPoly>& g) {
    i64 m = params.m;
    ShapedMatrix<Cyclo> mat = g.rep().map_entries([m](const LaurentPoly& a) { return subst_cyclotomic(a, m); });
    return QuotientElem<Cyclo>(mat, params.reduction());
}

/// Builds the witness for F: domain = {e} u F u F.F. `forced_n` overrides the
/// computed window bound (negative-control hook; a too-small bound makes the
/// two central reductions disagree and the checker reports it).
inline LefWitness build_lef_witness(const std::vector<QuotientElem<LaurentPoly>>& F,
                                    std::optional<i64> forced_n = std::nullopt) {
    if (F.empty()) throw std::invalid_argument("build_lef_witness: F must not be empty");
    LefParams params;
    params.p = F[0].rep().corner().modulus();
    params.n = forced_n.value_or(choose_degree_bound(F));
    if (params.n < 1) throw std::invalid_argument("window bound must be >= 1");
    params.m = 6 * params.n;

    LefWitness w{params, {}};
    auto admit = [&](const QuotientElem<LaurentPoly>& g) { w.phi.emplace(g.key(), lef_image(params, g)); };
    admit(F[0].identity_like());
    for (const auto& f : F) admit(f);
    for (const auto& f1 : F)
        for (const auto& f2 : F) admit(f1 * f2);
    return w;
}

struct LefViolation {
    std::string kind;  // "injectivity" or "multiplicativity"
    std::string lhs;
    std::string rhs;
};

struct LefReport {
    i64 n = 0;
    i64 m = 0;
    size_t f_size = 0;
    size_t domain_size = 0;
    bool injective = false;
    std::vector<LefViolation> violations;

    bool pass() const { return injective && violations.empty(); }
};

/// Verifies the witness over F: phi injective on the domain, and
/// phi(f1 f2) = phi(f1) phi(f2) for all f1, f2 in F.
inline LefReport check_lef(const std::vector<QuotientElem<LaurentPoly>>& F, const LefWitness& w) {
    LefReport rep;
    rep.n = w.params.n;
    rep.m = w.params.m;
    rep.f_size = F.size();
    rep.domain_size = w.phi.size();

    std::unordered_map<std::string, std::string> image_to_source;
    rep.injective = true;
    for (const auto& [src, img] : w.phi) {
        auto [it, fresh] = image_to_source.emplace(img.key(), src);
        if (!fresh) {
            rep.injective = false;
            rep.violations.push_back({"injectivity", src, it->second});
        }
    }
    for (const auto& f1 : F)
        for (const auto& f2 : F) {
            QuotientElem<Cyclo> lhs = w.image_of(f1) * w.image_of(f2);
            const QuotientElem<Cyclo>& rhs = w.image_of(f1 * f2);
            if (!(lhs == rhs))
                rep.violations.push_back({"multiplicativity", f1.key(), f2.key()});
        }
    return rep;
}

}  // namespace gal
