#pragma once

/// Character machinery for the 8x8 group over Z[1/p]: characters of Z/qZ
/// approximating the p^k-th roots of unity, the summandwise homomorphisms
/// into twisted group algebras over Z/qZ, the averaged trace, the monomial
/// representation, and the resulting microstates.

#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "approx.hpp"
#include "quotient.hpp"
#include "rings.hpp"
#include "words.hpp"

namespace gal {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Character of Z/qZ: m -> exp(2*pi*i * c * m / q).
struct Character {
    i64 q = 1;
    i64 c = 0;

    std::complex<double> eval(const ZModQ& m) const {
        if (m.modulus() != q) throw std::invalid_argument("character modulus mismatch");
        i64 cm = detail::mod_floor(c * m.value(), q);
        return std::polar(1.0, kTwoPi * static_cast<double>(cm) / static_cast<double>(q));
    }
    bool trivial() const { return c == 0; }
};

/// Characters beta_1..beta_{p^k} of Z/qZ with
/// |beta_l(j/p^k mod q) - exp(2*pi*i*j*l/p^k)| < eps for 1 <= j,l <= p^k.
/// The defining inequalities are re-verified at construction.
class CharApproxSolution {
public:
    CharApproxSolution(i64 p, i64 k, double eps, i64 q, std::vector<i64> residues)
        : p_(p), k_(k), eps_(eps), q_(q), residues_(std::move(residues)) {
        pk_ = 1;
        for (i64 i = 0; i < k; ++i) pk_ *= p;
        if (static_cast<i64>(residues_.size()) != pk_) throw std::invalid_argument("need p^k residues");
        if (std::gcd(p_, q_) != 1) throw std::domain_error("q must be prime to p");
        for (i64 l = 1; l <= pk_; ++l)
            for (i64 j = 1; j <= pk_; ++j)
                if (!(deviation(j, l) < eps_))
                    throw std::domain_error("character residues fail the defining inequality");
    }

    i64 p() const { return p_; }
    i64 k() const { return k_; }
    i64 pk() const { return pk_; }
    i64 q() const { return q_; }
    double eps() const { return eps_; }
    const std::vector<i64>& residues() const { return residues_; }

    Character chi(i64 l) const {
        if (l < 1 || l > pk_) throw std::out_of_range("character index");
        return {q_, residues_[static_cast<size_t>(l - 1)]};
    }

    /// |beta_l(pi_q(j/p^k)) - exp(2*pi*i*j*l/p^k)| for any integer j.
    double deviation(i64 j, i64 l) const {
        std::complex<double> got = chi(l).eval(reduce_mod_q(PAdicRat(p_, j, k_), q_));
        i64 jl = detail::mod_floor(j * l, pk_);
        std::complex<double> want = std::polar(1.0, kTwoPi * static_cast<double>(jl) / static_cast<double>(pk_));
        return std::abs(got - want);
    }

    double worst_deviation() const {
        double worst = 0;
        for (i64 l = 1; l <= pk_; ++l)
            for (i64 j = 1; j <= pk_; ++j) worst = std::max(worst, deviation(j, l));
        return worst;
    }

    /// The same check over an arbitrary set of scaled numerators j (central
    /// values j/p^k occurring in an application).
    bool covers(const std::vector<i64>& numerators) const {
        for (i64 j : numerators)
            for (i64 l = 1; l <= pk_; ++l)
                if (!(deviation(j, l) < eps_)) return false;
        return true;
    }

private:
    i64 p_, k_, pk_ = 1;
    double eps_;
    i64 q_;
    std::vector<i64> residues_;
};

namespace detail {

/// Residues by the deterministic rounding rule c_l = round(l*q/p^k)*p^k mod q
/// (round half away from zero, in exact integer arithmetic).
inline std::vector<i64> char_residues_for(i64 q, i64 pk) {
    std::vector<i64> res;
    res.reserve(static_cast<size_t>(pk));
    for (i64 l = 1; l <= pk; ++l) {
        i64 rounded = (2 * l * q + pk) / (2 * pk);
        res.push_back(detail::mod_floor(rounded * pk, q));
    }
    return res;
}

inline bool char_residues_ok(i64 p, i64 k, double eps, i64 q, const std::vector<i64>& res) {
    try {
        CharApproxSolution sol(p, k, eps, q, res);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

}  // namespace detail

/// Smallest q >= 2 prime to p for which the rounding-rule residues satisfy
/// all p^k * p^k inequalities at eps. Terminates: q > pi * p^(2k) / eps
/// always suffices, since the phase error per unit j is at most pi/q.
inline CharApproxSolution char_approx(i64 p, i64 k, double eps) {
    if (!(eps > 0 && eps < 2)) throw std::invalid_argument("char_approx: need 0 < eps < 2");
    if (k < 0 || k > 30) throw std::invalid_argument("char_approx: unreasonable k");
    i64 pk = 1;
    for (i64 i = 0; i < k; ++i) pk *= p;
    double bound = 3.15 * static_cast<double>(pk) * static_cast<double>(pk) / eps + static_cast<double>(p) + 16;
    if (bound > 5e7) throw std::invalid_argument("char_approx: instance too large");
    for (i64 q = 2; q <= static_cast<i64>(bound); ++q) {
        if (std::gcd(p, q) != 1) continue;
        std::vector<i64> res = detail::char_residues_for(q, pk);
        if (detail::char_residues_ok(p, k, eps, q, res)) return CharApproxSolution(p, k, eps, q, std::move(res));
    }
    throw std::logic_error("char_approx: no q found below the guaranteed bound");
}

// ---------------------------------------------------------------------------
// Twisted group algebra elements (monomials)

/// phase * [base] in the twisted group algebra of the central quotient over
/// Z/qZ, tagged with its summand index l. Products stay monomial:
/// [g][h] = beta_l(alpha(g,h)) [gh].
struct TwistedElem {
    i64 l = 1;
    Character chi;
    std::complex<double> phase{1.0, 0.0};
    QuotientElem<ZModQ> base;

    TwistedElem(i64 summand, Character character, std::complex<double> ph, QuotientElem<ZModQ> b)
        : l(summand), chi(character), phase(ph), base(std::move(b)) {}

    TwistedElem operator*(const TwistedElem& o) const {
        if (l != o.l || chi.q != o.chi.q || chi.c != o.chi.c)
            throw std::invalid_argument("twisted product across different summands");
        std::complex<double> ph = phase * o.phase * chi.eval(cocycle(base, o.base));
        return TwistedElem(l, chi, ph, base * o.base);
    }

    /// Operator adjoint in the regular representation:
    /// (phase [g])* = conj(phase) conj(beta(alpha(g, g^-1))) [g^-1].
    TwistedElem adjoint() const {
        QuotientElem<ZModQ> binv = base.inverse();
        std::complex<double> ph = std::conj(phase) * std::conj(chi.eval(cocycle(base, binv)));
        return TwistedElem(l, chi, ph, std::move(binv));
    }

    bool approx_equal(const TwistedElem& o, double tol) const {
        return l == o.l && base == o.base && std::abs(phase - o.phase) <= tol;
    }
};

/// One twisted monomial per summand l = 1..p^k; the microstate value type for
/// the 8x8 group. The averaged trace tau is (1/p^k) * sum of
/// phase_l * [base_l = identity].
struct TwistedTuple {
    std::vector<TwistedElem> parts;

    TwistedTuple operator*(const TwistedTuple& o) const {
        if (parts.size() != o.parts.size()) throw std::invalid_argument("tuple size mismatch");
        TwistedTuple r;
        r.parts.reserve(parts.size());
        for (size_t i = 0; i < parts.size(); ++i) r.parts.push_back(parts[i] * o.parts[i]);
        return r;
    }
    TwistedTuple adjoint() const {
        TwistedTuple r;
        r.parts.reserve(parts.size());
        for (const auto& x : parts) r.parts.push_back(x.adjoint());
        return r;
    }
    TraceVal normalized_trace() const {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& x : parts)
            if (x.base.is_identity()) acc += x.phase;
        return TraceVal::approx(acc / static_cast<double>(parts.size()));
    }
};

inline std::complex<double> trace_tau(const TwistedTuple& x) { return x.normalized_trace().z; }

/// Summand-l image of a shaped matrix over Z[1/p]:
/// phase = beta_l(pi_q(corner)), base = class of the entrywise reduction in
/// the full-centre quotient over Z/qZ. An involution-preserving homomorphism.
inline TwistedElem phi_l(const ShapedMatrix<PAdicRat>& g, i64 l, const CharApproxSolution& sol) {
    i64 q = sol.q();
    Character chi = sol.chi(l);
    std::complex<double> phase = chi.eval(reduce_mod_q(g.corner(), q));
    ShapedMatrix<ZModQ> reduced = g.map_entries([q](const PAdicRat& a) { return reduce_mod_q(a, q); });
    return TwistedElem(l, chi, phase, QuotientElem<ZModQ>(reduced, CentralReduction<ZModQ>(ReductionMode::FullCenter)));
}

/// Direct sum over all summands.
inline TwistedTuple Phi(const ShapedMatrix<PAdicRat>& g, const CharApproxSolution& sol) {
    TwistedTuple t;
    t.parts.reserve(static_cast<size_t>(sol.pk()));
    for (i64 l = 1; l <= sol.pk(); ++l) t.parts.push_back(phi_l(g, l, sol));
    return t;
}

// ---------------------------------------------------------------------------
// Dense side: complex and monomial matrices

/// Minimal dense complex matrix; the independent evaluation route for toy
/// cross-checks.
struct CMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;

    static CMatrix identity(int n) {
        CMatrix m{n, std::vector<std::complex<double>>(static_cast<size_t>(n) * n, {0, 0})};
        for (int i = 0; i < n; ++i) m.a[static_cast<size_t>(i * n + i)] = {1, 0};
        return m;
    }
    std::complex<double>& at(int i, int j) { return a[static_cast<size_t>(i * n + j)]; }
    const std::complex<double>& at(int i, int j) const { return a[static_cast<size_t>(i * n + j)]; }

    CMatrix operator*(const CMatrix& o) const {
        if (n != o.n) throw std::invalid_argument("dimension mismatch");
        CMatrix r{n, std::vector<std::complex<double>>(a.size(), {0, 0})};
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                std::complex<double> v = at(i, k);
                if (v == std::complex<double>{0, 0}) continue;
                for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }
    CMatrix adjoint() const {
        CMatrix r{n, std::vector<std::complex<double>>(a.size())};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.at(i, j) = std::conj(at(j, i));
        return r;
    }
    TraceVal normalized_trace() const {
        std::complex<double> acc{0, 0};
        for (int i = 0; i < n; ++i) acc += at(i, i);
        return TraceVal::approx(acc / static_cast<double>(n));
    }

    /// Largest |entry| of M - I; 0 for the identity.
    double distance_to_identity() const {
        double worst = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                worst = std::max(worst, std::abs(at(i, j) - std::complex<double>(i == j ? 1 : 0, 0)));
        return worst;
    }
};

/// Unitary with exactly one unit-modulus entry per row and column:
/// basis vector j goes to phase[j] * basis vector perm[j].
struct MonomialMatrix {
    DensePerm perm;
    std::vector<std::complex<double>> phase;

    MonomialMatrix(DensePerm p, std::vector<std::complex<double>> ph) : perm(std::move(p)), phase(std::move(ph)) {
        if (phase.size() != perm.img.size()) throw std::invalid_argument("phase count mismatch");
    }
    static MonomialMatrix identity(int n) {
        return MonomialMatrix(DensePerm::identity(n), std::vector<std::complex<double>>(static_cast<size_t>(n), {1, 0}));
    }

    int dim() const { return perm.degree(); }

    MonomialMatrix operator*(const MonomialMatrix& o) const {
        std::vector<std::complex<double>> ph(phase.size());
        for (size_t j = 0; j < ph.size(); ++j) ph[j] = o.phase[j] * phase[static_cast<size_t>(o.perm.img[j])];
        return MonomialMatrix(perm * o.perm, std::move(ph));
    }
    MonomialMatrix adjoint() const {
        DensePerm inv = perm.inverse();
        std::vector<std::complex<double>> ph(phase.size());
        for (size_t j = 0; j < ph.size(); ++j) ph[static_cast<size_t>(perm.img[j])] = std::conj(phase[j]);
        return MonomialMatrix(std::move(inv), std::move(ph));
    }
    TraceVal normalized_trace() const {
        std::complex<double> acc{0, 0};
        for (size_t j = 0; j < phase.size(); ++j)
            if (perm.img[j] == static_cast<int>(j)) acc += phase[j];
        return TraceVal::approx(acc / static_cast<double>(dim()));
    }
    CMatrix to_dense() const {
        CMatrix m{dim(), std::vector<std::complex<double>>(static_cast<size_t>(dim()) * dim(), {0, 0})};
        for (int j = 0; j < dim(); ++j) m.at(perm.img[static_cast<size_t>(j)], j) = phase[static_cast<size_t>(j)];
        return m;
    }
};

/// Table of a finite central-quotient group small enough to enumerate.
struct ToyTable {
    std::vector<QuotientElem<ZModQ>> elems;
    std::unordered_map<std::string, int> index;

    explicit ToyTable(std::vector<QuotientElem<ZModQ>> es) : elems(std::move(es)) {
        for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i].key(), static_cast<int>(i));
        if (index.size() != elems.size()) throw std::invalid_argument("duplicate elements in toy table");
    }
    int find(const QuotientElem<ZModQ>& g) const {
        auto it = index.find(g.key());
        if (it == index.end()) throw std::out_of_range("element not in toy table");
        return it->second;
    }
    size_t size() const { return elems.size(); }
};

/// Regular representation of a twisted tuple on l2(group) tensor C^L, with
/// the summand index riding along as the tensor coordinate:
///   (x_1..x_L) : basis(h, j) -> phase_j * beta_j(alpha(base_j, h)) * basis(base_j h, j).
inline MonomialMatrix dense_regular_rep(const TwistedTuple& x, const ToyTable& table) {
    int L = static_cast<int>(x.parts.size());
    if (L == 0) throw std::invalid_argument("empty tuple");
    size_t dim = table.size() * static_cast<size_t>(L);
    if (dim > 4096) throw BudgetExceeded("toy group too large for the dense representation");
    std::vector<int> img(dim);
    std::vector<std::complex<double>> ph(dim);
    for (size_t h = 0; h < table.size(); ++h)
        for (int j = 0; j < L; ++j) {
            const TwistedElem& xj = x.parts[static_cast<size_t>(j)];
            int gh = table.find(xj.base * table.elems[h]);
            size_t src = h * static_cast<size_t>(L) + static_cast<size_t>(j);
            img[src] = gh * L + j;
            ph[src] = xj.phase * xj.chi.eval(cocycle(xj.base, table.elems[h]));
        }
    return MonomialMatrix(DensePerm(std::move(img)), std::move(ph));
}

// ---------------------------------------------------------------------------
// Microstates for the 8x8 quotient group

struct KMicrostates {
    i64 k = 0;                       // highest power of p in a ball denominator
    i64 q = 0;                       // chosen modulus
    std::vector<i64> residues;       // character residues actually used
    std::uint64_t ball_products = 0;  // distinct product matrices scanned
    MicrostateReport report;
};

/// Builds microstates for the central quotient over Z[1/p] from a marked set:
/// scans all products of length <= n for the denominator bound k, then grows
/// q until (a) the character inequalities hold, (b) they also hold at every
/// central value occurring among the scanned products, and (c) reduction mod
/// q is injective on the scanned products, both as matrices and as central-
/// quotient classes. `trivial_characters` sabotages the characters afterwards
/// (negative control: the check must then fail).
inline KMicrostates build_k_microstates(const std::vector<QuotientElem<PAdicRat>>& S, int n, double eps,
                                        std::uint64_t budget = 1000000, bool trivial_characters = false) {
    if (S.empty()) throw std::invalid_argument("empty marked set");
    if (!(eps > 0)) throw std::invalid_argument("need eps > 0");
    i64 p = S[0].rep().corner().prime();
    count_words(static_cast<int>(S.size()), n, budget);

    std::vector<ShapedMatrix<PAdicRat>> letters;
    for (const auto& s : S) {
        letters.push_back(section_lift(s));
        letters.push_back(letters.back().inverse());
    }

    // every product of length <= n, deduplicated
    std::vector<ShapedMatrix<PAdicRat>> products;
    std::unordered_map<std::string, size_t> seen;
    ShapedMatrix<PAdicRat> ident = ShapedMatrix<PAdicRat>::identity(letters[0].shape(), PAdicRat(p, 0));
    std::function<void(const ShapedMatrix<PAdicRat>&, int)> walk = [&](const ShapedMatrix<PAdicRat>& acc, int depth) {
        if (seen.emplace(acc.key(), products.size()).second) products.push_back(acc);
        if (depth == n) return;
        for (const auto& letter : letters) walk(acc * letter, depth + 1);
    };
    walk(ident, 0);

    i64 k = 0;
    for (const auto& m : products) k = std::max(k, m.corner().exp());

    std::vector<i64> corner_numerators;
    for (const auto& m : products) corner_numerators.push_back(m.corner().numerator_at(k));

    auto injective_at = [&](i64 q) {
        std::unordered_map<std::string, std::string> mat_img, cls_img;
        for (const auto& m : products) {
            ShapedMatrix<ZModQ> r = m.map_entries([q](const PAdicRat& a) { return reduce_mod_q(a, q); });
            auto [mi, fresh_m] = mat_img.emplace(r.key(), m.key());
            if (!fresh_m && mi->second != m.key()) return false;
            std::string cls_src = m.with_corner(PAdicRat(p, 0)).key();
            std::string cls_dst = r.with_corner(ZModQ(q, 0)).key();
            auto [ci, fresh_c] = cls_img.emplace(cls_dst, cls_src);
            if (!fresh_c && ci->second != cls_src) return false;
        }
        return true;
    };

    CharApproxSolution base = char_approx(p, k, eps);
    i64 pk = base.pk();
    std::optional<CharApproxSolution> chosen;
    for (i64 q = base.q(); q < base.q() + 50000000; ++q) {
        if (std::gcd(p, q) != 1) continue;
        std::vector<i64> res = detail::char_residues_for(q, pk);
        if (!detail::char_residues_ok(p, k, eps, q, res)) continue;
        CharApproxSolution cand(p, k, eps, q, res);
        if (!cand.covers(corner_numerators)) continue;
        if (!injective_at(q)) continue;
        chosen = std::move(cand);
        break;
    }
    if (!chosen) throw std::logic_error("no usable q found");

    KMicrostates out;
    out.k = k;
    out.q = chosen->q();
    out.residues = chosen->residues();
    out.ball_products = products.size();

    if (trivial_characters) {
        out.residues.assign(static_cast<size_t>(pk), 0);
    }

    std::vector<TwistedTuple> assignment;
    for (const auto& s : S) {
        TwistedTuple t;
        for (i64 l = 1; l <= pk; ++l) {
            Character chi{out.q, out.residues[static_cast<size_t>(l - 1)]};
            const ShapedMatrix<PAdicRat>& g = section_lift(s);
            std::complex<double> phase = chi.eval(reduce_mod_q(g.corner(), out.q));
            i64 q = out.q;
            ShapedMatrix<ZModQ> reduced = g.map_entries([q](const PAdicRat& a) { return reduce_mod_q(a, q); });
            t.parts.push_back(
                TwistedElem(l, chi, phase, QuotientElem<ZModQ>(reduced, CentralReduction<ZModQ>(ReductionMode::FullCenter))));
        }
        assignment.push_back(std::move(t));
    }

    QuotientElem<PAdicRat> id = S[0].identity_like();
    auto trivial = [&S, id](const Word& w) { return eval_word(w, S, id).is_identity(); };
    out.report = microstate_check(assignment, n, eps, trivial, budget);
    return out;
}

}  // namespace gal
