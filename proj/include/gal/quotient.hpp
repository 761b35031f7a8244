#pragma once

/// Central quotients of the shaped matrix groups. A quotient is described by
/// a retraction rho on the coefficient ring whose kernel is the central
/// subgroup being divided out; the canonical coset representative keeps every
/// entry and replaces the corner by rho(corner). That is legitimate because
/// multiplying by a central e_{1,N}(c) changes exactly the corner (the (1,1)
/// entry is 1), so cosets are parametrised by the corner mod kernel.

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "matrix.hpp"
#include "rings.hpp"

namespace gal {

enum class ReductionMode {
    Identity,    // kernel {0}: the group itself
    GMode,       // F_p[t,t^-1]: kernel = span of t^n, n >= 0
    LefMode,     // F_p[x], x^m = 1: kernel = span of x^0 .. x^(split-1)
    KMode,       // Z[1/p]: kernel = Z, rho = fractional part
    FullCenter,  // kernel = whole ring, rho = 0
};

inline const char* reduction_mode_name(ReductionMode m) {
    switch (m) {
        case ReductionMode::Identity: return "identity";
        case ReductionMode::GMode: return "g";
        case ReductionMode::LefMode: return "lef";
        case ReductionMode::KMode: return "k";
        case ReductionMode::FullCenter: return "full-center";
    }
    return "?";
}

/// Retraction rho with rho(rho(x)) = rho(x) and rho(x + c) = rho(x) for c in
/// the kernel; x is in the kernel iff rho(x) = 0.
template <RingElem R>
class CentralReduction {
public:
    explicit CentralReduction(ReductionMode mode, i64 split = 0) : mode_(mode), split_(split) {
        if (mode == ReductionMode::LefMode && split < 1)
            throw std::invalid_argument("LEF reduction needs a positive window split");
    }

    ReductionMode mode() const { return mode_; }
    i64 split() const { return split_; }
    bool operator==(const CentralReduction& o) const { return mode_ == o.mode_ && split_ == o.split_; }

    R apply(const R& x) const {
        switch (mode_) {
            case ReductionMode::Identity:
                return x;
            case ReductionMode::FullCenter:
                return x.zero_like();
            case ReductionMode::GMode:
                if constexpr (std::is_same_v<R, LaurentPoly>) return x.negative_part();
                break;
            case ReductionMode::LefMode:
                if constexpr (std::is_same_v<R, Cyclo>) return x.keep_upper(split_);
                break;
            case ReductionMode::KMode:
                if constexpr (std::is_same_v<R, PAdicRat>) return x.fractional_part();
                break;
        }
        throw std::invalid_argument("reduction mode incompatible with ring type");
    }

    bool in_kernel(const R& x) const { return apply(x).is_zero(); }

    std::string key() const {
        std::string s = reduction_mode_name(mode_);
        if (mode_ == ReductionMode::LefMode) s += ":" + std::to_string(split_);
        return s;
    }

private:
    ReductionMode mode_;
    i64 split_;
};

inline CentralReduction<LaurentPoly> g_reduction() { return CentralReduction<LaurentPoly>(ReductionMode::GMode); }
inline CentralReduction<Cyclo> lef_reduction(i64 n) { return CentralReduction<Cyclo>(ReductionMode::LefMode, 3 * n); }
inline CentralReduction<PAdicRat> k_reduction() { return CentralReduction<PAdicRat>(ReductionMode::KMode); }

/// Coset of the central subgroup, stored as its corner-reduced normal form.
/// Equality of cosets is structural equality of normal forms.
template <RingElem R>
class QuotientElem {
public:
    QuotientElem(const ShapedMatrix<R>& rep, const CentralReduction<R>& red)
        : red_(red), rep_(rep.with_corner(red.apply(rep.corner()))) {}

    const ShapedMatrix<R>& rep() const { return rep_; }
    const CentralReduction<R>& reduction() const { return red_; }

    QuotientElem operator*(const QuotientElem& o) const {
        match(o);
        return QuotientElem(rep_ * o.rep_, red_);
    }
    QuotientElem inverse() const { return QuotientElem(rep_.inverse(), red_); }
    bool operator==(const QuotientElem& o) const { return red_ == o.red_ && rep_ == o.rep_; }
    bool is_identity() const { return rep_.is_identity(); }
    QuotientElem identity_like() const {
        return QuotientElem(ShapedMatrix<R>::identity(rep_.shape(), rep_.corner()), red_);
    }

    std::string key() const { return red_.key() + "|" + rep_.key(); }

private:
    void match(const QuotientElem& o) const {
        if (!(red_ == o.red_)) throw std::invalid_argument("reduction mismatch");
    }
    CentralReduction<R> red_;
    ShapedMatrix<R> rep_;
};

template <RingElem R>
QuotientElem<R> quotient_normal_form(const ShapedMatrix<R>& g, const CentralReduction<R>& red) {
    return QuotientElem<R>(g, red);
}

/// The canonical section: the normal-form representative itself.
template <RingElem R>
const ShapedMatrix<R>& section_lift(const QuotientElem<R>& g) {
    return g.rep();
}

/// Central coordinate g_z of a shaped matrix relative to a reduction:
/// g = e_{1,N}(g_z) * lift(class of g), so g_z = corner - rho(corner).
template <RingElem R>
R central_part(const ShapedMatrix<R>& g, const CentralReduction<R>& red) {
    return g.corner() - red.apply(g.corner());
}

/// 2-cocycle classifying the central extension: the central part of the
/// product of the canonical lifts. Normalized (alpha(e,.) = alpha(.,e) = 0)
/// because the section maps the identity coset to the identity matrix.
template <RingElem R>
R cocycle(const QuotientElem<R>& g, const QuotientElem<R>& h) {
    if (!(g.reduction() == h.reduction())) throw std::invalid_argument("reduction mismatch");
    return central_part(section_lift(g) * section_lift(h), g.reduction());
}

namespace detail {

inline QuotientElem<LaurentPoly> shift_by(const QuotientElem<LaurentPoly>& g, i64 exp) {
    if (g.reduction().mode() != ReductionMode::GMode)
        throw std::invalid_argument("shift endomorphism requires the G-mode quotient");
    const ShapedMatrix<LaurentPoly>& m = g.rep();
    int n = m.dim();
    LaurentPoly t = LaurentPoly::t_power(m.corner().modulus(), exp);
    std::vector<LaurentPoly> e;
    e.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e.push_back(i == 0 && j > 0 ? t * m.at(i, j) : m.at(i, j));
    return QuotientElem<LaurentPoly>(ShapedMatrix<LaurentPoly>(m.shape(), std::move(e)), g.reduction());
}

}  // namespace detail

/// Conjugation by diag(t, 1, ..., 1): multiplies the first-row entries by t.
/// Surjective but not injective on the quotient.
inline QuotientElem<LaurentPoly> shift_endo(const QuotientElem<LaurentPoly>& g) { return detail::shift_by(g, 1); }

/// Right inverse of shift_endo: shift_endo(shift_preimage(g)) == g.
inline QuotientElem<LaurentPoly> shift_preimage(const QuotientElem<LaurentPoly>& g) { return detail::shift_by(g, -1); }

/// Nontrivial element killed by shift_endo: the class of e_{1,N}(t^-1).
inline QuotientElem<LaurentPoly> kernel_witness(i64 p, const GroupShape& shape = g0_shape()) {
    LaurentPoly tinv = LaurentPoly::t_power(p, -1);
    return QuotientElem<LaurentPoly>(ShapedMatrix<LaurentPoly>::elementary(shape, 1, shape.dim(), tinv), g_reduction());
}

/// Ball of radius r in the marked group: all products of at most r factors
/// from gens and their inverses, deduplicated, in deterministic BFS order.
/// The identity is always element 0.
template <RingElem R>
std::vector<QuotientElem<R>> group_ball(const std::vector<QuotientElem<R>>& gens, int radius) {
    if (gens.empty()) throw std::invalid_argument("group_ball needs at least one generator");
    std::vector<QuotientElem<R>> step;
    for (const auto& g : gens) {
        step.push_back(g);
        step.push_back(g.inverse());
    }
    std::vector<QuotientElem<R>> ball{gens[0].identity_like()};
    std::unordered_set<std::string> seen{ball[0].key()};
    size_t lo = 0;
    for (int r = 0; r < radius; ++r) {
        size_t hi = ball.size();
        for (size_t i = lo; i < hi; ++i)
            for (const auto& s : step) {
                QuotientElem<R> next = ball[i] * s;
                if (seen.insert(next.key()).second) ball.push_back(std::move(next));
            }
        lo = hi;
    }
    return ball;
}

}  // namespace gal
