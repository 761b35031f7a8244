#pragma once

/// Seeded random elements of the rings and shaped groups, for randomized law
/// checks. Shaped matrices are built as products of random elementary
/// transvections, which lands inside the shape by construction.

#include <functional>
#include <random>
#include <vector>

#include "matrix.hpp"
#include "quotient.hpp"
#include "rings.hpp"

namespace gal {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    i64 below(i64 n) { return static_cast<i64>(eng_() % static_cast<std::uint64_t>(n)); }
    i64 range(i64 lo, i64 hi) { return lo + below(hi - lo + 1); }  // inclusive
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

inline Fp random_fp(Rng& rng, i64 p) { return Fp(p, rng.below(p)); }

inline LaurentPoly random_laurent(Rng& rng, i64 p, i64 max_abs_exp = 3, int max_terms = 3) {
    LaurentPoly a(p);
    int terms = static_cast<int>(rng.below(max_terms + 1));
    for (int i = 0; i < terms; ++i)
        a = a + LaurentPoly::t_power(p, rng.range(-max_abs_exp, max_abs_exp), rng.below(p));
    return a;
}

inline Cyclo random_cyclo(Rng& rng, i64 p, i64 m) {
    Cyclo a(p, m);
    int terms = static_cast<int>(rng.below(4));
    for (int i = 0; i < terms; ++i) a.add_term(rng.below(m), rng.below(p));
    return a;
}

inline ZModQ random_zmodq(Rng& rng, i64 q) { return ZModQ(q, rng.below(q)); }

inline PAdicRat random_padic(Rng& rng, i64 p, i64 max_num = 8, i64 max_exp = 2) {
    return PAdicRat(p, rng.range(-max_num, max_num), rng.below(max_exp + 1));
}

/// Product of `steps` random elementary matrices in the shape.
template <RingElem R>
ShapedMatrix<R> random_shaped(Rng& rng, const GroupShape& shape, const std::function<R(Rng&)>& sample,
                              int steps = 8) {
    R proto = sample(rng).zero_like();
    ShapedMatrix<R> acc = ShapedMatrix<R>::identity(shape, proto);
    int n = shape.dim();
    for (int s = 0; s < steps; ++s) {
        int i = static_cast<int>(rng.below(n - 1)) + 1;
        int j = static_cast<int>(rng.range(i + 1, n));
        acc = acc * ShapedMatrix<R>::elementary(shape, i, j, sample(rng));
    }
    return acc;
}

template <RingElem R>
QuotientElem<R> random_quotient(Rng& rng, const GroupShape& shape, const CentralReduction<R>& red,
                                const std::function<R(Rng&)>& sample, int steps = 8) {
    return QuotientElem<R>(random_shaped<R>(rng, shape, sample, steps), red);
}

}  // namespace gal
