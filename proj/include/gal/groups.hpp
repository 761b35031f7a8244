#pragma once

/// The two groups under study and the toy used to cross-validate oracles:
///   G = G0(F_p[t,t^-1]) / C   with the 5x5 shape (1,3,1),
///   K = K0(Z[1/p]) / Z        with the 8x8 shape (1,3,3,1),
///   H = 3x3 unitriangular over Z/q (Heisenberg), small enough to enumerate.
/// Default marked sets are fixed here (and shipped as data files); the
/// constructions make no claim that they generate.

#include <array>
#include <string>
#include <vector>

#include "literals.hpp"
#include "quotient.hpp"

namespace gal {

inline const std::vector<std::string>& g_default_marked_literals() {
    static const std::vector<std::string> lines = {
        "e[1,2](1)", "e[1,5](t^-1)", "e[2,5](1)", "e[1,2](t)", "e[2,5](t^-1)", "e[2,3](1)", "e[3,4](1)",
    };
    return lines;
}

/// The K defaults carry a 1/p entry, so they depend on the prime.
inline std::vector<std::string> k_default_marked_literals(i64 p) {
    std::string inv = "1/" + std::to_string(p);
    return {
        "e[1,8](" + inv + ")", "e[1,2](1)", "e[2,5](1)", "e[5,8](1)", "e[2,8](" + inv + ")", "e[2,3](1)",
    };
}

inline std::vector<QuotientElem<LaurentPoly>> g_marked_set(i64 p, const std::vector<std::string>& literals) {
    std::vector<QuotientElem<LaurentPoly>> out;
    for (const std::string& s : literals) out.push_back(parse_g_element(p, s));
    return out;
}

inline std::vector<QuotientElem<PAdicRat>> k_marked_set(i64 p, const std::vector<std::string>& literals) {
    std::vector<QuotientElem<PAdicRat>> out;
    for (const std::string& s : literals) out.push_back(parse_k_element(p, s));
    return out;
}

inline std::vector<QuotientElem<LaurentPoly>> g_default_marked_set(i64 p) {
    return g_marked_set(p, g_default_marked_literals());
}

inline std::vector<QuotientElem<PAdicRat>> k_default_marked_set(i64 p) {
    return k_marked_set(p, k_default_marked_literals(p));
}

// ---------------------------------------------------------------------------
// Heisenberg toy

/// All q^3 unitriangular 3x3 matrices over Z/q, as elements of the group
/// itself (identity reduction). Element 0 is the identity.
inline std::vector<QuotientElem<ZModQ>> enumerate_heisenberg(i64 q) {
    GroupShape shape = heis_shape();
    CentralReduction<ZModQ> red(ReductionMode::Identity);
    ZModQ zero(q, 0), one(q, 1);
    std::vector<QuotientElem<ZModQ>> out;
    for (i64 a = 0; a < q; ++a)
        for (i64 b = 0; b < q; ++b)
            for (i64 c = 0; c < q; ++c) {
                std::vector<ZModQ> e = {one, ZModQ(q, a), ZModQ(q, c), zero, one, ZModQ(q, b), zero, zero, one};
                out.push_back(QuotientElem<ZModQ>(ShapedMatrix<ZModQ>(shape, e), red));
            }
    return out;
}

/// The q^2 classes of the Heisenberg group modulo its full centre.
inline std::vector<QuotientElem<ZModQ>> enumerate_heis_quotient(i64 q) {
    GroupShape shape = heis_shape();
    CentralReduction<ZModQ> red(ReductionMode::FullCenter);
    ZModQ zero(q, 0), one(q, 1);
    std::vector<QuotientElem<ZModQ>> out;
    for (i64 a = 0; a < q; ++a)
        for (i64 b = 0; b < q; ++b) {
            std::vector<ZModQ> e = {one, ZModQ(q, a), zero, zero, one, ZModQ(q, b), zero, zero, one};
            out.push_back(QuotientElem<ZModQ>(ShapedMatrix<ZModQ>(shape, e), red));
        }
    return out;
}

/// Generators x = e12(1), y = e23(1), z = e13(1) of the Heisenberg group,
/// under the given reduction.
inline std::vector<QuotientElem<ZModQ>> heis_generators(i64 q, ReductionMode mode) {
    GroupShape shape = heis_shape();
    CentralReduction<ZModQ> red(mode);
    ZModQ one(q, 1);
    return {
        QuotientElem<ZModQ>(ShapedMatrix<ZModQ>::elementary(shape, 1, 2, one), red),
        QuotientElem<ZModQ>(ShapedMatrix<ZModQ>::elementary(shape, 2, 3, one), red),
        QuotientElem<ZModQ>(ShapedMatrix<ZModQ>::elementary(shape, 1, 3, one), red),
    };
}

}  // namespace gal
