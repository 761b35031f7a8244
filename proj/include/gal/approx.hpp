#pragma once

/// Finite approximations: permutation actions (dense, or lazy left
/// translation on an unenumerated finite group), the sofic-definition
/// checker, and the (eps,n)-microstate verifier. Ratios and lazy traces are
/// exact rationals; only genuinely complex traces go through doubles.

#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "lef.hpp"
#include "words.hpp"

namespace gal {

/// Exact nonnegative rational, reduced, den > 0.
struct Ratio {
    i64 num = 0;
    i64 den = 1;

    Ratio() = default;
    Ratio(i64 n, i64 d) : num(n), den(d) {
        if (den <= 0) throw std::invalid_argument("ratio denominator must be positive");
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    static Ratio zero() { return Ratio(0, 1); }
    static Ratio one() { return Ratio(1, 1); }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Ratio& o) const { return num == o.num && den == o.den; }
    bool is_zero() const { return num == 0; }
    bool is_one() const { return num == den; }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Explicit permutation of {0..m-1}, acting as i -> img[i].
struct DensePerm {
    std::vector<int> img;

    explicit DensePerm(std::vector<int> v) : img(std::move(v)) {
        std::vector<bool> hit(img.size(), false);
        for (int i : img) {
            if (i < 0 || static_cast<size_t>(i) >= img.size() || hit[static_cast<size_t>(i)])
                throw std::invalid_argument("not a permutation");
            hit[static_cast<size_t>(i)] = true;
        }
    }
    static DensePerm identity(int m) {
        std::vector<int> v(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = i;
        return DensePerm(std::move(v));
    }

    int degree() const { return static_cast<int>(img.size()); }
    DensePerm operator*(const DensePerm& o) const {  // (a*b)(x) = a(b(x))
        if (img.size() != o.img.size()) throw std::invalid_argument("permutation degree mismatch");
        std::vector<int> v(img.size());
        for (size_t i = 0; i < img.size(); ++i) v[i] = img[static_cast<size_t>(o.img[i])];
        return DensePerm(std::move(v));
    }
    DensePerm inverse() const {
        std::vector<int> v(img.size());
        for (size_t i = 0; i < img.size(); ++i) v[static_cast<size_t>(img[i])] = static_cast<int>(i);
        return DensePerm(std::move(v));
    }
    bool is_identity() const {
        for (size_t i = 0; i < img.size(); ++i)
            if (img[i] != static_cast<int>(i)) return false;
        return true;
    }
    Ratio fixed_ratio() const {
        i64 fixed = 0;
        for (size_t i = 0; i < img.size(); ++i)
            if (img[i] == static_cast<int>(i)) ++fixed;
        return Ratio(fixed, static_cast<i64>(img.size()));
    }
};

/// Permutation action: either a dense permutation or left translation by an
/// element of a finite group too large to enumerate. Translation by a
/// non-identity element is fixed-point free, so the lazy fixed-point ratio is
/// exactly 1 or 0.
template <typename E>
class PermAction {
public:
    explicit PermAction(DensePerm p) : v_(std::move(p)) {}
    explicit PermAction(E translation) : v_(std::move(translation)) {}

    bool lazy() const { return std::holds_alternative<E>(v_); }
    const E& element() const { return std::get<E>(v_); }
    const DensePerm& perm() const { return std::get<DensePerm>(v_); }

    PermAction operator*(const PermAction& o) const {
        if (lazy() != o.lazy()) throw std::invalid_argument("cannot mix dense and lazy actions");
        if (lazy()) return PermAction(element() * o.element());
        return PermAction(perm() * o.perm());
    }
    PermAction inverse() const { return lazy() ? PermAction(element().inverse()) : PermAction(perm().inverse()); }
    PermAction adjoint() const { return inverse(); }
    bool is_identity() const { return lazy() ? element().is_identity() : perm().is_identity(); }

private:
    std::variant<DensePerm, E> v_;
};

template <typename E>
Ratio fixed_point_ratio(const PermAction<E>& a) {
    if (a.lazy()) return a.element().is_identity() ? Ratio::one() : Ratio::zero();
    return a.perm().fixed_ratio();
}

// ---------------------------------------------------------------------------
// Sofic checker

struct SoficPair {
    std::string g, h;
    Ratio ratio;  // fixed-point ratio of phi(g) phi(h) phi(gh)^-1
    bool ok;
};
struct SoficElem {
    std::string g;
    Ratio ratio;  // fixed-point ratio of phi(g)
    bool ok;
};

struct SoficReport {
    double eps = 0;
    bool identity_ok = false;
    std::vector<SoficPair> pairs;
    std::vector<SoficElem> elems;
    size_t pair_failures = 0;
    size_t elem_failures = 0;

    bool pass() const { return identity_ok && pair_failures == 0 && elem_failures == 0; }
};

/// Definition of soficity on a finite subset, in normalized form:
///   (i) fixed-ratio of phi(g)phi(h)phi(gh)^-1 >= 1 - eps for g,h in F,
///  (ii) phi(e) is the identity action,
/// (iii) fixed-ratio of phi(g) <= eps for identity != g in F.
/// phi must cover F and the products gh (witness domains do). E is the
/// element type of the approximated group, A that of the acting one.
template <typename E, typename A>
SoficReport sofic_check(const std::vector<E>& F,
                        const std::function<PermAction<A>(const E&)>& phi, double eps) {
    SoficReport rep;
    rep.eps = eps;
    bool have_identity = false;
    for (const E& g : F) {
        if (g.is_identity()) {
            have_identity = true;
            rep.identity_ok = phi(g).is_identity();
        } else {
            Ratio r = fixed_point_ratio(phi(g));
            bool ok = static_cast<double>(r.num) <= eps * static_cast<double>(r.den);
            rep.elem_failures += ok ? 0 : 1;
            rep.elems.push_back({g.key(), r, ok});
        }
    }
    if (!have_identity) throw std::invalid_argument("sofic_check: F must contain the identity");
    for (const E& g : F)
        for (const E& h : F) {
            Ratio r = fixed_point_ratio(phi(g) * phi(h) * phi(g * h).inverse());
            bool ok = static_cast<double>(r.num) >= (1.0 - eps) * static_cast<double>(r.den);
            rep.pair_failures += ok ? 0 : 1;
            rep.pairs.push_back({g.key(), h.key(), r, ok});
        }
    return rep;
}

/// Left regular representation of the finite target group, taken lazily:
/// g -> translation by its image under the embedding.
inline std::function<PermAction<QuotientElem<Cyclo>>(const QuotientElem<LaurentPoly>&)>
lef_to_sofic(const LefWitness& w) {
    return [&w](const QuotientElem<LaurentPoly>& g) { return PermAction<QuotientElem<Cyclo>>(w.image_of(g)); };
}

// ---------------------------------------------------------------------------
// Microstate verifier

/// Normalized trace of a finite-dimensional unitary: exact rational where the
/// model permits (permutation actions, lazy translations), complex otherwise.
struct TraceVal {
    bool exact = false;
    Ratio r;
    std::complex<double> z;

    static TraceVal exactly(Ratio v) { return {true, v, {v.value(), 0.0}}; }
    static TraceVal approx(std::complex<double> v) { return {false, Ratio(), v}; }
};

template <typename U>
concept UnitaryOp = requires(const U& a, const U& b) {
    { a * b } -> std::same_as<U>;
    { a.adjoint() } -> std::same_as<U>;
    { a.normalized_trace() } -> std::same_as<TraceVal>;
};

template <typename E>
TraceVal trace_of(const PermAction<E>& a) {
    return TraceVal::exactly(fixed_point_ratio(a));
}

struct WordStat {
    Word word;
    bool trivial = false;
    std::complex<double> trace;
    double deviation = 0;
    bool exact_zero = false;  // deviation is exactly 0 along an integral path
};

struct MicrostateReport {
    int max_len = 0;
    double eps = 0;
    std::uint64_t word_count = 0;
    double max_deviation = 0;
    bool all_exact = true;  // every deviation took the exact path
    std::uint64_t failures = 0;
    WordStat worst;
    std::vector<WordStat> words;

    bool pass() const { return failures == 0; }
};

namespace detail {

template <typename U>
TraceVal model_trace(const U& u) {
    if constexpr (requires { u.normalized_trace(); })
        return u.normalized_trace();
    else
        return trace_of(u);
}

}  // namespace detail

/// Checks every monoid word of length <= n over the marked alphabet: its
/// trace must be eps-close to 1 when the triviality oracle accepts the word
/// and eps-close to 0 otherwise. A deviation that is exactly zero passes for
/// every eps (this is what makes eps = 0 meaningful); otherwise strict < eps.
template <typename U>
MicrostateReport microstate_check(const std::vector<U>& assignment, int n, double eps,
                                  const std::function<bool(const Word&)>& trivial,
                                  std::uint64_t budget = 1000000, bool keep_words = true) {
    if (assignment.empty()) throw std::invalid_argument("microstate_check: empty assignment");
    int k = static_cast<int>(assignment.size());
    count_words(k, n, budget);

    MicrostateReport rep;
    rep.max_len = n;
    rep.eps = eps;

    std::vector<U> adjoints;
    for (const U& u : assignment) adjoints.push_back(u.adjoint());

    Word w;
    std::vector<U> stack;  // prefix products; empty word handled separately
    auto record = [&](const U& value) {
        WordStat st;
        st.word = w;
        st.trivial = trivial(w);
        TraceVal tr = detail::model_trace(value);
        st.trace = tr.z;
        if (tr.exact) {
            Ratio target = st.trivial ? Ratio::one() : Ratio::zero();
            st.exact_zero = tr.r == target;
            st.deviation = st.exact_zero ? 0.0 : std::abs(tr.r.value() - target.value());
        } else {
            st.deviation = std::abs(tr.z - std::complex<double>(st.trivial ? 1.0 : 0.0, 0.0));
            st.exact_zero = false;
            rep.all_exact = false;
        }
        bool ok = st.exact_zero || st.deviation < eps;
        if (!ok) ++rep.failures;
        if (rep.word_count == 0 || st.deviation > rep.max_deviation) {
            rep.max_deviation = st.deviation;
            rep.worst = st;
        }
        ++rep.word_count;
        if (keep_words) rep.words.push_back(std::move(st));
    };

    std::function<void()> rec = [&]() {
        if (static_cast<int>(w.size()) == n) return;
        for (int r = 0; r < 2 * k; ++r) {
            Letter l{r / 2, (r % 2) != 0};
            const U& letter_op = l.star ? adjoints[static_cast<size_t>(l.index)] : assignment[static_cast<size_t>(l.index)];
            U value = stack.empty() ? letter_op : stack.back() * letter_op;
            w.push_back(l);
            record(value);
            stack.push_back(std::move(value));
            rec();
            stack.pop_back();
            w.pop_back();
        }
    };

    // empty word: trace of the identity is exactly 1
    {
        WordStat st;
        st.word = {};
        st.trivial = trivial(st.word);
        st.trace = {1.0, 0.0};
        st.deviation = st.trivial ? 0.0 : 1.0;
        st.exact_zero = st.trivial;
        if (!st.exact_zero && !(st.deviation < eps)) ++rep.failures;
        rep.max_deviation = st.deviation;
        rep.worst = st;
        rep.word_count = 1;
        if (keep_words) rep.words.push_back(st);
    }
    rec();
    return rep;
}

}  // namespace gal
