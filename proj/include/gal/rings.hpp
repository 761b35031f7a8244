#pragma once

/// Exact arithmetic in the five coefficient rings used by the matrix groups:
/// F_p, F_p[t,t^-1], F_p[x] with x^m = 1, Z/qZ, and Z[1/p], plus the two
/// reduction homomorphisms between them (t^k -> x^k and reduction mod q).
///
/// All values are immutable after construction and carry their own modulus
/// context; mixing contexts throws std::invalid_argument.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gal {

using i64 = long long;

namespace detail {

inline i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void check_prime(i64 p) {
    // tiny memo: the same handful of moduli is used over and over
    thread_local i64 last[4] = {0, 0, 0, 0};
    for (i64 q : last)
        if (q == p) return;
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    last[3] = last[2];
    last[2] = last[1];
    last[1] = last[0];
    last[0] = p;
}

/// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
struct Egcd {
    i64 g, x, y;
};
inline Egcd egcd(i64 a, i64 b) {
    if (b == 0) return {a, 1, 0};
    Egcd e = egcd(b, a % b);
    return {e.g, e.y, e.x - (a / b) * e.y};
}

/// Inverse of a modulo m; throws if gcd(a,m) != 1.
inline i64 inv_mod(i64 a, i64 m) {
    Egcd e = egcd(mod_floor(a, m), m);
    if (e.g != 1) throw std::domain_error("not invertible: " + std::to_string(a) + " mod " + std::to_string(m));
    return mod_floor(e.x, m);
}

inline i64 pow_mod(i64 a, i64 e, i64 m) {
    i64 r = 1;
    a = mod_floor(a, m);
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
    }
    return r;
}

}  // namespace detail

/// Requirements on a ring element type usable in shaped matrices.
template <typename R>
concept RingElem = requires(const R& a, const R& b) {
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.zero_like() } -> std::same_as<R>;
    { a.one_like() } -> std::same_as<R>;
    { a.str() } -> std::same_as<std::string>;
};

// ---------------------------------------------------------------------------
// F_p

class Fp {
public:
    Fp(i64 p, i64 value) : p_(p), v_(detail::mod_floor(value, p)) { detail::check_prime(p); }

    i64 modulus() const { return p_; }
    i64 value() const { return v_; }

    Fp operator+(const Fp& o) const { return raw(match(o), v_ + o.v_); }
    Fp operator-(const Fp& o) const { return raw(match(o), v_ - o.v_ + p_); }
    Fp operator*(const Fp& o) const { return raw(match(o), v_ * o.v_); }
    Fp operator-() const { return raw(p_, p_ - v_); }
    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    Fp zero_like() const { return raw(p_, 0); }
    Fp one_like() const { return raw(p_, 1); }
    Fp inverse() const { return raw(p_, detail::inv_mod(v_, p_)); }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp raw(i64 p, i64 v) {
        Fp r;
        r.p_ = p;
        r.v_ = detail::mod_floor(v, p);
        return r;
    }
    i64 match(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Fp modulus mismatch");
        return p_;
    }
    Fp() : p_(2), v_(0) {}
    i64 p_;
    i64 v_;
};

// ---------------------------------------------------------------------------
// F_p[t, t^-1], sparse in the exponent

/// Laurent polynomial over F_p. Stored as a map exponent -> nonzero residue,
/// which is the canonical form: two polynomials are equal iff the maps are.
class LaurentPoly {
public:
    explicit LaurentPoly(i64 p) : p_(p) { detail::check_prime(p); }
    LaurentPoly(i64 p, i64 constant) : LaurentPoly(p) { add_term(0, constant); }

    static LaurentPoly t_power(i64 p, i64 exp, i64 coeff = 1) {
        LaurentPoly r(p);
        r.add_term(exp, coeff);
        return r;
    }

    i64 modulus() const { return p_; }
    const std::map<i64, i64>& coeffs() const { return c_; }
    i64 coeff(i64 exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? 0 : it->second;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        match(o);
        LaurentPoly r = *this;
        for (auto& [e, v] : o.c_) r.add_term(e, v);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
    LaurentPoly operator-() const {
        LaurentPoly r(p_);
        for (auto& [e, v] : c_) r.c_[e] = p_ - v;
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        match(o);
        LaurentPoly r(p_);
        for (auto& [ea, va] : c_)
            for (auto& [eb, vb] : o.c_) r.add_term(ea + eb, va * vb);
        return r;
    }
    bool operator==(const LaurentPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.count(0) && c_.at(0) == 1; }
    LaurentPoly zero_like() const { return LaurentPoly(p_); }
    LaurentPoly one_like() const { return LaurentPoly(p_, 1); }

    /// Part with exponent < 0 (image of the retraction whose kernel is the
    /// span of t^n, n >= 0).
    LaurentPoly negative_part() const {
        LaurentPoly r(p_);
        for (auto& [e, v] : c_)
            if (e < 0) r.c_[e] = v;
        return r;
    }

    i64 max_abs_exponent() const {
        i64 m = 0;
        for (auto& [e, v] : c_) m = std::max(m, e < 0 ? -e : e);
        return m;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (auto& [e, v] : c_) {
            if (!s.empty()) s += " + ";
            if (e == 0) {
                s += std::to_string(v);
            } else {
                if (v != 1) s += std::to_string(v) + "*";
                s += (e == 1) ? "t" : "t^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    void add_term(i64 exp, i64 coeff) {
        i64 v = detail::mod_floor(c_[exp] + coeff, p_);
        if (v == 0)
            c_.erase(exp);
        else
            c_[exp] = v;
    }
    void match(const LaurentPoly& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Laurent modulus mismatch");
    }
    i64 p_;
    std::map<i64, i64> c_;
};

// ---------------------------------------------------------------------------
// F_p[x] with x^m = 1, dense

/// Group ring F_p[Z/m] written with a formal m-th root of unity x;
/// exponents wrap modulo m, which keeps the representation dense.
class Cyclo {
public:
    Cyclo(i64 p, i64 m) : p_(p), m_(m), c_(static_cast<size_t>(m), 0) {
        detail::check_prime(p);
        if (m < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    }

    static Cyclo x_power(i64 p, i64 m, i64 exp, i64 coeff = 1) {
        Cyclo r(p, m);
        r.c_[static_cast<size_t>(detail::mod_floor(exp, m))] = detail::mod_floor(coeff, p);
        return r;
    }

    i64 modulus() const { return p_; }
    i64 order() const { return m_; }
    i64 coeff(i64 slot) const { return c_[static_cast<size_t>(detail::mod_floor(slot, m_))]; }
    void add_term(i64 exp, i64 coeff) {
        size_t s = static_cast<size_t>(detail::mod_floor(exp, m_));
        c_[s] = detail::mod_floor(c_[s] + coeff, p_);
    }

    Cyclo operator+(const Cyclo& o) const {
        match(o);
        Cyclo r(p_, m_);
        for (i64 i = 0; i < m_; ++i) r.c_[i] = detail::mod_floor(c_[i] + o.c_[i], p_);
        return r;
    }
    Cyclo operator-(const Cyclo& o) const { return *this + (-o); }
    Cyclo operator-() const {
        Cyclo r(p_, m_);
        for (i64 i = 0; i < m_; ++i) r.c_[i] = detail::mod_floor(-c_[i], p_);
        return r;
    }
    Cyclo operator*(const Cyclo& o) const {
        match(o);
        Cyclo r(p_, m_);
        for (i64 i = 0; i < m_; ++i) {
            if (c_[i] == 0) continue;
            for (i64 j = 0; j < m_; ++j) {
                if (o.c_[j] == 0) continue;
                size_t s = static_cast<size_t>((i + j) % m_);
                r.c_[s] = detail::mod_floor(r.c_[s] + c_[i] * o.c_[j], p_);
            }
        }
        return r;
    }
    bool operator==(const Cyclo& o) const { return p_ == o.p_ && m_ == o.m_ && c_ == o.c_; }

    bool is_zero() const {
        for (i64 v : c_)
            if (v != 0) return false;
        return true;
    }
    bool is_one() const {
        if (c_[0] != 1) return false;
        for (i64 i = 1; i < m_; ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Cyclo zero_like() const { return Cyclo(p_, m_); }
    Cyclo one_like() const { return x_power(p_, m_, 0); }

    /// Zeroes the slots x^0 .. x^{split-1}, keeping the upper window.
    Cyclo keep_upper(i64 split) const {
        Cyclo r = *this;
        for (i64 i = 0; i < std::min(split, m_); ++i) r.c_[i] = 0;
        return r;
    }

    std::string str() const {
        std::string s;
        for (i64 i = 0; i < m_; ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += std::to_string(c_[i]);
            } else {
                if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
                s += (i == 1) ? "x" : "x^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    void match(const Cyclo& o) const {
        if (p_ != o.p_ || m_ != o.m_) throw std::invalid_argument("cyclotomic context mismatch");
    }
    i64 p_;
    i64 m_;
    std::vector<i64> c_;
};

// ---------------------------------------------------------------------------
// Z/qZ (q arbitrary >= 2)

class ZModQ {
public:
    ZModQ(i64 q, i64 value) : q_(q), v_(detail::mod_floor(value, q)) {
        if (q < 2) throw std::invalid_argument("modulus must be >= 2");
    }

    i64 modulus() const { return q_; }
    i64 value() const { return v_; }

    ZModQ operator+(const ZModQ& o) const { return ZModQ(match(o), v_ + o.v_); }
    ZModQ operator-(const ZModQ& o) const { return ZModQ(match(o), v_ - o.v_ + q_); }
    ZModQ operator*(const ZModQ& o) const { return ZModQ(match(o), v_ * o.v_); }
    ZModQ operator-() const { return ZModQ(q_, q_ - v_); }
    bool operator==(const ZModQ& o) const { return q_ == o.q_ && v_ == o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    ZModQ zero_like() const { return ZModQ(q_, 0); }
    ZModQ one_like() const { return ZModQ(q_, 1); }

    std::string str() const { return std::to_string(v_); }

private:
    i64 match(const ZModQ& o) const {
        if (q_ != o.q_) throw std::invalid_argument("Z/q modulus mismatch");
        return q_;
    }
    i64 q_;
    i64 v_;
};

// ---------------------------------------------------------------------------
// Z[1/p]

/// num / p^exp in canonical form: exp == 0 or p does not divide num.
class PAdicRat {
public:
    PAdicRat(i64 p, i64 num, i64 exp = 0) : p_(p), num_(num), exp_(exp) {
        detail::check_prime(p);
        if (exp < 0) throw std::invalid_argument("denominator exponent must be >= 0");
        canonicalize();
    }

    i64 prime() const { return p_; }
    i64 num() const { return num_; }
    i64 exp() const { return exp_; }

    PAdicRat operator+(const PAdicRat& o) const {
        match(o);
        i64 e = std::max(exp_, o.exp_);
        return PAdicRat(p_, num_ * ipow(e - exp_) + o.num_ * ipow(e - o.exp_), e);
    }
    PAdicRat operator-(const PAdicRat& o) const { return *this + (-o); }
    PAdicRat operator*(const PAdicRat& o) const {
        match(o);
        return PAdicRat(p_, num_ * o.num_, exp_ + o.exp_);
    }
    PAdicRat operator-() const { return PAdicRat(p_, -num_, exp_); }
    bool operator==(const PAdicRat& o) const { return p_ == o.p_ && num_ == o.num_ && exp_ == o.exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && exp_ == 0; }
    bool is_integer() const { return exp_ == 0; }
    PAdicRat zero_like() const { return PAdicRat(p_, 0); }
    PAdicRat one_like() const { return PAdicRat(p_, 1); }

    /// Fractional part in [0,1): the canonical coset representative mod Z.
    PAdicRat fractional_part() const {
        i64 den = ipow(exp_);
        return PAdicRat(p_, detail::mod_floor(num_, den), exp_);
    }

    /// Numerator after rescaling to denominator p^k (requires k >= exp).
    i64 numerator_at(i64 k) const {
        if (k < exp_) throw std::invalid_argument("denominator exponent exceeds requested scale");
        return num_ * ipow(k - exp_);
    }

    std::string str() const {
        if (exp_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(ipow(exp_));
    }

private:
    void canonicalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && num_ % p_ == 0) {
            num_ /= p_;
            --exp_;
        }
    }
    i64 ipow(i64 e) const {
        i64 r = 1;
        for (i64 i = 0; i < e; ++i) r *= p_;
        return r;
    }
    void match(const PAdicRat& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Z[1/p] prime mismatch");
    }
    i64 p_;
    i64 num_;
    i64 exp_;
};

// ---------------------------------------------------------------------------
// Reduction homomorphisms

/// Ring homomorphism F_p[t,t^-1] -> F_p[x]/(x^m - 1), t^k -> x^(k mod m).
/// Negative exponents wrap, so t^-1 lands on x^(m-1).
inline Cyclo subst_cyclotomic(const LaurentPoly& a, i64 m) {
    Cyclo r(a.modulus(), m);
    for (auto& [e, v] : a.coeffs()) r.add_term(e, v);
    return r;
}

/// Ring homomorphism Z[1/p] -> Z/qZ for q prime to p:
/// num / p^exp -> num * inv(p)^exp mod q.
inline ZModQ reduce_mod_q(const PAdicRat& x, i64 q) {
    if (q < 2) throw std::invalid_argument("modulus must be >= 2");
    if (std::gcd(x.prime(), q) != 1) throw std::domain_error("q must be prime to p");
    i64 ip = detail::inv_mod(x.prime(), q);
    i64 v = detail::mod_floor(x.num(), q) * detail::pow_mod(ip, x.exp(), q) % q;
    return ZModQ(q, v);
}

static_assert(RingElem<Fp>);
static_assert(RingElem<LaurentPoly>);
static_assert(RingElem<Cyclo>);
static_assert(RingElem<ZModQ>);
static_assert(RingElem<PAdicRat>);

}  // namespace gal
