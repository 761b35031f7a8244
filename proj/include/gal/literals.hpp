#pragma once

/// Text literals used by the CLI and by marked-set files:
///   Laurent polynomials   "1 + t^-1 + 2*t^3"
///   Z[1/p] fractions      "3/4", "-5", "1/2"
///   group elements        "e[1,5](t^-1)*e[1,2](1)", "id"
///   words                 "s1 s2* s1"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quotient.hpp"
#include "rings.hpp"
#include "words.hpp"

namespace gal {

namespace detail {

inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline i64 parse_int(const std::string& s) {
    std::string t = strip(s);
    size_t pos = 0;
    i64 v;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (pos != t.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

/// Splits on a separator character at parenthesis/bracket depth 0.
inline std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

/// "1 + t^-1 + 2*t^3"; '-' starts a negated term except right after '^'.
inline LaurentPoly parse_laurent(i64 p, const std::string& text) {
    std::string s = detail::strip(text);
    if (s.empty()) throw std::invalid_argument("empty Laurent literal");
    LaurentPoly acc(p);
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    std::string term;
    char prev_sig = 0;
    auto flush = [&]() {
        std::string t = detail::strip(term);
        if (t.empty()) throw std::invalid_argument("malformed Laurent literal: '" + text + "'");
        i64 coeff = 1, exp = 0;
        size_t tp = t.find('t');
        if (tp == std::string::npos) {
            coeff = detail::parse_int(t);
        } else {
            std::string head = detail::strip(t.substr(0, tp));
            if (!head.empty() && head.back() == '*') head = detail::strip(head.substr(0, head.size() - 1));
            if (!head.empty()) coeff = detail::parse_int(head);
            std::string tail = detail::strip(t.substr(tp + 1));
            if (!tail.empty()) {
                if (tail[0] != '^') throw std::invalid_argument("malformed power in '" + text + "'");
                exp = detail::parse_int(tail.substr(1));
            } else {
                exp = 1;
            }
        }
        acc = acc + LaurentPoly::t_power(p, exp, neg ? -coeff : coeff);
        term.clear();
    };
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if ((ch == '+' || ch == '-') && prev_sig != '^') {
            flush();
            neg = ch == '-';
        } else {
            term += ch;
        }
        if (!std::isspace(static_cast<unsigned char>(ch))) prev_sig = ch;
    }
    flush();
    return acc;
}

/// "3/4", "-5": denominator must be a power of p.
inline PAdicRat parse_padic(i64 p, const std::string& text) {
    std::string s = detail::strip(text);
    size_t slash = s.find('/');
    if (slash == std::string::npos) return PAdicRat(p, detail::parse_int(s));
    i64 num = detail::parse_int(s.substr(0, slash));
    i64 den = detail::parse_int(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("denominator must be positive: '" + text + "'");
    i64 exp = 0;
    while (den % p == 0) {
        den /= p;
        ++exp;
    }
    if (den != 1) throw std::invalid_argument("denominator must be a power of " + std::to_string(p) + ": '" + text + "'");
    return PAdicRat(p, num, exp);
}

/// Product of elementary factors "e[i,j](entry)", or "id".
template <RingElem R>
QuotientElem<R> parse_element(const GroupShape& shape, const CentralReduction<R>& red, const R& proto,
                              const std::function<R(const std::string&)>& entry, const std::string& text) {
    ShapedMatrix<R> acc = ShapedMatrix<R>::identity(shape, proto);
    for (std::string factor : detail::split_top(detail::strip(text), '*')) {
        factor = detail::strip(factor);
        if (factor == "id" || factor == "1") continue;
        if (factor.size() < 6 || factor[0] != 'e' || factor[1] != '[')
            throw std::invalid_argument("malformed element factor: '" + factor + "'");
        size_t close = factor.find(']');
        size_t open = factor.find('(', close);
        if (close == std::string::npos || open == std::string::npos || factor.back() != ')')
            throw std::invalid_argument("malformed element factor: '" + factor + "'");
        std::vector<std::string> ij = detail::split_top(factor.substr(2, close - 2), ',');
        if (ij.size() != 2) throw std::invalid_argument("element factor needs two indices: '" + factor + "'");
        int i = static_cast<int>(detail::parse_int(ij[0]));
        int j = static_cast<int>(detail::parse_int(ij[1]));
        R value = entry(factor.substr(open + 1, factor.size() - open - 2));
        acc = acc * ShapedMatrix<R>::elementary(shape, i, j, value);
    }
    return QuotientElem<R>(acc, red);
}

inline QuotientElem<LaurentPoly> parse_g_element(i64 p, const std::string& text, const GroupShape& shape = g0_shape()) {
    return parse_element<LaurentPoly>(shape, g_reduction(), LaurentPoly(p),
                                      [p](const std::string& s) { return parse_laurent(p, s); }, text);
}

inline QuotientElem<PAdicRat> parse_k_element(i64 p, const std::string& text, const GroupShape& shape = k0_shape()) {
    return parse_element<PAdicRat>(shape, k_reduction(), PAdicRat(p, 0),
                                   [p](const std::string& s) { return parse_padic(p, s); }, text);
}

/// "s1 s2* s1": whitespace-separated letters, '*' suffix for stars.
inline Word parse_word(const std::string& text, int alphabet) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        bool star = !tok.empty() && tok.back() == '*';
        if (star) tok.pop_back();
        if (tok.size() < 2 || tok[0] != 's') throw std::invalid_argument("malformed word letter: '" + tok + "'");
        int idx = static_cast<int>(detail::parse_int(tok.substr(1))) - 1;
        if (idx < 0 || idx >= alphabet) throw std::invalid_argument("letter outside alphabet: '" + tok + "'");
        w.push_back({idx, star});
    }
    return w;
}

/// One element literal per line; '#' comments and blank lines are skipped.
inline std::vector<std::string> read_literal_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open marked-set file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::string s = detail::strip(line);
        if (s.empty() || s[0] == '#') continue;
        lines.push_back(s);
    }
    if (lines.empty()) throw std::invalid_argument("marked-set file has no elements: " + path);
    return lines;
}

}  // namespace gal
