#pragma once

/// Free-monoid and free-group word machinery: enumeration of monoid words
/// (no cancellation) and of freely reduced words, evaluation homomorphisms,
/// and the marked-group metric d = 2^-k where k is the last radius at which
/// the kernels of two markings agree on the free-group ball.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gal {

struct Letter {
    int index = 0;    // generator index, 0-based
    bool star = false;  // s* (inverse/adjoint) rather than s

    bool operator==(const Letter& o) const { return index == o.index && star == o.star; }
};

using Word = std::vector<Letter>;

inline std::string word_str(const Word& w) {
    if (w.empty()) return "(empty)";
    std::string s;
    for (const Letter& l : w) {
        if (!s.empty()) s += " ";
        s += "s" + std::to_string(l.index + 1) + (l.star ? "*" : "");
    }
    return s;
}

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Number of monoid words of length <= n over k generators and their stars:
/// sum of (2k)^i. Throws BudgetExceeded past the budget.
inline std::uint64_t count_words(int k, int n, std::uint64_t budget) {
    std::uint64_t total = 0, layer = 1;
    for (int i = 0; i <= n; ++i) {
        if (layer > budget || (total += layer) > budget)
            throw BudgetExceeded("word budget exceeded: more than " + std::to_string(budget) + " words");
        if (i < n) {
            if (layer > budget / (2 * static_cast<std::uint64_t>(k)) + 1) layer = budget + 1;
            else layer *= 2 * static_cast<std::uint64_t>(k);
        }
    }
    return total;
}

/// Visits every monoid word of length <= n exactly once, in length-
/// lexicographic order (rank of a letter = 2*index + star).
inline std::uint64_t enumerate_words(int k, int n, std::uint64_t budget,
                                     const std::function<void(const Word&)>& visit) {
    if (k < 1 || n < 0) throw std::invalid_argument("enumerate_words: need k >= 1, n >= 0");
    count_words(k, n, budget);
    Word w;
    visit(w);
    std::uint64_t emitted = 1;
    for (int len = 1; len <= n; ++len) {
        std::vector<int> ranks(static_cast<size_t>(len), 0);
        while (true) {
            w.clear();
            for (int r : ranks) w.push_back({r / 2, (r % 2) != 0});
            visit(w);
            ++emitted;
            int pos = len - 1;
            while (pos >= 0 && ranks[static_cast<size_t>(pos)] == 2 * k - 1) ranks[static_cast<size_t>(pos--)] = 0;
            if (pos < 0) break;
            ++ranks[static_cast<size_t>(pos)];
        }
    }
    return emitted;
}

/// All monoid words of length <= n, in enumeration order.
inline std::vector<Word> all_words(int k, int n, std::uint64_t budget = 1000000) {
    std::vector<Word> out;
    enumerate_words(k, n, budget, [&](const Word& w) { out.push_back(w); });
    return out;
}

/// Freely reduced words of length <= radius over `rank` generators (star =
/// inverse), length-lexicographic order. This is the ball in the free group.
inline std::vector<Word> free_ball(int rank, int radius) {
    if (rank < 1 || radius < 0) throw std::invalid_argument("free_ball: need rank >= 1, radius >= 0");
    std::vector<Word> out;
    Word w;
    std::function<void(int)> rec = [&](int depth) {
        out.push_back(w);
        if (depth == radius) return;
        for (int r = 0; r < 2 * rank; ++r) {
            Letter l{r / 2, (r % 2) != 0};
            if (!w.empty() && w.back().index == l.index && w.back().star != l.star) continue;
            w.push_back(l);
            rec(depth + 1);
            w.pop_back();
        }
    };
    rec(0);
    // reorder to length-lexicographic (the DFS above is prefix order)
    std::stable_sort(out.begin(), out.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size(); });
    return out;
}

inline std::uint64_t free_ball_size(int rank, int radius) {
    std::uint64_t total = 1, layer = 1;
    for (int i = 1; i <= radius; ++i) {
        layer *= (i == 1) ? 2 * static_cast<std::uint64_t>(rank) : 2 * static_cast<std::uint64_t>(rank) - 1;
        total += layer;
    }
    return total;
}

/// Left-to-right evaluation of a word under a generator assignment; starred
/// letters evaluate to inverses. A monoid homomorphism by construction.
template <typename E>
E eval_word(const Word& w, const std::vector<E>& assignment, const E& identity) {
    E acc = identity;
    for (const Letter& l : w) {
        if (l.index < 0 || static_cast<size_t>(l.index) >= assignment.size())
            throw std::out_of_range("word letter outside assignment");
        acc = acc * (l.star ? assignment[static_cast<size_t>(l.index)].inverse() : assignment[static_cast<size_t>(l.index)]);
    }
    return acc;
}

/// A group marked by an ordered generating set, presented through the one
/// thing the metric needs: a decision procedure for triviality of words.
struct MarkedGroup {
    int alphabet = 0;
    std::function<bool(const Word&)> trivial;
};

/// Distance between two markings at resolution k_max: 2^-k for the largest
/// k <= k_max at which the kernel balls agree; upper_bound is set when they
/// agree all the way to k_max.
struct MarkedDistance {
    bool upper_bound = false;
    int k = 0;

    double value() const { return std::ldexp(1.0, -k); }
    std::string str() const { return (upper_bound ? "<= 2^-" : "2^-") + std::to_string(k); }
    bool operator==(const MarkedDistance& o) const { return upper_bound == o.upper_bound && k == o.k; }
};

inline MarkedDistance marked_distance(const MarkedGroup& a, const MarkedGroup& b, int k_max) {
    if (a.alphabet != b.alphabet) throw std::invalid_argument("marked groups have different alphabets");
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    for (int k = 1; k <= k_max; ++k) {
        for (const Word& w : free_ball(a.alphabet, k)) {
            if (static_cast<int>(w.size()) != k) continue;  // smaller radii already agreed
            if (a.trivial(w) != b.trivial(w)) return {false, k - 1};
        }
    }
    return {true, k_max};
}

}  // namespace gal
