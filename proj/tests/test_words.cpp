#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gal/groups.hpp"
#include "gal/words.hpp"

using namespace gal;

namespace {

long exponent_sum(const Word& w) {
    long s = 0;
    for (const Letter& l : w) s += l.star ? -1 : 1;
    return s;
}

MarkedGroup cyclic_marking(long order) {  // order 0 = the integers
    return {1, [order](const Word& w) {
                long s = exponent_sum(w);
                return order == 0 ? s == 0 : s % order == 0;
            }};
}

}  // namespace

TEST_CASE("monoid word enumeration", "[words]") {
    auto ws = all_words(1, 1);
    REQUIRE(ws.size() == 3);
    CHECK(ws[0].empty());
    CHECK((ws[1] == Word{{0, false}}));
    CHECK((ws[2] == Word{{0, true}}));

    CHECK(all_words(2, 2).size() == 21);    // 1 + 4 + 16
    CHECK(all_words(3, 3).size() == 259);   // 1 + 6 + 36 + 216
    CHECK(count_words(3, 3, 1000000) == 259);

    SECTION("words are distinct and length-ordered") {
        auto all = all_words(2, 3);
        std::set<std::string> keys;
        size_t prev_len = 0;
        for (const Word& w : all) {
            CHECK(w.size() >= prev_len);
            prev_len = w.size();
            keys.insert(word_str(w));
        }
        CHECK(keys.size() == all.size());
    }

    SECTION("budget") {
        CHECK_THROWS_AS(all_words(3, 10, 1000), BudgetExceeded);
        CHECK_THROWS_AS(count_words(7, 30, 1000000), BudgetExceeded);
    }
}

TEST_CASE("word evaluation", "[words]") {
    auto S = g_default_marked_set(2);
    auto id = S[0].identity_like();

    CHECK(eval_word({}, S, id).is_identity());
    CHECK(eval_word({{0, false}, {0, true}}, S, id).is_identity());  // s s*

    // s1 s2 with s1 = e12(1), s2 = e25(1): at matrix level the corner entry
    // becomes 1 (in the quotient that corner is then reduced away)
    std::vector<ShapedMatrix<LaurentPoly>> lifts;
    for (const auto& s : S) lifts.push_back(section_lift(s));
    auto vm = eval_word(Word{{0, false}, {2, false}}, lifts,
                        ShapedMatrix<LaurentPoly>::identity(g0_shape(), LaurentPoly(2)));
    CHECK(vm.at(0, 4).is_one());
    CHECK_FALSE(eval_word(Word{{0, false}, {2, false}}, S, id).is_identity());

    SECTION("monoid homomorphism: eval(uv) = eval(u) eval(v)") {
        auto all = all_words(static_cast<int>(S.size()), 2, 1000000);
        for (size_t i = 0; i < all.size(); i += 7)
            for (size_t j = 0; j < all.size(); j += 11) {
                Word uv = all[i];
                uv.insert(uv.end(), all[j].begin(), all[j].end());
                CHECK(eval_word(uv, S, id) == eval_word(all[i], S, id) * eval_word(all[j], S, id));
            }
    }

    CHECK_THROWS_AS(eval_word({{9, false}}, S, id), std::out_of_range);
}

TEST_CASE("free-group balls", "[words]") {
    CHECK(free_ball(1, 2).size() == 5);   // e, s, s^-1, s^2, s^-2
    CHECK(free_ball(2, 1).size() == 5);   // e and the four letters
    CHECK(free_ball(2, 2).size() == 17);  // 1 + 4 + 4*3
    CHECK(free_ball_size(2, 2) == 17);
    CHECK(free_ball(3, 3).size() == free_ball_size(3, 3));

    SECTION("every word is freely reduced and distinct") {
        std::set<std::string> keys;
        for (const Word& w : free_ball(2, 4)) {
            for (size_t i = 1; i < w.size(); ++i)
                CHECK_FALSE((w[i].index == w[i - 1].index && w[i].star != w[i - 1].star));
            keys.insert(word_str(w));
        }
        CHECK(keys.size() == free_ball(2, 4).size());
    }
}

TEST_CASE("marked-group distance", "[words]") {
    MarkedGroup mz = cyclic_marking(0);
    MarkedGroup mz2 = cyclic_marking(2);

    CHECK(marked_distance(mz, mz, 3) == MarkedDistance{true, 3});
    CHECK(marked_distance(mz, mz2, 3) == MarkedDistance{false, 1});  // s^2 separates at radius 2
    CHECK(marked_distance(mz, mz2, 3).value() == 0.5);

    SECTION("symmetry and ultrametric inequality on cyclic markings") {
        std::vector<MarkedGroup> ms = {cyclic_marking(0), cyclic_marking(2), cyclic_marking(3),
                                       cyclic_marking(4), cyclic_marking(6)};
        const int kmax = 4;
        for (size_t x = 0; x < ms.size(); ++x)
            for (size_t y = 0; y < ms.size(); ++y) {
                auto dxy = marked_distance(ms[x], ms[y], kmax);
                CHECK(dxy == marked_distance(ms[y], ms[x], kmax));
                for (size_t z = 0; z < ms.size(); ++z) {
                    auto dxz = marked_distance(ms[x], ms[z], kmax);
                    auto dyz = marked_distance(ms[y], ms[z], kmax);
                    CHECK(dxz.value() <= std::max(dxy.value(), dyz.value()) + 1e-15);
                }
            }
    }

    CHECK_THROWS_AS(marked_distance(cyclic_marking(2), MarkedGroup{2, nullptr}, 2), std::invalid_argument);
}

TEST_CASE("word literals", "[words]") {
    Word w = parse_word("s1 s2* s1", 3);
    REQUIRE(w.size() == 3);
    CHECK((w[0] == Letter{0, false}));
    CHECK((w[1] == Letter{1, true}));
    CHECK((w[2] == Letter{0, false}));
    CHECK(word_str(w) == "s1 s2* s1");
    CHECK_THROWS_AS(parse_word("s9", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x1", 3), std::invalid_argument);
}
