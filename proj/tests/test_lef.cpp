#include <catch2/catch_amalgamated.hpp>

#include <unordered_set>

#include "gal/groups.hpp"
#include "gal/lef.hpp"
#include "oracles.hpp"

using namespace gal;

namespace {

// Independent window-bound scan: dense products, direct exponent walk.
i64 scan_degree_bound(const std::vector<QuotientElem<LaurentPoly>>& F) {
    i64 worst = 0;
    auto scan_flat = [&](const std::vector<LaurentPoly>& flat) {
        for (const LaurentPoly& v : flat)
            for (auto& [e, c] : v.coeffs()) {
                (void)c;
                worst = std::max(worst, e < 0 ? -e : e);
            }
    };
    for (const auto& f : F) {
        std::vector<LaurentPoly> flat;
        for (int i = 0; i < f.rep().dim(); ++i)
            for (int j = 0; j < f.rep().dim(); ++j) flat.push_back(f.rep().at(i, j));
        scan_flat(flat);
        for (const auto& g : F) {
            auto prod = oracles::matmul_dense(f.rep(), g.rep());
            // corner of the class representative: only the negative part remains
            prod[static_cast<size_t>(f.rep().dim() - 1)] = prod[static_cast<size_t>(f.rep().dim() - 1)].negative_part();
            scan_flat(prod);
        }
    }
    return worst + 1;
}

}  // namespace

TEST_CASE("window bound", "[lef]") {
    auto id = parse_g_element(2, "id");
    CHECK(choose_degree_bound({id}) == 1);

    // F = {class of e15(t^-1)}: corner entries add under the group law, so
    // the product contributes nothing new and the bound is 1 + 1
    CHECK(choose_degree_bound({parse_g_element(2, "e[1,5](t^-1)")}) == 2);
    CHECK(choose_degree_bound({parse_g_element(3, "e[1,5](t^-1)")}) == 2);

    SECTION("matches the independent scan on the radius-2 ball") {
        for (i64 p : {2, 3}) {
            auto F = group_ball(g_default_marked_set(p), 2);
            CHECK(choose_degree_bound(F) == scan_degree_bound(F));
        }
    }
}

TEST_CASE("witness construction", "[lef]") {
    auto id = parse_g_element(2, "id");
    auto w = parse_g_element(2, "e[1,5](t^-1)");
    LefWitness witness = build_lef_witness({id, w});

    CHECK(witness.image_of(id).is_identity());

    // t^-1 lands on x^(6n-1), which is in the surviving upper window (>= 3n)
    i64 m = witness.params.m;
    auto img = witness.image_of(w);
    CHECK_FALSE(img.is_identity());
    CHECK(img.rep().corner() == Cyclo::x_power(2, m, m - 1));

    SECTION("the singleton identity set passes") {
        std::vector<QuotientElem<LaurentPoly>> F = {parse_g_element(2, "id")};
        auto rep = check_lef(F, build_lef_witness(F));
        CHECK(rep.pass());
        CHECK(rep.n == 1);
        CHECK(rep.m == 6);
    }

    SECTION("check passes for a small explicit F") {
        std::vector<QuotientElem<LaurentPoly>> F = {
            parse_g_element(2, "e[1,5](t^-1)"), parse_g_element(2, "e[1,2](1)"),
            parse_g_element(2, "e[2,5](t^-1)")};
        auto wit = build_lef_witness(F);
        auto rep = check_lef(F, wit);
        CHECK(rep.pass());
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("radius-2 ball embeds for p = 2 and 3", "[lef]") {
    for (i64 p : {2, 3}) {
        auto F = group_ball(g_default_marked_set(p), 2);
        auto wit = build_lef_witness(F);
        auto rep = check_lef(F, wit);
        INFO("p = " << p << ", n = " << rep.n << ", |F| = " << rep.f_size);
        CHECK(rep.pass());
        CHECK(rep.injective);
        CHECK(rep.violations.empty());
        CHECK(rep.m == 6 * rep.n);
    }
}

TEST_CASE("inverses and restriction", "[lef]") {
    auto F = group_ball(g_default_marked_set(2), 2);
    auto wit = build_lef_witness(F);

    SECTION("phi(f^-1) = phi(f)^-1 whenever both lie in F") {
        std::unordered_set<std::string> keys;
        for (const auto& f : F) keys.insert(f.key());
        for (const auto& f : F) {
            auto finv = f.inverse();
            if (keys.count(finv.key())) CHECK(wit.image_of(finv) == wit.image_of(f).inverse());
        }
    }

    SECTION("a witness for a superset restricts to a valid witness") {
        auto F1 = group_ball(g_default_marked_set(2), 1);
        auto rep = check_lef(F1, wit);  // wit was built for the radius-2 ball
        CHECK(rep.pass());
    }

    SECTION("missing domain elements are reported") {
        auto small = build_lef_witness({parse_g_element(2, "e[1,2](1)")});
        CHECK_THROWS_AS(check_lef(F, small), std::out_of_range);
    }
}

TEST_CASE("negative control: forced-small window bound", "[lef]") {
    // This F needs n = 3. Forcing n = 1 makes the unreduced product corner
    // t^3 land in the surviving window of the finite reduction while the
    // infinite one kills it: a multiplicativity violation.
    for (i64 p : {2, 3}) {
        std::vector<QuotientElem<LaurentPoly>> F = {
            parse_g_element(p, "e[1,2](t^2)"), parse_g_element(p, "e[2,5](t)")};
        CHECK(choose_degree_bound(F) == 3);
        auto honest = build_lef_witness(F);
        CHECK(check_lef(F, honest).pass());

        auto forced = build_lef_witness(F, 1);
        auto rep = check_lef(F, forced);
        CHECK_FALSE(rep.pass());
        bool has_mult_violation = false;
        for (const auto& v : rep.violations) has_mult_violation |= v.kind == "multiplicativity";
        CHECK(has_mult_violation);
    }
}
