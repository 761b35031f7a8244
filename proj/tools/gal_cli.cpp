// Command-line driver: binds the group constructions and their verifications
// into reproducible experiments with machine-readable JSON reports.
//
// Exit codes: 0 = verification passed, 1 = verification failed,
//             2 = usage, parse, or budget error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gal/gal.hpp"
#include "gal/report.hpp"
#include "gal/sampling.hpp"

namespace {

using namespace gal;

struct Options {
    i64 p = 2;
    int radius = 2;
    int n = 3;
    i64 k = 1;
    double eps = 0.1;
    std::string marked_set;
    std::string out;
    std::string sabotage;
    std::string group = "g0";
    std::string ring;
    std::string pair = "z-vs-z2";
    int kmax = 3;
    int trials = 10000;
    std::uint64_t seed = 12345;
    std::uint64_t budget = 1000000;
};

std::uint64_t env_budget() {
    const char* v = std::getenv("GAL_BUDGET");
    if (!v) return 1000000;
    char* end = nullptr;
    unsigned long long b = std::strtoull(v, &end, 10);
    if (!end || *end != '\0' || b == 0) throw std::invalid_argument("GAL_BUDGET must be a positive integer");
    return b;
}

void emit(const Options& opt, const std::string& command, ojson body, bool pass) {
    ojson j;
    j["schema"] = 1;
    j["command"] = command;
    body["pass"] = pass;
    j["report"] = std::move(body);
    std::string text = j.dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write to " + opt.out);
        f << text;
    }
}

std::vector<QuotientElem<LaurentPoly>> g_set(const Options& opt) {
    if (!opt.marked_set.empty()) return g_marked_set(opt.p, read_literal_lines(opt.marked_set));
    return g_default_marked_set(opt.p);
}

std::vector<QuotientElem<PAdicRat>> k_set(const Options& opt) {
    if (!opt.marked_set.empty()) return k_marked_set(opt.p, read_literal_lines(opt.marked_set));
    return k_default_marked_set(opt.p);
}

ojson json_config(const Options& opt, std::initializer_list<const char*> fields) {
    ojson c;
    for (const char* f : fields) {
        std::string name = f;
        if (name == "p") c["p"] = opt.p;
        if (name == "radius") c["radius"] = opt.radius;
        if (name == "n") c["n"] = opt.n;
        if (name == "k") c["k"] = opt.k;
        if (name == "eps") c["eps"] = opt.eps;
        if (name == "budget") c["budget"] = opt.budget;
        if (name == "seed") c["seed"] = opt.seed;
        if (name == "marked_set") c["marked_set"] = opt.marked_set.empty() ? "(default)" : opt.marked_set;
        if (name == "sabotage") c["sabotage"] = opt.sabotage;
        if (name == "group") c["group"] = opt.group;
        if (name == "ring") c["ring"] = opt.ring;
        if (name == "pair") c["pair"] = opt.pair;
        if (name == "kmax") c["kmax"] = opt.kmax;
        if (name == "trials") c["trials"] = opt.trials;
    }
    return c;
}

int run_nonhopf(const Options& opt) {
    auto S = g_set(opt);
    auto F = group_ball(S, opt.radius);
    auto witness = kernel_witness(opt.p);

    bool witness_nontrivial = !witness.is_identity();
    bool witness_killed = shift_endo(witness).is_identity();
    QuotientElem<LaurentPoly> pw = witness;
    for (i64 i = 1; i < opt.p; ++i) pw = pw * witness;
    bool witness_order_p = pw.is_identity();

    size_t roundtrip_failures = 0, hom_failures = 0;
    for (const auto& g : F) {
        if (!(shift_endo(shift_preimage(g)) == g)) ++roundtrip_failures;
        for (const auto& h : S)
            if (!(shift_endo(g * h) == shift_endo(g) * shift_endo(h))) ++hom_failures;
    }
    bool pass = witness_nontrivial && witness_killed && witness_order_p && roundtrip_failures == 0 && hom_failures == 0;

    ojson body;
    body["config"] = json_config(opt, {"p", "radius", "marked_set"});
    body["ball"] = F.size();
    body["witness"] = witness.key();
    body["witness_nontrivial"] = witness_nontrivial;
    body["witness_killed_by_shift"] = witness_killed;
    body["witness_order_p"] = witness_order_p;
    body["preimage_roundtrip_failures"] = roundtrip_failures;
    body["shift_hom_failures"] = hom_failures;
    emit(opt, "nonhopf", std::move(body), pass);
    return pass ? 0 : 1;
}

int run_lef(const Options& opt) {
    std::vector<QuotientElem<LaurentPoly>> S;
    std::optional<i64> forced;
    if (opt.sabotage == "small-n") {
        // adversarial set whose window bound must be at least 4
        S = g_marked_set(opt.p, {"e[1,2](t^2)", "e[2,5](t)"});
        forced = 1;
    } else {
        S = g_set(opt);
    }
    auto F = group_ball(S, opt.radius);
    auto w = build_lef_witness(F, forced);
    auto rep = check_lef(F, w);

    ojson body;
    body["config"] = json_config(opt, {"p", "radius", "marked_set", "sabotage"});
    body.update(json_report(rep));
    emit(opt, "lef", std::move(body), rep.pass());
    return rep.pass() ? 0 : 1;
}

int run_sofic(const Options& opt) {
    auto S = g_set(opt);
    auto F = group_ball(S, opt.radius);
    auto w = build_lef_witness(F);
    auto rep = sofic_check(F, lef_to_sofic(w), opt.eps);

    ojson body;
    body["config"] = json_config(opt, {"p", "radius", "eps", "marked_set"});
    body.update(json_report(rep, false));
    emit(opt, "sofic", std::move(body), rep.pass());
    return rep.pass() ? 0 : 1;
}

int run_microstates_g(const Options& opt) {
    auto S = g_set(opt);
    count_words(static_cast<int>(S.size()), opt.n, opt.budget);  // before the ball gets built
    auto F = group_ball(S, std::max(1, opt.n - 1));
    auto w = build_lef_witness(F);
    std::vector<PermAction<QuotientElem<Cyclo>>> assignment;
    for (const auto& s : S) assignment.push_back(PermAction<QuotientElem<Cyclo>>(w.image_of(s)));
    auto id = S[0].identity_like();
    auto oracle = [&S, id](const Word& word) { return eval_word(word, S, id).is_identity(); };
    auto rep = microstate_check(assignment, opt.n, opt.eps, oracle, opt.budget);

    ojson body;
    body["config"] = json_config(opt, {"p", "n", "eps", "budget", "marked_set"});
    body["lef_n"] = w.params.n;
    body["lef_m"] = w.params.m;
    body.update(json_report(rep, true));
    emit(opt, "microstates-g", std::move(body), rep.pass());
    return rep.pass() ? 0 : 1;
}

int run_microstates_k(const Options& opt) {
    bool sabotage = opt.sabotage == "trivial-chars";
    auto S = k_set(opt);
    auto km = build_k_microstates(S, opt.n, opt.eps, opt.budget, sabotage);

    ojson body;
    body["config"] = json_config(opt, {"p", "n", "eps", "budget", "marked_set", "sabotage"});
    body.update(json_report(km, true));
    bool pass = km.report.pass();
    emit(opt, "microstates-k", std::move(body), pass);
    return pass ? 0 : 1;
}

int run_char_approx(const Options& opt) {
    auto sol = char_approx(opt.p, opt.k, opt.eps);
    ojson body;
    body["config"] = json_config(opt, {"p", "k", "eps"});
    body.update(json_report(sol));
    emit(opt, "char-approx", std::move(body), true);
    return 0;
}

int run_cocycle_check(const Options& opt) {
    Rng rng(opt.seed);
    size_t identity_failures = 0, normalization_failures = 0;
    std::string mode;

    auto check = [&](auto make) {
        for (int t = 0; t < opt.trials; ++t) {
            auto g = make(), h = make(), k = make();
            auto lhs = cocycle(g, h) + cocycle(g * h, k);
            auto rhs = cocycle(h, k) + cocycle(g, h * k);
            if (!(lhs == rhs)) ++identity_failures;
            auto e = g.identity_like();
            if (!cocycle(e, g).is_zero() || !cocycle(g, e).is_zero()) ++normalization_failures;
        }
    };

    std::string ring = opt.ring;
    if (opt.group == "g0") {
        if (ring.empty()) ring = "laurent";
        if (ring == "laurent") {
            mode = "g0/laurent (G-mode)";
            std::function<LaurentPoly(Rng&)> s = [&](Rng& r) { return random_laurent(r, opt.p); };
            check([&] { return random_quotient<LaurentPoly>(rng, g0_shape(), g_reduction(), s); });
        } else if (ring.rfind("cyclo:", 0) == 0) {
            i64 m = std::stoll(ring.substr(6));
            if (m % 6 != 0) throw std::invalid_argument("cyclo order must be a multiple of 6");
            mode = "g0/" + ring + " (LEF-mode)";
            std::function<Cyclo(Rng&)> s = [&](Rng& r) { return random_cyclo(r, opt.p, m); };
            check([&] { return random_quotient<Cyclo>(rng, g0_shape(), lef_reduction(m / 6), s); });
        } else {
            throw std::invalid_argument("unsupported ring for g0: " + ring);
        }
    } else if (opt.group == "k0") {
        if (ring.empty()) ring = "zinvp";
        if (ring == "zinvp") {
            mode = "k0/zinvp (K-mode)";
            std::function<PAdicRat(Rng&)> s = [&](Rng& r) { return random_padic(r, opt.p); };
            check([&] { return random_quotient<PAdicRat>(rng, k0_shape(), k_reduction(), s); });
        } else if (ring.rfind("zmod:", 0) == 0) {
            i64 q = std::stoll(ring.substr(5));
            mode = "k0/" + ring + " (full-centre mode)";
            std::function<ZModQ(Rng&)> s = [&](Rng& r) { return random_zmodq(r, q); };
            check([&] {
                return random_quotient<ZModQ>(rng, k0_shape(), CentralReduction<ZModQ>(ReductionMode::FullCenter), s);
            });
        } else {
            throw std::invalid_argument("unsupported ring for k0: " + ring);
        }
    } else if (opt.group == "heis") {
        if (ring == "fp") {
            mode = "heis/fp (full-centre mode)";
            std::function<Fp(Rng&)> s = [&](Rng& r) { return random_fp(r, opt.p); };
            check([&] {
                return random_quotient<Fp>(rng, heis_shape(), CentralReduction<Fp>(ReductionMode::FullCenter), s);
            });
        } else {
            i64 q = 3;
            if (!ring.empty()) {
                if (ring.rfind("zmod:", 0) != 0) throw std::invalid_argument("heis expects --ring fp or zmod:q");
                q = std::stoll(ring.substr(5));
            }
            mode = "heis/zmod:" + std::to_string(q) + " (full-centre mode)";
            std::function<ZModQ(Rng&)> s = [&](Rng& r) { return random_zmodq(r, q); };
            check([&] {
                return random_quotient<ZModQ>(rng, heis_shape(), CentralReduction<ZModQ>(ReductionMode::FullCenter), s);
            });
        }
    } else {
        throw std::invalid_argument("unknown group: " + opt.group);
    }

    bool pass = identity_failures == 0 && normalization_failures == 0;
    ojson body;
    body["config"] = json_config(opt, {"p", "group", "ring", "trials", "seed"});
    body["mode"] = mode;
    body["identity_failures"] = identity_failures;
    body["normalization_failures"] = normalization_failures;
    emit(opt, "cocycle-check", std::move(body), pass);
    return pass ? 0 : 1;
}

int run_marked_dist(const Options& opt) {
    ojson body;
    body["config"] = json_config(opt, {"p", "pair", "kmax", "marked_set"});
    bool pass = false;
    if (opt.pair == "z-vs-z2") {
        auto expsum = [](const Word& w) {
            long s = 0;
            for (const Letter& l : w) s += l.star ? -1 : 1;
            return s;
        };
        MarkedGroup mz{1, [expsum](const Word& w) { return expsum(w) == 0; }};
        MarkedGroup mz2{1, [expsum](const Word& w) { return expsum(w) % 2 == 0; }};
        MarkedDistance d = marked_distance(mz, mz2, opt.kmax);
        body["distance"] = json_report(d);
        pass = d == MarkedDistance{false, 1};
        body["expected"] = "2^-1";
    } else if (opt.pair == "g-vs-lef") {
        auto S = g_set(opt);
        auto F = group_ball(S, opt.kmax);
        auto w = build_lef_witness(F);
        auto idg = S[0].identity_like();
        MarkedGroup mg{static_cast<int>(S.size()),
                       [&S, idg](const Word& word) { return eval_word(word, S, idg).is_identity(); }};
        std::vector<QuotientElem<Cyclo>> images;
        for (const auto& s : S) images.push_back(w.image_of(s));
        auto idk = images[0].identity_like();
        MarkedGroup mk{static_cast<int>(S.size()),
                       [images, idk](const Word& word) { return eval_word(word, images, idk).is_identity(); }};
        MarkedDistance d = marked_distance(mg, mk, opt.kmax);
        body["distance"] = json_report(d);
        pass = d.upper_bound && d.k == opt.kmax;
        body["expected"] = "<= 2^-" + std::to_string(opt.kmax);
    } else {
        throw std::invalid_argument("unknown pair: " + opt.pair);
    }
    emit(opt, "marked-dist", std::move(body), pass);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite and matricial approximations of two central-quotient matrix groups"};
    app.require_subcommand(1);

    Options opt;
    try {
        opt.budget = env_budget();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out, "write the JSON report to a file instead of stdout");
        sub->add_option("--budget", opt.budget, "word-count budget (overrides GAL_BUDGET)");
    };

    CLI::App* nonhopf = app.add_subcommand("nonhopf", "kernel witness and preimage round-trip for the shift endomorphism");
    nonhopf->add_option("--p", opt.p, "prime");
    nonhopf->add_option("--radius", opt.radius, "ball radius");
    nonhopf->add_option("--marked-set", opt.marked_set, "marked-set file (element literals, one per line)");
    add_common(nonhopf);

    CLI::App* lef = app.add_subcommand("lef", "build and verify the finite partial embedding");
    lef->add_option("--p", opt.p, "prime");
    lef->add_option("--radius", opt.radius, "ball radius for F");
    lef->add_option("--marked-set", opt.marked_set, "marked-set file");
    lef->add_option("--sabotage", opt.sabotage, "negative control: 'small-n' forces window bound 1 on an adversarial set");
    add_common(lef);

    CLI::App* sofic = app.add_subcommand("sofic", "check the sofic conditions on a ball, via the lazy left-regular action");
    sofic->add_option("--p", opt.p, "prime");
    sofic->add_option("--radius", opt.radius, "ball radius for F");
    sofic->add_option("--eps", opt.eps, "tolerance (0 demands exact ratios)");
    sofic->add_option("--marked-set", opt.marked_set, "marked-set file");
    add_common(sofic);

    CLI::App* mg = app.add_subcommand("microstates-g", "trace microstates for the Laurent quotient group");
    mg->add_option("--p", opt.p, "prime");
    mg->add_option("--n", opt.n, "maximum word length");
    mg->add_option("--eps", opt.eps, "tolerance (0 demands exact traces)");
    mg->add_option("--marked-set", opt.marked_set, "marked-set file");
    add_common(mg);

    CLI::App* mk = app.add_subcommand("microstates-k", "trace microstates for the Z[1/p] quotient group via twisted algebras");
    mk->add_option("--p", opt.p, "prime");
    mk->add_option("--n", opt.n, "maximum word length");
    mk->add_option("--eps", opt.eps, "tolerance");
    mk->add_option("--marked-set", opt.marked_set, "marked-set file");
    mk->add_option("--sabotage", opt.sabotage, "negative control: 'trivial-chars' replaces every character by the trivial one");
    add_common(mk);

    CLI::App* ca = app.add_subcommand("char-approx", "characters of Z/qZ approximating the p^k-th roots of unity");
    ca->add_option("--p", opt.p, "prime");
    ca->add_option("--k", opt.k, "power of p");
    ca->add_option("--eps", opt.eps, "tolerance");
    add_common(ca);

    CLI::App* cc = app.add_subcommand("cocycle-check", "exact cocycle identity and normalization on random triples");
    cc->add_option("--p", opt.p, "prime");
    cc->add_option("--group", opt.group, "g0 | k0 | heis");
    cc->add_option("--ring", opt.ring, "laurent | cyclo:m | zinvp | zmod:q (default depends on group)");
    cc->add_option("--trials", opt.trials, "number of random triples");
    cc->add_option("--seed", opt.seed, "RNG seed");
    add_common(cc);

    CLI::App* md = app.add_subcommand("marked-dist", "marked-group distances at a finite resolution");
    md->add_option("--p", opt.p, "prime");
    md->add_option("--pair", opt.pair, "z-vs-z2 | g-vs-lef");
    md->add_option("--kmax", opt.kmax, "resolution");
    md->add_option("--marked-set", opt.marked_set, "marked-set file (g-vs-lef)");
    add_common(md);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    int code = 2;
    try {
        if (nonhopf->parsed()) code = run_nonhopf(opt);
        else if (lef->parsed()) code = run_lef(opt);
        else if (sofic->parsed()) code = run_sofic(opt);
        else if (mg->parsed()) code = run_microstates_g(opt);
        else if (mk->parsed()) code = run_microstates_k(opt);
        else if (ca->parsed()) code = run_char_approx(opt);
        else if (cc->parsed()) code = run_cocycle_check(opt);
        else if (md->parsed()) code = run_marked_dist(opt);
    } catch (const gal::BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
    return code;
}
