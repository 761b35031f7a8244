#pragma once

/// JSON views of the verification reports (schema 1). Complex numbers are
/// emitted as [re, im] pairs, exact ratios as [num, den] pairs. Reports are
/// deterministic: same inputs, byte-identical output.

#include <complex>
#include <string>

#include "approx.hpp"
#include "lef.hpp"
#include "twisted.hpp"
#include "words.hpp"
#include "json.hpp"

namespace gal {

using ojson = nlohmann::ordered_json;

inline ojson json_complex(std::complex<double> z) { return ojson::array({z.real(), z.imag()}); }
inline ojson json_ratio(const Ratio& r) { return ojson::array({r.num, r.den}); }

inline ojson json_report(const LefReport& r) {
    ojson j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["F"] = r.f_size;
    j["domain"] = r.domain_size;
    j["injective"] = r.injective;
    j["violations"] = ojson::array();
    for (const auto& v : r.violations)
        j["violations"].push_back({{"kind", v.kind}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    j["pass"] = r.pass();
    return j;
}

inline ojson json_report(const SoficReport& r, bool details) {
    ojson j;
    j["eps"] = r.eps;
    j["identity_ok"] = r.identity_ok;
    j["pairs"] = r.pairs.size();
    j["pair_failures"] = r.pair_failures;
    j["elem_failures"] = r.elem_failures;
    Ratio worst_pair = Ratio::one(), worst_elem = Ratio::zero();
    for (const auto& p : r.pairs)
        if (p.ratio.value() < worst_pair.value()) worst_pair = p.ratio;
    for (const auto& e : r.elems)
        if (e.ratio.value() > worst_elem.value()) worst_elem = e.ratio;
    j["min_pair_ratio"] = json_ratio(worst_pair);
    j["max_elem_ratio"] = json_ratio(worst_elem);
    if (details) {
        j["elems"] = ojson::array();
        for (const auto& e : r.elems)
            j["elems"].push_back({{"g", e.g}, {"ratio", json_ratio(e.ratio)}, {"ok", e.ok}});
    }
    j["pass"] = r.pass();
    return j;
}

inline ojson json_word_stat(const WordStat& s) {
    return {{"word", word_str(s.word)},
            {"len", s.word.size()},
            {"trivial", s.trivial},
            {"trace", json_complex(s.trace)},
            {"deviation", s.deviation},
            {"exact_zero", s.exact_zero}};
}

inline ojson json_report(const MicrostateReport& r, bool per_word) {
    ojson j;
    j["max_len"] = r.max_len;
    j["eps"] = r.eps;
    j["words"] = r.word_count;
    j["max_deviation"] = r.max_deviation;
    j["all_exact"] = r.all_exact;
    j["failures"] = r.failures;
    j["worst"] = json_word_stat(r.worst);
    if (per_word) {
        j["per_word"] = ojson::array();
        for (const auto& s : r.words) j["per_word"].push_back(json_word_stat(s));
    }
    j["pass"] = r.pass();
    return j;
}

inline ojson json_report(const KMicrostates& r, bool per_word) {
    ojson j;
    j["k"] = r.k;
    j["q"] = r.q;
    j["residues"] = r.residues;
    j["ball_products"] = r.ball_products;
    j["microstates"] = json_report(r.report, per_word);
    j["pass"] = r.report.pass();
    return j;
}

inline ojson json_report(const CharApproxSolution& s) {
    ojson j;
    j["p"] = s.p();
    j["k"] = s.k();
    j["eps"] = s.eps();
    j["q"] = s.q();
    j["residues"] = s.residues();
    j["worst_deviation"] = s.worst_deviation();
    j["pass"] = true;  // the defining inequality is enforced at construction
    return j;
}

inline ojson json_report(const MarkedDistance& d) {
    ojson j;
    j["upper_bound"] = d.upper_bound;
    j["k"] = d.k;
    j["value"] = d.value();
    j["text"] = d.str();
    return j;
}

}  // namespace gal
