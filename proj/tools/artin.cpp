// Command line driver: builds the algebra family, runs the brute-force
// Betti oracle, replays the generating-function derivation, and reports
// everything as deterministic text/CSV/JSON.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "artin/algebra_json.hpp"
#include "artin/builders.hpp"
#include "artin/classification.hpp"
#include "artin/resolution.hpp"
#include "artin/series.hpp"

using namespace artin;
using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    std::string field = "rational";
    bool timing = false;
    Clock::time_point start = Clock::now();

    long runtime_ms() const {
        if (!timing) return 0;  // timing off keeps outputs byte-identical
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    }
    bool prime_mode() const { return field.rfind("prime:", 0) == 0; }
};

CLI::App* make_subcommand(CLI::App& app, const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print this help");  // frees -h for the positional h
    return cmd;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_field = true) {
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", o.out_path, "write the report to a file instead of stdout");
    if (with_field)
        cmd->add_option("--field", o.field, "ground field: rational (default) or prime:P");
    cmd->add_flag("--timing", o.timing, "report the measured runtime (off by default for reproducible output)");
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + o.out_path + "'");
    f << text;
}

// Configures GFp and enforces the heuristic bound p > 2(s+2) where s applies.
void setup_field(const CommonOpts& o, std::optional<long> s = std::nullopt) {
    if (!o.prime_mode()) {
        if (o.field != "rational")
            throw std::invalid_argument("unknown field '" + o.field + "' (use rational or prime:P)");
        return;
    }
    const unsigned long p = std::stoul(o.field.substr(6));
    GFp::set_modulus(p);
    if (s && p <= 2 * static_cast<unsigned long>(*s + 2))
        throw std::invalid_argument("prime field heuristic requires p > 2(s+2)");
}

std::string watermark_line(const CommonOpts& o) {
    return o.prime_mode() ? "field: " + o.field + " (characteristic-p heuristic)\n" : "";
}

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string join_mpz(const std::vector<mpz_class>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s;
}

ordered_json hilbert_json(const HilbertFunction& hf) {
    return ordered_json(hf.values);
}

// ---------------------------------------------------------------- build ----

struct BuildArgs {
    long h = 0, s = 0, t = 0;
    std::string a = "0";
    bool stretched = false;
    std::string algebra_out;
};

template <class K>
int run_build(const BuildArgs& args, const CommonOpts& o) {
    AlmostStretchedParams p{args.h, args.s, args.t, Rational::from_string(args.a), args.stretched};
    auto A = build_almost_stretched<K>(p);
    auto hf = hilbert_function(A);
    auto cls = classify(A);
    auto soc = socle(A);
    auto shape = almost_stretched_shape_params(hf);

    bool shape_matches;
    std::string shape_str;
    if (p.t == 1) {
        shape_matches = is_stretched_shape(hf);
        shape_str = "stretched";
    } else {
        shape_matches = shape && shape->first == p.s && shape->second == p.t;
        shape_str = shape ? "s=" + std::to_string(shape->first) + " t=" + std::to_string(shape->second)
                          : "none";
    }

    ordered_json j;
    j["command"] = "build";
    j["params"] = ordered_json{{"h", p.h}, {"s", p.s}, {"t", p.t}, {"a", p.a.str()},
                               {"stretched", p.stretched_t1}, {"field", o.field}};
    j["summary"] = ordered_json{{"dimension", A.dim()},
                                {"hilbert", hilbert_json(hf)},
                                {"multiplicity", multiplicity(A)},
                                {"embedding_dimension", embedding_dimension(A)},
                                {"socle_dimension", soc.dim()},
                                {"gorenstein", soc.dim() == 1},
                                {"classification", kind_name(cls.kind)},
                                {"shape_params", shape_str},
                                {"shape_matches_params", shape_matches}};
    j["algebra"] = algebra_to_json(A);
    j["runtime_ms"] = o.runtime_ms();

    if (!args.algebra_out.empty()) {
        std::ofstream f(args.algebra_out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open '" + args.algebra_out + "'");
        f << algebra_to_json(A).dump(2) << "\n";
    }

    if (o.format == "json") {
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "algebra: " << (p.t == 1 ? "stretched" : "almost stretched") << " gorenstein (h=" << p.h
            << ", s=" << p.s << ", t=" << p.t << ", a=" << p.a.str() << ")\n"
            << watermark_line(o)
            << "dimension: " << A.dim() << "\n"
            << "hilbert: " << hf.str() << "\n"
            << "multiplicity: " << multiplicity(A) << "\n"
            << "embedding_dimension: " << embedding_dimension(A) << "\n"
            << "socle_dimension: " << soc.dim() << "\n"
            << "gorenstein: " << (soc.dim() == 1 ? "yes" : "no") << "\n"
            << "classification: " << kind_name(cls.kind) << "\n"
            << "shape_params: " << shape_str << "\n"
            << "shape_matches_params: " << (shape_matches ? "yes" : "no") << "\n";
        if (o.timing) out << "runtime_ms: " << o.runtime_ms() << "\n";
        emit(o, out.str());
    }
    return 0;
}

// ---------------------------------------------------------------- betti ----

struct BettiArgs {
    std::string variant;
    std::vector<std::string> params;
    std::string algebra_file;
    long depth = 5;
    long dim_cap = 20000;
    bool stretched = false;
    bool with_maps = false;
};

struct PreparedBetti {
    std::vector<std::size_t> betti;
    bool truncated = false;
    std::optional<RationalSeries> expected;
    std::string description;
    ordered_json maps;
};

template <class K>
PreparedBetti prepare_betti(const BettiArgs& args) {
    PreparedBetti out;
    auto need = [&args](std::size_t n) {
        if (args.params.size() != n)
            throw std::invalid_argument("variant " + args.variant + " takes " + std::to_string(n) +
                                        " parameters");
    };
    std::optional<FiniteLocalAlgebra<K>> A;
    if (args.variant == "A" || args.variant == "RK") {
        need(4);
        AlmostStretchedParams p{std::stol(args.params[0]), std::stol(args.params[1]),
                                std::stol(args.params[2]), Rational::from_string(args.params[3]),
                                args.stretched};
        A = args.variant == "A" ? build_almost_stretched<K>(p) : build_socle_quotient<K>(p);
        out.expected = args.variant == "A"
                           ? poincare_closed_form(0, p.h)
                           : RationalSeries(IntPolynomial(1), IntPolynomial(std::vector<mpz_class>{1, -p.h}));
        out.description = args.variant + " (h=" + std::to_string(p.h) + ", s=" + std::to_string(p.s) +
                          ", t=" + std::to_string(p.t) + ", a=" + p.a.str() + ")";
    } else if (args.variant == "SL" || args.variant == "SV") {
        need(3);
        const long s = std::stol(args.params[0]);
        const long t = std::stol(args.params[1]);
        const Rational a = Rational::from_string(args.params[2]);
        A = args.variant == "SV" ? build_embdim2_gorenstein<K>(s, t, a, args.stretched)
                                 : build_embdim2_socle_quotient<K>(s, t, a, args.stretched);
        out.expected = args.variant == "SV"
                           ? RationalSeries(IntPolynomial(1), IntPolynomial(std::vector<mpz_class>{1, -2, 1}))
                           : RationalSeries(IntPolynomial(1), IntPolynomial(std::vector<mpz_class>{1, -2}));
        out.description = args.variant + " (s=" + std::to_string(s) + ", t=" + std::to_string(t) +
                          ", a=" + a.str() + ")";
    } else if (args.variant == "custom") {
        need(0);
        if (args.algebra_file.empty())
            throw std::invalid_argument("variant custom requires --algebra-file");
        std::ifstream f(args.algebra_file);
        if (!f) throw std::runtime_error("cannot open '" + args.algebra_file + "'");
        nlohmann::json aj = nlohmann::json::parse(f);
        A = algebra_from_json<K>(aj);
        out.description = "custom (" + args.algebra_file + ")";
    } else {
        throw std::invalid_argument("unknown variant '" + args.variant + "' (A, RK, SL, SV, custom)");
    }

    auto res = minimal_resolution(*A, static_cast<std::size_t>(args.depth),
                                  static_cast<std::size_t>(args.dim_cap));
    out.betti = res.betti;
    out.truncated = res.truncated;
    if (args.with_maps) out.maps = resolution_to_json(res)["maps"];
    return out;
}

template <class K>
int run_betti(const BettiArgs& args, const CommonOpts& o) {
    PreparedBetti r = prepare_betti<K>(args);

    std::vector<mpz_class> expansion;
    bool match = false;
    if (r.expected && !r.betti.empty())
        expansion = r.expected->expand(r.betti.size() - 1);
    if (r.expected) {
        match = expansion.size() == r.betti.size();
        for (std::size_t i = 0; match && i < r.betti.size(); ++i)
            match = expansion[i] == static_cast<long>(r.betti[i]);
    }

    if (o.format == "csv") {
        std::ostringstream out;
        out << "i,b_i\n";
        for (std::size_t i = 0; i < r.betti.size(); ++i) out << i << "," << r.betti[i] << "\n";
        emit(o, out.str());
    } else if (o.format == "json") {
        ordered_json j;
        j["command"] = "betti";
        j["params"] = ordered_json{{"variant", args.variant},
                                   {"params", args.params},
                                   {"depth", args.depth},
                                   {"dim_cap", args.dim_cap},
                                   {"field", o.field}};
        if (o.prime_mode()) j["watermark"] = "characteristic-p heuristic";
        j["betti"] = r.betti;
        j["truncated"] = r.truncated;
        if (r.expected) {
            j["expected_series"] = r.expected->str();
            ordered_json exp = ordered_json::array();
            for (const auto& c : expansion) exp.push_back(c.get_str());
            j["expected"] = exp;
            j["match"] = match;
        }
        if (args.with_maps) j["maps"] = r.maps;
        j["runtime_ms"] = o.runtime_ms();
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "variant: " << r.description << "\n" << watermark_line(o);
        if (r.expected) out << "expected_series: " << r.expected->str() << "\n";
        out << (r.expected ? "i,b_i,series_i\n" : "i,b_i\n");
        for (std::size_t i = 0; i < r.betti.size(); ++i) {
            out << i << "," << r.betti[i];
            if (r.expected) out << "," << expansion[i].get_str();
            out << "\n";
        }
        if (r.truncated) out << "truncated: yes (dim_cap " << args.dim_cap << ")\n";
        if (r.expected) out << "match: " << (match ? "yes" : "no") << "\n";
        if (o.timing) out << "runtime_ms: " << o.runtime_ms() << "\n";
        emit(o, out.str());
    }
    if (r.expected && !match) return 1;
    return 0;
}

// --------------------------------------------------------------- verify ----

struct VerifyArgs {
    long h = 0, s = 0, t = 0;
    std::string a = "0";
    long d = 0;
    long depth = 5;
    long dim_cap = 20000;
    bool stretched = false;
    bool tamper = false;
};

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

template <class K>
int run_verify(const VerifyArgs& args, const CommonOpts& o) {
    AlmostStretchedParams p{args.h, args.s, args.t, Rational::from_string(args.a), args.stretched};
    p.validate();
    const std::size_t depth = static_cast<std::size_t>(args.depth);
    const std::size_t cap = static_cast<std::size_t>(args.dim_cap);

    std::vector<Check> checks;
    auto add = [&checks](const std::string& name, std::string expected, std::string actual) {
        bool pass = expected == actual;
        checks.push_back({name, std::move(expected), std::move(actual), pass});
    };

    auto A = build_almost_stretched<K>(p);
    auto RK = build_socle_quotient<K>(p);
    auto SV = build_embdim2_gorenstein<K>(p.s, p.t, p.a, p.stretched_t1);
    auto SL = build_embdim2_socle_quotient<K>(p.s, p.t, p.a, p.stretched_t1);

    auto res_A = minimal_resolution(A, depth, cap);
    auto res_RK = minimal_resolution(RK, depth, cap);
    auto res_SV = minimal_resolution(SV, depth, cap);
    auto res_SL = minimal_resolution(SL, depth, cap);

    auto series_1_over = [](std::vector<mpz_class> den) {
        return RationalSeries(IntPolynomial(1), IntPolynomial(std::move(den)));
    };
    RationalSeries expected_A = poincare_closed_form(0, p.h);
    if (args.tamper) expected_A = series_1_over({1, -p.h, 2});  // test hook: corrupt the target
    auto expect_betti = [&](const std::string& name, const std::vector<std::size_t>& betti,
                            const RationalSeries& series) {
        add(name, join_mpz(series.expand(betti.empty() ? 0 : betti.size() - 1)), join_sizes(betti));
    };

    expect_betti("betti_A_matches_closed_form", res_A.betti, expected_A);
    expect_betti("betti_RK_matches_geometric_series", res_RK.betti, series_1_over({1, -p.h}));
    expect_betti("betti_SL_matches_geometric_series", res_SL.betti, series_1_over({1, -2}));
    expect_betti("betti_SV_matches_binomial_series", res_SV.betti, series_1_over({1, -2, 1}));

    auto der = poincare_via_change_of_rings(args.d, p.h);
    add("derivation_final_matches_closed_form", poincare_closed_form(args.d, p.h).str(),
        der.final.str());
    add("derivation_embdim2_gorenstein", series_1_over({1, -2, 1}).str(),
        der.find("embdim2_gorenstein")->str());
    add("derivation_embdim2_socle_quotient", series_1_over({1, -2}).str(),
        der.find("embdim2_socle_quotient")->str());
    add("derivation_socle_quotient", series_1_over({1, -p.h}).str(),
        der.find("socle_quotient")->str());
    add("derivation_artinian_gorenstein", series_1_over({1, -p.h, 1}).str(),
        der.find("artinian_gorenstein")->str());

    {
        RationalSeries lifted = poincare_closed_form(0, p.h);
        for (long i = 0; i < args.d; ++i) lifted = regular_lift(lifted, false);
        add("closed_form_compatible_with_regular_lifts", poincare_closed_form(args.d, p.h).str(),
            lifted.str());
    }

    auto hf = hilbert_function(A);
    if (p.t == 1) {
        add("hilbert_is_stretched_shape", "yes", is_stretched_shape(hf) ? "yes" : "no");
    } else {
        std::vector<long> v{1, p.h};
        v.insert(v.end(), static_cast<std::size_t>(p.t - 1), 2);
        v.insert(v.end(), static_cast<std::size_t>(p.s - p.t), 1);
        add("hilbert_matches_shape_table", HilbertFunction(v).str(), hf.str());
        auto shape = almost_stretched_shape_params(hf);
        add("shape_params_round_trip", "s=" + std::to_string(p.s) + " t=" + std::to_string(p.t),
            shape ? "s=" + std::to_string(shape->first) + " t=" + std::to_string(shape->second)
                  : "none");
    }

    add("socle_dimension_A", "1", std::to_string(socle(A).dim()));
    add("socle_dimension_SV", "1", std::to_string(socle(SV).dim()));
    add("socle_quotient_of_A_is_RK", "isomorphic",
        tables_isomorphic_by_labels(quotient(A, socle(A)), RK) ? "isomorphic" : "different");
    add("socle_quotient_of_SV_is_SL", "isomorphic",
        tables_isomorphic_by_labels(quotient(SV, socle(SV)), SL) ? "isomorphic" : "different");

    if (p.h >= 3) {
        // the extra variables must be degree-one socle elements of RK
        auto soc = socle(RK);
        auto msq = maximal_ideal_times(RK, RK.maximal_ideal());
        bool ok = true;
        for (long jv = 3; jv <= p.h; ++jv) {
            auto idx = RK.index_of({0, 0, jv});
            if (!idx) { ok = false; break; }
            auto v = SparseVec<K>::unit(static_cast<std::uint32_t>(*idx));
            if (!soc.contains_vector(v) || msq.contains_vector(v)) ok = false;
        }
        add("extra_variables_are_socle_elements_of_RK", "yes", ok ? "yes" : "no");
    }

    add("resolution_checks_A", "all-pass", verify_resolution(res_A).all_pass() ? "all-pass" : "fail");
    add("resolution_checks_RK", "all-pass", verify_resolution(res_RK).all_pass() ? "all-pass" : "fail");
    add("resolution_checks_SL", "all-pass", verify_resolution(res_SL).all_pass() ? "all-pass" : "fail");
    add("resolution_checks_SV", "all-pass", verify_resolution(res_SV).all_pass() ? "all-pass" : "fail");

    add("classification_A", p.t == 1 ? "stretched" : "almost_stretched", kind_name(classify(A).kind));

    bool all_pass = true;
    std::string first_fail;
    for (const auto& c : checks) {
        if (!c.pass && all_pass) first_fail = c.name;
        all_pass = all_pass && c.pass;
    }

    if (o.format == "json") {
        ordered_json j;
        j["command"] = "verify";
        j["params"] = ordered_json{{"h", p.h}, {"s", p.s}, {"t", p.t}, {"a", p.a.str()},
                                   {"d", args.d}, {"depth", args.depth}, {"field", o.field}};
        if (o.prime_mode()) j["watermark"] = "characteristic-p heuristic";
        ordered_json cj = ordered_json::array();
        for (const auto& c : checks)
            cj.push_back(ordered_json{{"name", c.name}, {"expected", c.expected},
                                      {"actual", c.actual}, {"pass", c.pass}});
        j["checks"] = std::move(cj);
        j["pass"] = all_pass;
        j["runtime_ms"] = o.runtime_ms();
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "verify (h=" << p.h << ", s=" << p.s << ", t=" << p.t << ", a=" << p.a.str()
            << ", d=" << args.d << ", depth=" << args.depth << ")\n"
            << watermark_line(o);
        for (const auto& c : checks) {
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
            if (!c.pass) out << ": expected " << c.expected << "; got " << c.actual;
            out << "\n";
        }
        out << "result: " << (all_pass ? "PASS" : "FAIL") << " (" << checks.size() << " checks)\n";
        if (o.timing) out << "runtime_ms: " << o.runtime_ms() << "\n";
        emit(o, out.str());
    }
    if (!all_pass) {
        std::cerr << "verify failed at: " << first_fail << "\n";
        return 1;
    }
    return 0;
}

// ----------------------------------------------------- classify/poincare ----

int run_classify(long e, long h, const CommonOpts& o) {
    auto shapes = possible_gorenstein_hilbert_functions(e, h);
    auto guarantee = poincare_rationality_guarantee(e, h);

    if (o.format == "json") {
        ordered_json j;
        j["command"] = "classify";
        j["params"] = ordered_json{{"e", e}, {"h", h}};
        ordered_json arr = ordered_json::array();
        for (const auto& hf : shapes) arr.push_back(hilbert_json(hf));
        j["hilbert_functions"] = std::move(arr);
        j["rationality"] = ordered_json{{"guaranteed", guarantee.guaranteed},
                                        {"rule", guarantee.rule},
                                        {"reason", guarantee.reason}};
        j["runtime_ms"] = o.runtime_ms();
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "possible_hilbert_functions (e=" << e << ", h=" << h << "):\n";
        if (shapes.empty()) out << "  (none: e = h + 1 has maximal ideal square zero)\n";
        for (const auto& hf : shapes) out << "  " << hf.str() << "\n";
        out << "rational: " << (guarantee.guaranteed ? "yes" : "no guarantee") << " ("
            << guarantee.reason << ")\n";
        if (o.timing) out << "runtime_ms: " << o.runtime_ms() << "\n";
        emit(o, out.str());
    }
    return 0;
}

int run_poincare(long d, long h, long expand, const CommonOpts& o) {
    auto p = poincare_closed_form(d, h);
    auto coeffs = p.expand(static_cast<std::size_t>(expand));

    if (o.format == "json") {
        ordered_json j;
        j["command"] = "poincare";
        j["params"] = ordered_json{{"d", d}, {"h", h}, {"expand", expand}};
        j["series"] = p.to_json();
        j["series_string"] = p.str();
        ordered_json arr = ordered_json::array();
        for (const auto& c : coeffs) arr.push_back(c.get_str());
        j["coefficients"] = std::move(arr);
        j["runtime_ms"] = o.runtime_ms();
        emit(o, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "series: " << p.str() << "\n"
            << "coefficients: " << join_mpz(coeffs) << "\n";
        if (o.timing) out << "runtime_ms: " << o.runtime_ms() << "\n";
        emit(o, out.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"artin: Betti numbers and Poincare series of almost stretched Gorenstein algebras"};
    app.require_subcommand(1);

    BuildArgs build_args;
    CommonOpts build_opts;
    auto* cmd_build = make_subcommand(app, "build", "construct an algebra and summarize it");
    cmd_build->add_option("h", build_args.h, "embedding dimension (>= 2)")->required();
    cmd_build->add_option("s", build_args.s, "socle degree")->required();
    cmd_build->add_option("t", build_args.t, "shape parameter (s >= t+1 >= 3)")->required();
    cmd_build->add_option("a", build_args.a, "defining scalar (rational, e.g. 2 or 1/3)")->required();
    cmd_build->add_flag("--stretched", build_args.stretched, "admit t = 1 (stretched structure)");
    cmd_build->add_option("--algebra-out", build_args.algebra_out, "also write the algebra JSON here");
    add_common(cmd_build, build_opts);

    BettiArgs betti_args;
    CommonOpts betti_opts;
    auto* cmd_betti = make_subcommand(app, "betti", "Betti table via the minimal free resolution");
    cmd_betti->add_option("variant", betti_args.variant, "A | RK | SL | SV | custom")->required();
    cmd_betti->add_option("params", betti_args.params,
                          "h s t a for A/RK; s t a for SL/SV; none for custom");
    cmd_betti->add_option("--depth", betti_args.depth, "number of resolution steps")->check(CLI::NonNegativeNumber);
    cmd_betti->add_option("--dim-cap", betti_args.dim_cap, "k-dimension cap per free module");
    cmd_betti->add_option("--algebra-file", betti_args.algebra_file, "algebra JSON for variant custom");
    cmd_betti->add_flag("--stretched", betti_args.stretched, "admit t = 1");
    cmd_betti->add_flag("--maps", betti_args.with_maps, "include the differentials in JSON output");
    add_common(cmd_betti, betti_opts);

    VerifyArgs verify_args;
    CommonOpts verify_opts;
    auto* cmd_verify = make_subcommand(app, "verify", "run the full oracle-vs-series pipeline");
    cmd_verify->add_option("h", verify_args.h)->required();
    cmd_verify->add_option("s", verify_args.s)->required();
    cmd_verify->add_option("t", verify_args.t)->required();
    cmd_verify->add_option("a", verify_args.a)->required();
    cmd_verify->add_option("--d", verify_args.d, "ring dimension for the symbolic part")->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--depth", verify_args.depth, "resolution depth");
    cmd_verify->add_option("--dim-cap", verify_args.dim_cap, "k-dimension cap per free module");
    cmd_verify->add_flag("--stretched", verify_args.stretched, "admit t = 1");
    cmd_verify->add_flag("--tamper", verify_args.tamper)->group("");  // test hook, hidden
    add_common(cmd_verify, verify_opts);

    long classify_e = 0, classify_h = 0;
    CommonOpts classify_opts;
    auto* cmd_classify = make_subcommand(app, "classify", "possible Hilbert functions and rationality");
    cmd_classify->add_option("e", classify_e, "multiplicity")->required();
    cmd_classify->add_option("h", classify_h, "embedding codimension")->required();
    add_common(cmd_classify, classify_opts, false);

    long poincare_d = 0, poincare_h = 0, poincare_expand = 5;
    CommonOpts poincare_opts;
    auto* cmd_poincare = make_subcommand(app, "poincare", "closed-form Poincare series");
    cmd_poincare->add_option("d", poincare_d, "dimension")->required();
    cmd_poincare->add_option("h", poincare_h, "embedding codimension")->required();
    cmd_poincare->add_option("--expand", poincare_expand, "number of coefficients to expand");
    add_common(cmd_poincare, poincare_opts, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_build->parsed()) {
            setup_field(build_opts, build_args.s);
            return build_opts.prime_mode() ? run_build<GFp>(build_args, build_opts)
                                           : run_build<Rational>(build_args, build_opts);
        }
        if (cmd_betti->parsed()) {
            std::optional<long> s;
            if (betti_args.variant == "A" || betti_args.variant == "RK") {
                if (betti_args.params.size() > 1) s = std::stol(betti_args.params[1]);
            } else if (!betti_args.params.empty() && betti_args.variant != "custom") {
                s = std::stol(betti_args.params[0]);
            }
            setup_field(betti_opts, s);
            return betti_opts.prime_mode() ? run_betti<GFp>(betti_args, betti_opts)
                                           : run_betti<Rational>(betti_args, betti_opts);
        }
        if (cmd_verify->parsed()) {
            setup_field(verify_opts, verify_args.s);
            return verify_opts.prime_mode() ? run_verify<GFp>(verify_args, verify_opts)
                                            : run_verify<Rational>(verify_args, verify_opts);
        }
        if (cmd_classify->parsed()) return run_classify(classify_e, classify_h, classify_opts);
        if (cmd_poincare->parsed())
            return run_poincare(poincare_d, poincare_h, poincare_expand, poincare_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
