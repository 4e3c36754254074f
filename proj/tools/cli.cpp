#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "hb/hb_transform.hpp"
#include "hb/hodograph.hpp"
#include "hb/io.hpp"
#include "hb/jacobi.hpp"
#include "hb/perturb.hpp"

namespace hb::cli {

namespace {

using io::json;

struct Options {
    std::optional<double> tol;
    std::string input;
    // inverse
    std::string kind;
    std::optional<double> k;
    std::optional<double> xi;
    std::optional<double> ratio;
    // hodograph
    std::string csv_path;
    std::string svg_path;
    // verify
    int random_count = 0;
    std::uint64_t seed = 1;
    int size = 6;
};

Tolerances tolerances(const Options& o) {
    Tolerances t;
    if (o.tol) {
        if (!(*o.tol > 0)) throw ValidationError("--tol must be positive");
        t.angle = t.simple_zero = t.division_residual = *o.tol;
    }
    return t;
}

json read_document(const Options& o, std::istream& in) {
    std::stringstream buf;
    if (o.input.empty() || o.input == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(o.input);
        if (!f) throw ValidationError("cannot open input file " + o.input);
        buf << f.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

std::optional<double> optional_number(const json& doc, const char* key, const std::optional<double>& flag) {
    if (flag) return flag;
    if (doc.is_object() && doc.contains(key)) {
        if (!doc.at(key).is_number()) throw ValidationError(std::string(key) + " must be a number");
        return doc.at(key).get<double>();
    }
    return std::nullopt;
}

double max_modulus(const std::vector<cplx>& zs) {
    double r = 0.0;
    for (const cplx& z : zs) r = std::max(r, std::abs(z));
    return r;
}

// Break point and pencil parameter of the perturbation, if it has one.
struct Pencil {
    cplx alpha;
    double xi;
};

std::optional<Pencil> pencil_of(const JacobiMatrix& J, const PerturbationSpec& spec) {
    if (const auto* s = std::get_if<MultiplicativeRank1>(&spec)) return Pencil{alpha_from_k(s->k), 0.0};
    if (const auto* s = std::get_if<Rank2>(&spec)) return Pencil{alpha_from_k(s->m / J.a()[0]), rank2_shift(J, *s)};
    return std::nullopt;
}

json spectrum_report(const JacobiMatrix& J, const PerturbationSpec& spec, const ZeroSet& zeros, const Tolerances& tol) {
    json out;
    if (const auto pencil = pencil_of(J, spec)) {
        const double limit = tol.simple_zero * (1.0 + max_modulus(zeros.zeros()));
        std::vector<cplx> rest;
        int isolated = 0;
        for (const cplx& z : zeros.zeros()) {
            if (std::abs(z - pencil->xi) <= limit)
                ++isolated;
            else
                rest.push_back(z);
        }
        const ZeroSet classified = isolated == 1 ? ZeroSet(rest, tol.real_axis) : zeros;
        out = io::to_json(classify_config(classified, pencil->alpha, pencil->xi, tol));
        out["xi"] = pencil->xi;
        out["alpha"] = io::to_json(pencil->alpha);
        out["deflated_zero"] = isolated == 1;
        return out;
    }
    double sum_im = 0.0;
    for (const cplx& z : zeros.zeros()) sum_im += z.imag();
    out["n_plus"] = zeros.n_plus();
    out["n_minus"] = zeros.n_minus();
    out["sum_im"] = sum_im;
    if (zeros.n_real() == 0) out["arg_sum"] = arg_sum(zeros);
    if (zeros.n_plus() == static_cast<int>(zeros.size())) {
        const Localization loc = localization(zeros, tol);
        out["verdict"] = "UpperHalfPlane";
        out["localization"] = {{"s", loc.s}, {"at_boundary", loc.at_boundary}};
    } else if (zeros.n_minus() == static_cast<int>(zeros.size())) {
        out["verdict"] = "LowerHalfPlane";
    } else {
        out["verdict"] = zeros.n_real() > 0 ? "HasRealZero" : "Mixed";
    }
    return out;
}

int cmd_spectrum(const Options& o, std::istream& in, std::ostream& out) {
    const json doc = read_document(o, in);
    const JacobiMatrix J = io::jacobi_from_json(doc.contains("jacobi") ? doc.at("jacobi") : doc);
    const PerturbationSpec spec =
        io::perturbation_from_json(doc.contains("perturbation") ? doc.at("perturbation") : json::object());
    const Tolerances tol = tolerances(o);
    const ComplexPoly h = perturbed_char_poly(J, spec);
    const ZeroSet zeros = roots(h);
    json result{{"zeros", io::to_json(zeros.zeros())},
                {"char_poly", io::to_json(h)},
                {"perturbation", io::to_json(spec)},
                {"report", spectrum_report(J, spec, zeros, tol)}};
    out << result.dump(2) << '\n';
    return kOk;
}

int cmd_inverse(const Options& o, std::istream& in, std::ostream& out) {
    const json doc = read_document(o, in);
    const Tolerances tol = tolerances(o);
    const ZeroSet zeros(io::zeros_from_json(doc.contains("zeros") ? doc.at("zeros") : doc), tol.real_axis);
    std::string kind = o.kind;
    if (kind.empty() && doc.is_object() && doc.contains("kind") && doc.at("kind").is_string())
        kind = doc.at("kind").get<std::string>();
    const auto k = optional_number(doc, "k", o.k);
    const auto xi = optional_number(doc, "xi", o.xi);
    const auto ratio = optional_number(doc, "A", o.ratio);

    json result;
    if (kind == "additive") {
        const auto sol = inverse_additive(zeros, tol);
        result = {{"jacobi", io::to_json(sol.jacobi)}, {"l", sol.l}, {"residual", sol.residual}};
    } else if (kind == "multiplicative") {
        const auto sol = inverse_multiplicative(zeros, k, tol);
        result = {{"jacobi", io::to_json(sol.jacobi)},
                  {"k", sol.k},
                  {"singular", sol.singular},
                  {"residual", sol.residual}};
    } else if (kind == "rank2") {
        if (!xi) throw ValidationError("rank2 inverse problem needs xi");
        const auto sol = inverse_rank2(zeros, *xi, ratio, tol);
        result = {{"jacobi", io::to_json(sol.jacobi)}, {"l", sol.l},           {"m", sol.m},
                  {"xi", sol.xi},                      {"singular", sol.singular}, {"residual", sol.residual}};
    } else {
        throw ValidationError("inverse: kind must be additive, multiplicative or rank2");
    }
    result["kind"] = kind;
    out << result.dump(2) << '\n';
    return kOk;
}

ComplexPoly poly_from_document(const json& doc) {
    if (doc.is_object() && doc.contains("coeffs")) return ComplexPoly::monic(io::poly_from_json(doc).coeffs());
    const json& zs = doc.is_object() && doc.contains("zeros") ? doc.at("zeros") : doc;
    return from_roots(io::zeros_from_json(zs));
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out) {
    const json doc = read_document(o, in);
    const Tolerances tol = tolerances(o);
    const ComplexPoly h = poly_from_document(doc);
    if (h.degree() == 0) throw ValidationError("decompose: polynomial must have degree >= 1");

    const ClassicalSplit split = classical_split(h);
    json result{{"h", io::to_json(h)}, {"p", io::to_json(split.p)}, {"l", split.l}, {"hermitian", split.hermitian()}};
    if (split.q) {
        result["q"] = io::to_json(*split.q);
        if (split.q->degree() + 1 == split.p.degree()) {
            const HbCheck check = hb_verify(split.p, *split.q, split.l, tol);
            result["hermite_biehler"] = {{"holds", check.holds},
                                         {"roots_in_upper_half_plane", check.combined_in_upper},
                                         {"agree", check.agree},
                                         {"reason", check.reason}};
        }
    }

    std::optional<cplx> alpha;
    if (doc.is_object() && doc.contains("alpha")) alpha = io::complex_from_json(doc.at("alpha"));
    if (const auto k = optional_number(doc, "k", o.k)) alpha = alpha_from_k(*k);
    if (alpha) {
        const double xi = optional_number(doc, "xi", o.xi).value_or(0.0);
        const GeneralizedSplit gs = generalized_split(h, *alpha, xi, tol);
        json g{{"verdict", std::string(to_string(gs.report.verdict))},
               {"report", io::to_json(gs.report)},
               {"p", io::to_json(gs.p)},
               {"lams", gs.lams},
               {"mus", gs.mus},
               {"s", gs.s},
               {"interlacing_ok", gs.interlacing_ok},
               {"xi", xi}};
        g[gs.report.verdict == Verdict::Equal ? "q" : "r"] = io::to_json(gs.second);
        if (!gs.warning.empty()) g["warning"] = gs.warning;
        result["generalized"] = g;
    }
    out << result.dump(2) << '\n';
    return kOk;
}

int cmd_hodograph(const Options& o, std::istream& in, std::ostream& out) {
    const json doc = read_document(o, in);
    const Tolerances tol = tolerances(o);
    std::vector<cplx> zs;
    if (doc.is_object() && doc.contains("coeffs"))
        zs = roots(io::poly_from_json(doc)).zeros();
    else
        zs = io::zeros_from_json(doc.is_object() && doc.contains("zeros") ? doc.at("zeros") : doc);
    const ZeroSet zeros(zs, tol.real_axis);
    if (zeros.n_real() > 0) throw ValidationError("hodograph: h has a real zero, the phase is undefined");

    const PhaseIncrement inc = phase_increment(zeros);
    const auto samples = trace_hodograph(zeros);
    if (!o.csv_path.empty()) {
        std::ofstream f(o.csv_path);
        if (!f) throw ValidationError("cannot write " + o.csv_path);
        io::write_hodograph_csv(f, samples);
    }
    if (!o.svg_path.empty()) {
        std::ofstream f(o.svg_path);
        if (!f) throw ValidationError("cannot write " + o.svg_path);
        io::write_hodograph_svg(f, samples);
    }
    json result{{"delta_symbolic", inc.symbolic},
                {"delta_numeric", inc.numeric},
                {"n_plus", zeros.n_plus()},
                {"n_minus", zeros.n_minus()},
                {"samples", samples.size()}};
    out << result.dump(2) << '\n';
    return kOk;
}

// ---- verify ---------------------------------------------------------------

struct Check {
    std::string name;
    bool pass;
    double value;
};

double max_entry_diff(const JacobiMatrix& x, const JacobiMatrix& y) {
    if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x.b()[i] - y.b()[i]));
    for (std::size_t i = 0; i + 1 < x.size(); ++i) d = std::max(d, std::abs(x.a()[i] - y.a()[i]));
    return d;
}

std::vector<Check> verify_instance(const JacobiMatrix& J, const PerturbationSpec& spec, const Tolerances& tol) {
    std::vector<Check> checks;
    const auto polys = char_polys(J);
    const auto lams = eigen(J);
    const auto mus = J.size() > 1 ? eigen(J.truncated(1)) : std::vector<double>{};

    double eig_gap = 0.0;
    const auto p0_roots = real_roots(polys[0]);
    for (std::size_t i = 0; i < lams.size(); ++i) eig_gap = std::max(eig_gap, std::abs(lams[i] - p0_roots[i]));
    checks.push_back({"eigen_matches_char_poly", eig_gap <= 1e-9 * (1.0 + std::abs(lams.back())), eig_gap});

    const auto w = spectral_weights(lams, mus);
    double wsum = 0.0;
    bool positive = true;
    for (double x : w) {
        wsum += x;
        positive = positive && x > 0;
    }
    checks.push_back({"spectral_weights_positive_sum_one", positive && std::abs(wsum - 1.0) <= 1e-10, wsum - 1.0});

    const double rec = max_entry_diff(reconstruct(lams, mus, tol.interlace_separation), J);
    checks.push_back({"reconstruct_round_trip", rec < 1e-6, rec});

    const ZeroSet zeros = spectrum(J, spec);
    if (const auto* s = std::get_if<AdditiveRank1>(&spec)) {
        double sum_im = 0.0;
        for (const cplx& z : zeros.zeros()) sum_im += z.imag();
        checks.push_back({"imaginary_parts_sum_to_l", std::abs(sum_im - s->l) <= 1e-8 * (1.0 + std::abs(s->l)),
                          sum_im - s->l});
        if (s->l > 0) {
            checks.push_back({"all_zeros_upper_half_plane", zeros.n_plus() == static_cast<int>(zeros.size()),
                              static_cast<double>(zeros.n_plus())});
            const auto sol = inverse_additive(zeros, tol);
            checks.push_back({"inverse_recovers_matrix", max_entry_diff(sol.jacobi, J) < 1e-6,
                              max_entry_diff(sol.jacobi, J)});
            checks.push_back({"inverse_recovers_l", std::abs(sol.l - s->l) <= 1e-8 * (1.0 + s->l), sol.l - s->l});
        }
        return checks;
    }

    const Pencil pencil = *pencil_of(J, spec);
    const double limit = tol.simple_zero * (1.0 + std::abs(lams.back()) + std::abs(lams.front()));
    const bool singular = std::any_of(lams.begin(), lams.end(), [&](double x) { return std::abs(x - pencil.xi) <= limit; });
    const int above = static_cast<int>(std::count_if(lams.begin(), lams.end(), [&](double x) { return x > pencil.xi + limit; }));
    const int below = static_cast<int>(std::count_if(lams.begin(), lams.end(), [&](double x) { return x < pencil.xi - limit; }));

    const double zero_limit = tol.simple_zero * (1.0 + max_modulus(zeros.zeros()));
    std::vector<cplx> rest;
    for (const cplx& z : zeros.zeros())
        if (!singular || std::abs(z - pencil.xi) > zero_limit) rest.push_back(z);
    if (singular) checks.push_back({"simple_zero_at_break_point", rest.size() + 1 == zeros.size(), 0.0});
    const ConfigReport rep = classify_config(ZeroSet(rest, tol.real_axis), pencil.alpha, pencil.xi, tol);
    const Verdict expected = singular ? Verdict::Less : Verdict::Equal;
    checks.push_back({"verdict_" + std::string(to_string(expected)), rep.verdict == expected, rep.arg_sum - rep.arg_alpha});
    checks.push_back({"counts_match_eigenvalue_signs", rep.n_plus == above && rep.n_minus == below,
                      static_cast<double>(rep.n_plus - above)});

    if (const auto* s = std::get_if<MultiplicativeRank1>(&spec)) {
        const auto sol = singular ? inverse_multiplicative(zeros, s->k, tol) : inverse_multiplicative(zeros, std::nullopt, tol);
        checks.push_back({"inverse_recovers_matrix", max_entry_diff(sol.jacobi, J) < 1e-6, max_entry_diff(sol.jacobi, J)});
        checks.push_back({"inverse_recovers_k", std::abs(sol.k - s->k) <= 1e-8 * (1.0 + s->k), sol.k - s->k});
    } else {
        const auto& r = std::get<Rank2>(spec);
        const double ratio = r.m / J.a()[0];
        const auto sol = singular ? inverse_rank2(zeros, pencil.xi, ratio, tol) : inverse_rank2(zeros, pencil.xi, std::nullopt, tol);
        checks.push_back({"inverse_recovers_matrix", max_entry_diff(sol.jacobi, J) < 1e-6, max_entry_diff(sol.jacobi, J)});
        checks.push_back({"inverse_recovers_l", std::abs(sol.l - r.l) <= 1e-8 * (1.0 + std::abs(r.l)), sol.l - r.l});
        checks.push_back({"inverse_recovers_m", std::abs(sol.m - r.m) <= 1e-8 * (1.0 + r.m), sol.m - r.m});
        const double relation = sol.xi - (sol.jacobi.b()[0] - sol.l * sol.jacobi.a()[0] / sol.m);
        checks.push_back({"shift_relation", std::abs(relation) <= 1e-10 * (1.0 + std::abs(sol.xi)), relation});
    }
    return checks;
}

json checks_to_json(const std::vector<Check>& checks, bool& all_pass) {
    json arr = json::array();
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value}});
    }
    return arr;
}

PerturbationSpec random_spec(std::mt19937_64& rng, int which) {
    std::uniform_real_distribution<double> l(-3.0, 3.0), pos(0.1, 3.0);
    switch (which % 3) {
        case 0: return AdditiveRank1{pos(rng)};
        case 1: return MultiplicativeRank1{pos(rng)};
        default: return Rank2{l(rng), pos(rng)};
    }
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const Tolerances tol = tolerances(o);
    json instances = json::array();
    bool all_pass = true;
    auto run_one = [&](const JacobiMatrix& J, const PerturbationSpec& spec) {
        json entry{{"jacobi", io::to_json(J)}, {"perturbation", io::to_json(spec)}};
        try {
            entry["checks"] = checks_to_json(verify_instance(J, spec, tol), all_pass);
        } catch (const std::exception& e) {
            all_pass = false;
            entry["error"] = e.what();
            err << "verify: " << e.what() << '\n';
        }
        instances.push_back(entry);
    };

    if (o.random_count > 0) {
        if (o.size < 2 || o.size > 50) throw ValidationError("--size must be in 2..50");
        std::mt19937_64 rng(o.seed);
        std::uniform_real_distribution<double> bd(-5.0, 5.0), ad(0.2, 5.0);
        for (int i = 0; i < o.random_count; ++i) {
            std::vector<double> b(o.size), a(o.size - 1);
            for (double& x : b) x = bd(rng);
            for (double& x : a) x = ad(rng);
            run_one(JacobiMatrix(b, a), random_spec(rng, i));
        }
    } else {
        const json doc = read_document(o, in);
        run_one(io::jacobi_from_json(doc.contains("jacobi") ? doc.at("jacobi") : doc),
                io::perturbation_from_json(doc.contains("perturbation") ? doc.at("perturbation") : json::object()));
    }
    out << json{{"pass", all_pass}, {"instances", instances}}.dump(2) << '\n';
    return all_pass ? kOk : kNumerical;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hermite-Biehler decompositions and spectral problems for perturbed Jacobi matrices", "hbtool"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--tol", o.tol, "Override the angle, zero-detection and division tolerances (default 1e-8)");

    auto add_input = [&](CLI::App* sub) { sub->add_option("-i,--input", o.input, "Input JSON file (default: stdin)"); };

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum of a perturbed Jacobi matrix");
    add_input(spectrum_cmd);

    auto* inverse_cmd = app.add_subcommand("inverse", "Recover the Jacobi matrix and perturbation from a spectrum");
    add_input(inverse_cmd);
    inverse_cmd->add_option("--kind", o.kind, "additive | multiplicative | rank2");
    inverse_cmd->add_option("--k", o.k, "Multiplicative parameter (singular case)");
    inverse_cmd->add_option("--xi", o.xi, "Break point of the rank-two problem");
    inverse_cmd->add_option("--A", o.ratio, "Ratio m / a_1 (singular rank-two case)");

    auto* decompose_cmd = app.add_subcommand("decompose", "Split a polynomial into its real Hermite-Biehler parts");
    add_input(decompose_cmd);
    decompose_cmd->add_option("--k", o.k, "Use alpha = 1 + i k for the generalized split");
    decompose_cmd->add_option("--xi", o.xi, "Shift of the generalized split");

    auto* hodograph_cmd = app.add_subcommand("hodograph", "Trace the hodograph and its phase increment");
    add_input(hodograph_cmd);
    hodograph_cmd->add_option("--csv", o.csv_path, "Write samples as CSV");
    hodograph_cmd->add_option("--svg", o.svg_path, "Write the curve as an SVG polyline");

    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant checks on an instance");
    add_input(verify_cmd);
    verify_cmd->add_option("--random", o.random_count, "Check this many random instances instead of reading input");
    verify_cmd->add_option("--seed", o.seed, "Seed for --random");
    verify_cmd->add_option("--size", o.size, "Matrix size for --random");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kValidation;
    }

    try {
        if (*spectrum_cmd) return cmd_spectrum(o, in, out);
        if (*inverse_cmd) return cmd_inverse(o, in, out);
        if (*decompose_cmd) return cmd_decompose(o, in, out);
        if (*hodograph_cmd) return cmd_hodograph(o, in, out);
        if (*verify_cmd) return cmd_verify(o, in, out, err);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
    return kValidation;
}

}  // namespace hb::cli
