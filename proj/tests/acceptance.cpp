// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "hb/hb_transform.hpp"
#include "hb/hodograph.hpp"
#include "hb/jacobi.hpp"
#include "hb/perturb.hpp"
#include "oracles.hpp"

using namespace hb;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) detail = what;
        pass = pass && cond;
    }
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// Uniform on the half-open interval (0, hi].
double open_low(std::mt19937_64& rng, double hi) {
    std::uniform_real_distribution<double> u(0.0, hi);
    double x = 0.0;
    while (x == 0.0) x = hi - u(rng);
    return x;
}

JacobiMatrix random_jacobi(std::mt19937_64& rng, std::size_t n, double b_range, double a_max) {
    std::uniform_real_distribution<double> ub(-b_range, b_range);
    std::vector<double> b(n), a(n - 1);
    for (double& x : b) x = ub(rng);
    for (double& x : a) x = open_low(rng, a_max);
    return JacobiMatrix(b, a);
}

// Coefficient-wise error, each term measured against max(1, |c_j|) of the reference.
template <class P>
double scaled_coeff_diff(const P& got, const P& ref) {
    const auto& g = got.coeffs();
    const auto& r = ref.coeffs();
    if (g.size() != r.size()) return INFINITY;
    double worst = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j)
        worst = std::max(worst, std::abs(g[j] - r[j]) / std::max(1.0, std::abs(r[j])));
    return worst;
}

int count_if_(const std::vector<double>& x, const std::function<bool(double)>& f) {
    return static_cast<int>(std::count_if(x.begin(), x.end(), f));
}

Outcome criterion1() {
    Outcome o;
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> un(2, 12);
    double worst = 0.0;
    int near_axis = 0;
    const auto start = std::chrono::steady_clock::now();
    for (int trial = 0; trial < 500; ++trial) {
        const JacobiMatrix J = random_jacobi(rng, un(rng), 5.0, 5.0);
        const double l = open_low(rng, 10.0);
        try {
            const ZeroSet z = spectrum(J, AdditiveRank1{l});
            double im_sum = 0.0, im_min = INFINITY;
            for (const cplx& w : z.zeros()) {
                im_min = std::min(im_min, w.imag());
                im_sum += w.imag();
            }
            near_axis += im_min <= 1e-10;
            o.require(std::abs(im_sum - l) <= 1e-8 * l, "sum of imaginary parts differs from l");
            const AdditiveSolution sol = inverse_additive(z);
            const double err = std::max(oracle::max_entry_diff(sol.jacobi, J), std::abs(sol.l - l));
            worst = std::max(worst, err);
            o.require(err < 1e-6, "inverse error " + fmt("%.3g", err) + " at trial " + std::to_string(trial));
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(near_axis == 0, std::to_string(near_axis) + " of 500 spectra have a zero with Im <= 1e-10");
    o.require(secs < 10.0, "runtime " + fmt("%.2f s", secs));
    const std::string summary = "max inverse error " + fmt("%.2e", worst) + ", " + fmt("%.2f s", secs);
    o.detail = o.pass ? summary : o.detail + "; " + summary;
    return o;
}

Outcome criterion2() {
    Outcome o;
    std::mt19937_64 rng(202);
    std::uniform_int_distribution<int> un(1, 10);
    std::uniform_real_distribution<double> re(-5, 5), im(0.01, 5);
    std::bernoulli_distribution sign(0.5);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<cplx> z;
        for (int j = un(rng); j > 0; --j) z.emplace_back(re(rng), sign(rng) ? im(rng) : -im(rng));
        const ZeroSet zs(z);
        try {
            const PhaseIncrement d = phase_increment(zs);
            const double err = std::abs(d.numeric - pi * (zs.n_plus() - zs.n_minus()));
            worst = std::max(worst, err);
            o.require(err <= 1e-6, "increment error " + fmt("%.3g", err));
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
    }
    if (o.pass) o.detail = "max error " + fmt("%.2e", worst);
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<int> un(1, 10);
    std::uniform_real_distribution<double> re(-5, 5), im(0.01, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> z;
        double radius = 0.0;
        for (int j = un(rng); j > 0; --j) {
            z.emplace_back(re(rng), im(rng));
            radius = std::max(radius, std::abs(z.back()));
        }
        const ZeroSet zs(z);
        const double T = 2.0 * (1.0 + radius);
        constexpr int kPoints = 10000;
        double prev = phase(zs, -T);
        for (int i = 1; i < kPoints; ++i) {
            const double cur = phase(zs, -T + 2.0 * T * i / (kPoints - 1));
            o.require(cur > prev, "non-increasing step at sample " + std::to_string(i));
            prev = cur;
        }
    }
    if (o.pass) o.detail = "20 zero sets x 1e4 samples";
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> un(1, 10);
    std::uniform_real_distribution<double> ul(0.1, 5);
    double worst_boundary = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = un(rng);
        auto pair = oracle::random_interlacing(rng, n, -5, 5, 0.05);
        const bool forced = trial % 2 == 1;
        if (forced) {
            // shift so that one zero of p sits at 0
            const double c = pair.lams[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
            for (double& x : pair.lams) x -= c;
            for (double& x : pair.mus) x -= c;
        }
        bool near_zero = false;
        for (double x : pair.lams) near_zero = near_zero || (x != 0.0 && std::abs(x) < 1e-3);
        if (near_zero) continue;
        const int s = count_if_(pair.lams, [](double x) { return x < 0.0; });
        const RealPoly p = from_real_roots(pair.lams);
        const RealPoly q = from_real_roots(pair.mus);
        try {
            const ZeroSet z = roots(classical_combine(p, q, ul(rng)));
            const Localization loc = localization(z);
            o.require(loc.s == s, "s mismatch at trial " + std::to_string(trial));
            o.require(loc.at_boundary == forced, "boundary flag mismatch at trial " + std::to_string(trial));
            if (forced) {
                const double dev = std::abs(arg_sum(z) - (pi / 2 + pi * s));
                worst_boundary = std::max(worst_boundary, dev);
                o.require(dev < 1e-8, "boundary deviation " + fmt("%.3g", dev));
            }
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
    }
    if (o.pass) o.detail = "max boundary deviation " + fmt("%.2e", worst_boundary);
    return o;
}

cplx random_alpha(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-3, 3), im(0.1, 3);
    return {re(rng), im(rng)};
}

Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(505);
    std::uniform_int_distribution<int> un(1, 15);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = un(rng);
        const auto pair = oracle::random_interlacing(rng, n, -5, 5, 0.05);
        bool near_zero = false;
        for (double x : pair.lams) near_zero = near_zero || std::abs(x) < 1e-2;
        if (near_zero) continue;
        const RealPoly p = from_real_roots(pair.lams);
        const RealPoly q = from_real_roots(pair.mus);
        const cplx alpha = random_alpha(rng);
        try {
            const ComplexPoly h = generalized_combine(p, q, alpha);
            const ConfigReport rep = classify_config(roots(h), alpha);
            o.require(rep.verdict == Verdict::Equal, "verdict " + std::string(to_string(rep.verdict)));
            o.require(rep.n_plus == count_if_(pair.lams, [](double x) { return x > 0.0; }), "n_plus mismatch");
            const GeneralizedSplit g = generalized_split(h, alpha);
            const double err = std::max(scaled_coeff_diff(g.p, p), scaled_coeff_diff(g.second, q));
            worst = std::max(worst, err);
            o.require(err <= 1e-9, "split error " + fmt("%.3g", err) + " at n = " + std::to_string(n));
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
    }
    if (o.pass) o.detail = "max scaled coefficient error " + fmt("%.2e", worst);
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<int> un(1, 12);
    std::uniform_real_distribution<double> frac(0.2, 0.8);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = un(rng);
        // n + 1 separated points; one of them becomes the break point xi
        std::vector<double> merged = oracle::separated_reals(rng, n + 1, -5, 5, 0.05);
        const std::size_t at = std::uniform_int_distribution<std::size_t>(0, n)(rng);
        const double xi = merged[at];
        std::vector<double> lams;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != at) lams.push_back(merged[i]);
        std::vector<double> mus;
        for (std::size_t i = 0; i < n; ++i) mus.push_back(merged[i] + frac(rng) * (merged[i + 1] - merged[i]));
        const RealPoly p = from_real_roots(lams);
        const RealPoly r = from_real_roots(mus);
        const cplx alpha = random_alpha(rng);
        try {
            const ComplexPoly h = alpha * to_complex(p) + (1.0 - alpha) * to_complex(r);
            const ConfigReport rep = classify_config(roots(h), alpha, xi);
            o.require(rep.verdict == Verdict::Less, "verdict " + std::string(to_string(rep.verdict)));
            o.require(rep.n_plus == count_if_(lams, [&](double x) { return x > xi; }), "n_plus mismatch");
            const PencilSplit back = pencil_split(h, alpha);
            const double err = std::max(scaled_coeff_diff(back.p, p), scaled_coeff_diff(back.r, r));
            worst = std::max(worst, err);
            o.require(err <= 1e-12, "pencil error " + fmt("%.3g", err));
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
    }
    if (o.pass) o.detail = "max scaled pencil error " + fmt("%.2e", worst);
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(707);
    std::uniform_int_distribution<int> un(2, 10);
    std::uniform_real_distribution<double> uk(0.1, 5);
    double worst_angle = 0.0, worst_inverse = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto pair = oracle::random_interlacing(rng, un(rng), -5, 5, 0.1);
        bool near_zero = false;
        for (double x : pair.lams) near_zero = near_zero || std::abs(x) < 1e-2;
        if (near_zero) continue;
        const double k = uk(rng);
        try {
            const JacobiMatrix J = oracle::jacobi_from_spectra(pair.lams, pair.mus);
            const auto ev = eigen(J);
            const ZeroSet z = spectrum(J, MultiplicativeRank1{k});
            const double dev = std::abs(arg_sum(z) - std::atan(k));
            worst_angle = std::max(worst_angle, dev);
            o.require(dev <= 1e-8, "angle sum deviation " + fmt("%.3g", dev));
            o.require(z.n_plus() == count_if_(ev, [](double x) { return x > 0; }) &&
                          z.n_minus() == count_if_(ev, [](double x) { return x < 0; }),
                      "eigenvalue sign counts differ");
        } catch (const std::exception& e) {
            o.require(false, std::string("regular: ") + e.what());
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = un(rng);
        auto pair = oracle::random_interlacing(rng, n, -5, 5, 0.1);
        const double c = pair.lams[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
        for (double& x : pair.lams) x -= c;
        for (double& x : pair.mus) x -= c;
        const double k = uk(rng);
        try {
            const JacobiMatrix J = reconstruct(pair.lams, pair.mus);
            const ZeroSet z = spectrum(J, MultiplicativeRank1{k});
            double scale = 0.0;
            for (const cplx& w : z.zeros()) scale = std::max(scale, std::abs(w));
            std::vector<cplx> rest;
            int at_zero = 0;
            for (const cplx& w : z.zeros()) {
                if (std::abs(w) <= 1e-8 * (1.0 + scale)) ++at_zero;
                else rest.push_back(w);
            }
            o.require(at_zero == 1, "zero eigenvalue not detected as simple");
            if (!rest.empty()) o.require(arg_sum(ZeroSet(rest)) < std::atan(k), "remainder angle sum not below arctan k");
            const MultiplicativeSolution sol = inverse_multiplicative(z, k);
            const double err = oracle::max_entry_diff(sol.jacobi, J);
            worst_inverse = std::max(worst_inverse, err);
            o.require(sol.singular, "singular case not flagged");
            o.require(err < 1e-6, "singular inverse error " + fmt("%.3g", err));
        } catch (const std::exception& e) {
            o.require(false, std::string("singular: ") + e.what());
        }
    }
    if (o.pass)
        o.detail = "max angle deviation " + fmt("%.2e", worst_angle) + ", max singular inverse error " +
                   fmt("%.2e", worst_inverse);
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<int> un(2, 10);
    std::uniform_real_distribution<double> ul(-5, 5), um(0.1, 5), uxi(-5, 5);
    double worst_J = 0.0, worst_lm = 0.0, worst_rel = 0.0;
    auto check = [&](const JacobiMatrix& J, const Rank2& spec, std::optional<double> ratio) {
        const double xi = rank2_shift(J, spec);
        const Rank2Solution sol = inverse_rank2(spectrum(J, spec), xi, ratio);
        const double eJ = oracle::max_entry_diff(sol.jacobi, J);
        const double elm = std::max(std::abs(sol.l - spec.l), std::abs(sol.m - spec.m));
        const double rel = std::abs(sol.xi - (sol.jacobi.b()[0] - sol.l * sol.jacobi.a()[0] / sol.m));
        worst_J = std::max(worst_J, eJ);
        worst_lm = std::max(worst_lm, elm);
        worst_rel = std::max(worst_rel, rel);
        o.require(eJ < 1e-6, "matrix error " + fmt("%.3g", eJ));
        o.require(elm < 1e-8 * (1.0 + std::abs(spec.l) + spec.m), "parameter error " + fmt("%.3g", elm));
        o.require(rel <= 1e-10 * (1.0 + std::abs(xi)), "shift relation off by " + fmt("%.3g", rel));
        o.require(sol.singular == ratio.has_value(), "singular flag mismatch");
    };
    for (int trial = 0; trial < 200; ++trial) {
        const auto pair = oracle::random_interlacing(rng, un(rng), -5, 5, 0.1);
        const Rank2 spec{ul(rng), um(rng)};
        try {
            const JacobiMatrix J = oracle::jacobi_from_spectra(pair.lams, pair.mus);
            const double xi = rank2_shift(J, spec);
            bool near = false;
            for (double x : pair.lams) near = near || std::abs(x - xi) < 1e-2;
            if (near) continue;
            check(J, spec, std::nullopt);
        } catch (const std::exception& e) {
            o.require(false, std::string("regular: ") + e.what());
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = un(rng);
        const auto pair = oracle::random_interlacing(rng, n, -5, 5, 0.1);
        const double xi = pair.lams[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
        const double ratio = um(rng);
        try {
            const JacobiMatrix J = oracle::jacobi_from_spectra(pair.lams, pair.mus);
            const Rank2 spec{ratio * (J.b()[0] - xi), ratio * J.a()[0]};
            check(J, spec, ratio);
        } catch (const std::exception& e) {
            o.require(false, std::string("singular: ") + e.what());
        }
    }
    if (o.pass)
        o.detail = "max matrix error " + fmt("%.2e", worst_J) + ", parameters " + fmt("%.2e", worst_lm) +
                   ", shift relation " + fmt("%.2e", worst_rel);
    return o;
}

CMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = g(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = cplx(g(rng), g(rng));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

// U diag(d) U^* with a random unitary U from the QR factorization of a Gaussian matrix.
CMatrix hermitian_with_spectrum(std::mt19937_64& rng, const std::vector<double>& d) {
    const std::size_t n = d.size();
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cplx(g(rng), g(rng));
    const Eigen::MatrixXcd u = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
    Eigen::VectorXcd dv(n);
    for (std::size_t i = 0; i < n; ++i) dv(i) = d[i];
    const Eigen::MatrixXcd h = u * dv.asDiagonal() * u.adjoint();
    CMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = i == j ? cplx(h(i, i).real()) : h(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out(j, i) = std::conj(out(i, j));
    return out;
}

Outcome criterion9() {
    Outcome o;
    std::mt19937_64 rng(909);
    std::normal_distribution<double> g;
    double worst_rec = 0.0, worst_lz = 0.0;
    for (std::size_t n = 1; n <= 20; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto pair = oracle::random_interlacing(rng, n, -10, 10, 0.1);
            try {
                const JacobiMatrix J = oracle::jacobi_from_spectra(pair.lams, pair.mus);
                const std::vector<double> mus = n > 1 ? eigen(J.truncated(1)) : std::vector<double>{};
                const JacobiMatrix back = reconstruct(eigen(J), mus);
                const double err =
                    std::max(oracle::max_entry_diff(back, J), oracle::max_entry_diff(reconstruct(pair.lams, pair.mus), J));
                worst_rec = std::max(worst_rec, err);
                o.require(err < 1e-6, "reconstruct error " + fmt("%.3g", err) + " at n = " + std::to_string(n));
            } catch (const std::exception& e) {
                o.require(false, std::string("reconstruct: ") + e.what());
            }
        }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 19;
        const CMatrix H = random_hermitian(rng, n);
        std::vector<cplx> v(n);
        for (cplx& x : v) x = cplx(g(rng), g(rng));
        try {
            const LanczosResult res = lanczos_reduce(HermitianMatrix(H), v);
            o.require(res.k == n, "random start vector reported non-cyclic");
            const double err = (res.basis * H * res.basis.adjoint() - res.jacobi.dense()).max_abs() / H.max_abs();
            worst_lz = std::max(worst_lz, err);
            o.require(err <= 1e-10, "Lanczos residual " + fmt("%.3g", err));
        } catch (const std::exception& e) {
            o.require(false, std::string("lanczos: ") + e.what());
        }
    }
    for (int trial = 0; trial < 20; ++trial) {
        // a repeated eigenvalue caps the Krylov dimension at the number of distinct ones
        const std::size_t n = 3 + trial % 8;
        std::vector<double> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = i < 2 ? 1.0 : static_cast<double>(i);
        const CMatrix H = hermitian_with_spectrum(rng, d);
        std::vector<cplx> v(n);
        for (cplx& x : v) x = cplx(g(rng), g(rng));
        try {
            const LanczosResult res = lanczos_reduce(HermitianMatrix(H), v);
            o.require(res.k < n, "non-cyclic input reported k = n");
        } catch (const std::exception& e) {
            o.require(false, std::string("non-cyclic: ") + e.what());
        }
    }
    if (o.pass)
        o.detail = "max reconstruct error " + fmt("%.2e", worst_rec) + ", max relative Lanczos residual " +
                   fmt("%.2e", worst_lz);
    return o;
}

Outcome criterion10() {
    Outcome o;
    std::mt19937_64 rng(1010);
    std::uniform_real_distribution<double> up(0.1, 5), ul(-5, 5), ang(-pi, pi);
    double worst = 0.0;
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const JacobiMatrix J = random_jacobi(rng, n, 5.0, 5.0);
            for (const PerturbationSpec& s :
                 {PerturbationSpec(AdditiveRank1{ul(rng)}), PerturbationSpec(MultiplicativeRank1{up(rng)}),
                  PerturbationSpec(Rank2{ul(rng), up(rng)})}) {
                const ComplexPoly h = perturbed_char_poly(J, s);
                const CMatrix D = build(J, s).entries;
                for (int pt = 0; pt < 4; ++pt) {
                    const cplx z = std::polar(0.5 + pt, ang(rng));
                    double scale = 0.0;
                    for (std::size_t j = 0; j <= h.degree(); ++j) scale += std::abs(h[j]) * std::pow(std::abs(z), j);
                    const double err = std::abs(eval(h, z) - oracle::char_det(D, z)) / std::max(1.0, scale);
                    worst = std::max(worst, err);
                    o.require(err <= 1e-10, "determinant mismatch " + fmt("%.3g", err));
                }
            }
        }
    }
    if (o.pass) o.detail = "max relative mismatch " + fmt("%.2e", worst);
    return o;
}

}  // namespace

// --known-failure N marks criterion N as one that cannot pass as stated. It
// still prints FAIL; the exit status only reflects failures outside that list
// and known failures that have started passing.
int main(int argc, char** argv) {
    std::set<std::size_t> known;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--known-failure" && i + 1 < argc) {
            known.insert(std::stoul(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: acceptance [--known-failure N]...\n");
            return 2;
        }
    }
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"classical Hermite-Biehler round trip", criterion1},
        {"phase increment equals pi (n_+ - n_-)", criterion2},
        {"phase strictly increasing for upper zeros", criterion3},
        {"localization of the sign split", criterion4},
        {"generalized theorem, both directions", criterion5},
        {"broken interlacing around a point", criterion6},
        {"multiplicative problems", criterion7},
        {"rank-two problems", criterion8},
        {"Jacobi reconstruction and Lanczos", criterion9},
        {"char poly against dense determinant", criterion10},
    };
    int failed = 0, unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome out = criteria[i].second();
        const bool expected_fail = known.count(i + 1) > 0;
        failed += !out.pass;
        unexpected += out.pass == expected_fail;
        std::printf("%s %2zu  %s: %s%s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, out.detail.c_str(),
                    expected_fail ? (out.pass ? " (listed as known failure)" : " (known failure)") : "");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return unexpected == 0 ? 0 : 1;
}
