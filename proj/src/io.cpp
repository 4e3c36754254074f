#include "hb/io.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

namespace hb::io {

namespace {

double number(const json& j, const char* what) {
    if (!j.is_number()) throw ValidationError(std::string(what) + " must be a number");
    return j.get<double>();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<double> reals(const json& j, const char* what) {
    if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(number(x, what));
    return out;
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw ValidationError("complex number must be [re, im]");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

json to_json(const ComplexPoly& p) {
    json c = json::array();
    for (const cplx& x : p.coeffs()) c.push_back(to_json(x));
    return {{"coeffs", c}};
}

json to_json(const RealPoly& p) { return to_json(to_complex(p)); }

ComplexPoly poly_from_json(const json& j) {
    const json& c = field(j, "coeffs");
    if (!c.is_array() || c.empty()) throw ValidationError("coeffs must be a nonempty array");
    std::vector<cplx> coeffs;
    for (const auto& x : c) coeffs.push_back(complex_from_json(x));
    return ComplexPoly(std::move(coeffs));
}

json to_json(const std::vector<cplx>& zeros) {
    json out = json::array();
    for (const cplx& z : zeros) out.push_back(to_json(z));
    return out;
}

std::vector<cplx> zeros_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("zeros must be an array of [re, im]");
    std::vector<cplx> out;
    for (const auto& x : j) out.push_back(complex_from_json(x));
    return out;
}

json to_json(const JacobiMatrix& J) { return {{"b", J.b()}, {"a", J.a()}}; }

JacobiMatrix jacobi_from_json(const json& j) {
    auto b = reals(field(j, "b"), "b");
    auto a = j.contains("a") ? reals(j.at("a"), "a") : std::vector<double>{};
    return JacobiMatrix(std::move(b), std::move(a));
}

json to_json(const HermitianMatrix& H) {
    json rows = json::array();
    const CMatrix& m = H.entries();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(row);
    }
    return {{"entries", rows}};
}

HermitianMatrix hermitian_from_json(const json& j) {
    const json& rows = field(j, "entries");
    if (!rows.is_array() || rows.empty()) throw ValidationError("entries must be a nonempty array of rows");
    const std::size_t n = rows.size();
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) throw ValidationError("entries must form a square matrix");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = complex_from_json(rows[i][k]);
    }
    return HermitianMatrix(std::move(m));
}

json to_json(const PerturbationSpec& spec) {
    if (const auto* s = std::get_if<AdditiveRank1>(&spec)) return {{"kind", "additive"}, {"l", s->l}};
    if (const auto* s = std::get_if<MultiplicativeRank1>(&spec)) return {{"kind", "multiplicative"}, {"k", s->k}};
    const auto& s = std::get<Rank2>(spec);
    return {{"kind", "rank2"}, {"l", s.l}, {"m", s.m}};
}

PerturbationSpec perturbation_from_json(const json& j) {
    const json& kind = field(j, "kind");
    if (!kind.is_string()) throw ValidationError("kind must be a string");
    const auto name = kind.get<std::string>();
    PerturbationSpec spec;
    if (name == "additive")
        spec = AdditiveRank1{number(field(j, "l"), "l")};
    else if (name == "multiplicative")
        spec = MultiplicativeRank1{number(field(j, "k"), "k")};
    else if (name == "rank2")
        spec = Rank2{number(field(j, "l"), "l"), number(field(j, "m"), "m")};
    else
        throw ValidationError("unknown perturbation kind \"" + name + "\"");
    validate(spec);
    return spec;
}

json to_json(const ConfigReport& rep) {
    return {{"arg_sum", rep.arg_sum}, {"arg_alpha", rep.arg_alpha}, {"a1", rep.a1},
            {"a2", rep.a2},           {"n_plus", rep.n_plus},       {"n_minus", rep.n_minus},
            {"s", rep.s},             {"verdict", std::string(to_string(rep.verdict))}};
}

void write_hodograph_csv(std::ostream& out, const std::vector<PhaseSample>& samples) {
    const auto old = out.precision(17);
    out << "t,re_h,im_h,phi\n";
    for (const auto& s : samples) out << s.t << ',' << s.value.real() << ',' << s.value.imag() << ',' << s.phi << '\n';
    out.precision(old);
}

void write_hodograph_svg(std::ostream& out, const std::vector<PhaseSample>& samples) {
    constexpr double size = 800.0;
    constexpr double margin = 20.0;
    double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;  // origin always in view
    for (const auto& s : samples) {
        lo_x = std::min(lo_x, s.value.real());
        hi_x = std::max(hi_x, s.value.real());
        lo_y = std::min(lo_y, s.value.imag());
        hi_y = std::max(hi_y, s.value.imag());
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, std::numeric_limits<double>::min()});
    const double scale = (size - 2.0 * margin) / span;
    auto px = [&](double x) { return margin + (x - lo_x) * scale; };
    auto py = [&](double y) { return size - margin - (y - lo_y) * scale; };

    const auto old = out.precision(10);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
    out << "<line x1=\"0\" y1=\"" << py(0.0) << "\" x2=\"" << size << "\" y2=\"" << py(0.0) << "\" stroke=\"gray\"/>\n";
    out << "<line x1=\"" << px(0.0) << "\" y1=\"0\" x2=\"" << px(0.0) << "\" y2=\"" << size << "\" stroke=\"gray\"/>\n";
    out << "<polyline fill=\"none\" stroke=\"black\" points=\"";
    for (const auto& s : samples) out << px(s.value.real()) << ',' << py(s.value.imag()) << ' ';
    out << "\"/>\n</svg>\n";
    out.precision(old);
}

}  // namespace hb::io
