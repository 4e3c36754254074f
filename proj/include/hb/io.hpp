#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "hb/hodograph.hpp"
#include "hb/jacobi.hpp"
#include "hb/perturb.hpp"

namespace hb::io {

using nlohmann::json;

// Complex numbers are [re, im] pairs throughout. Every parser throws
// ValidationError on schema violations.

json to_json(cplx z);
cplx complex_from_json(const json& j);

/// {"coeffs": [[re, im], ...]}, constant term first.
json to_json(const ComplexPoly& p);
json to_json(const RealPoly& p);
ComplexPoly poly_from_json(const json& j);

json to_json(const std::vector<cplx>& zeros);
std::vector<cplx> zeros_from_json(const json& j);

/// {"b": [...], "a": [...]}
json to_json(const JacobiMatrix& J);
JacobiMatrix jacobi_from_json(const json& j);

/// {"entries": [[[re, im], ...], ...]}
json to_json(const HermitianMatrix& H);
HermitianMatrix hermitian_from_json(const json& j);

/// {"kind": "additive"|"multiplicative"|"rank2", "l": ..., "k": ..., "m": ...}
json to_json(const PerturbationSpec& spec);
PerturbationSpec perturbation_from_json(const json& j);

json to_json(const ConfigReport& rep);

/// Header t,re_h,im_h,phi and one row per sample, 17 significant digits.
void write_hodograph_csv(std::ostream& out, const std::vector<PhaseSample>& samples);

/// Single polyline of the hodograph with axis cross-hairs.
void write_hodograph_svg(std::ostream& out, const std::vector<PhaseSample>& samples);

}  // namespace hb::io
