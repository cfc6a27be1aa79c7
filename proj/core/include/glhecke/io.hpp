#pragma once

// JSON and CSV interchange. Rationals are strings in lowest terms ("3",
// "-1/2", never "3/1"); complex scalars are {"re": ..., "im": ...} where a
// parameter value is expected and "a/b+c/di" strings inside matrices.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "glhecke/gamma.hpp"
#include "glhecke/hecke_module.hpp"
#include "glhecke/hecke_params.hpp"
#include "glhecke/ktype_oracle.hpp"
#include "glhecke/psi.hpp"
#include "glhecke/real_params.hpp"
#include "glhecke/signed_involution.hpp"

namespace glhecke::io {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const Scalar& s);   ///< {"re": "a/b", "im": "c/d"}
Scalar scalar_from_json(const json& j);  ///< accepts the object form or a string

json to_json(const RdsFactor& f);
json to_json(const RealParam& p);
RealParam real_param_from_json(const json& j);
/// "triv:nu; sgn:nu; gl2:l:nu", with or without surrounding brackets.
RealParam parse_real_param(std::string_view text);

json to_json(const Segment& s);
json to_json(const Multisegment& m);
json to_json(const HeckeParam& p);
Multisegment multisegment_from_json(const json& j);

json to_json(const IntegralWeight& w);
json scalars_to_json(const std::vector<Scalar>& v);

json matrix_to_json(const Matrix& m);
json to_json(const ModuleMatrices& m);
json to_json(const StandardModule& m);

json to_json(const BijectionReport& r);

json to_json(const SignedInvolution& s);
SignedInvolution signed_involution_from_json(const json& j);
json to_json(const OrbitClass& c);

/// CSV helpers: one header row, comma separated, fields quoted when needed.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

/// Columns: factors,rank,level,gl2,sign,infinitesimal_character
std::string real_params_csv(const std::vector<RealParam>& params);
/// Columns: segments,k,central_character
std::string hecke_params_csv(const std::vector<HeckeParam>& params);
/// Columns: tuple,multiplicity
std::string decomposition_csv(const ProductDecomposition& d);

/// Writes through a temporary file in the same directory and renames it.
void write_atomic(const std::string& path, const std::string& contents);

}  // namespace glhecke::io
