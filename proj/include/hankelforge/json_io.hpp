#pragma once

#include <string>

#include <json.hpp>

#include "hankelforge/forms.hpp"
#include "hankelforge/hankel.hpp"
#include "hankelforge/identities.hpp"
#include "hankelforge/sym_tensor.hpp"
#include "hankelforge/tensor_rep.hpp"

namespace hankelforge {

using Json = nlohmann::ordered_json;

// Rationals travel as {"num": "...", "den": "..."} strings so consumers never
// round them through floating point.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const LaurentPoly& p);      // [{"exp":.., "value":..}, ...]
Json to_json(const Section& u);          // {"weight": {"twice"}, "entries"}
Json to_json(const SymTensor& t);        // [{"key":[..], "value":..}, ...]
Json to_json(const TensorElt& t);        // [{"i":.., "j":.., "value":..}, ...]
Json to_json(const OperatorWindow& w, bool paper_orientation);
Json to_json(const BilinearReport& r);
Json to_json(const IdentityResult& r);

/// Row-major CSV with exact rational cells ("3", "-1/2"); no header.
std::string window_to_csv(const OperatorWindow& w, bool paper_orientation);
OperatorWindow window_from_csv(int s, const std::string& csv);

}  // namespace hankelforge
