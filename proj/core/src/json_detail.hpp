#pragma once

#include "json.hpp"
#include "planalg/scalar.hpp"

namespace planalg::detail {

using json = nlohmann::ordered_json;

json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const json& j);
Rational rational_from_string(const std::string& text);

}  // namespace planalg::detail
