#pragma once

#include "crm/coord_change.hpp"
#include "crm/herm_poly.hpp"

#include <json.hpp>

namespace crm {

using Json = nlohmann::json;

Json to_json(const Poly& p);
Json to_json(const HermPoly& p);
Json to_json(const InverseWeight& l);
Json to_json(const Weight& w);
Json to_json(const CoordChange& c);

Poly poly_from_json(const Json& j);
HermPoly herm_from_json(const Json& j);
InverseWeight inverse_weight_from_json(const Json& j);

}  // namespace crm
