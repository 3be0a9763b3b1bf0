#pragma once

#include <string>

#include <json.hpp>

#include "qspace/cg.hpp"
#include "qspace/mq2.hpp"
#include "qspace/qplane.hpp"

namespace qspace {

using Json = nlohmann::ordered_json;

Json to_json(const HSeries& s);
HSeries hseries_from_json(const Json& j);

Json to_json(const RepMatrix& m);

Json to_json(const CGTable& t);
std::string to_csv(const CGTable& t);

Json to_json(const PlanePoly& p);
Json to_json(const MonomialPoly& p);
Json to_json(const Mq2Poly& p);

PlanePoly plane_poly_from_json(const Json& j);
MonomialPoly monomial_poly_from_json(const Json& j);
Mq2Poly mq2_poly_from_json(const Json& j);

/// Either an irreducible- or monomial-basis plane element; monomial input
/// is converted with the requested basis flag.
PlanePoly plane_from_json_any_basis(const Json& j, bool deformed_basis);

} // namespace qspace
