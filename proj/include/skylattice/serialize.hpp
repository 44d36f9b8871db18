#pragma once

#include <json.hpp>

#include "skylattice/dominance.hpp"
#include "skylattice/galois.hpp"
#include "skylattice/lattice.hpp"
#include "skylattice/relation.hpp"
#include "skylattice/skycube.hpp"

namespace skylattice {

using Json = nlohmann::ordered_json;

/// {"criteria":"EC","rows":[4]}
Json to_json(const SkylineResult& s, const CriterionNames& names);

/// Sorted by (length, text): ["", "C", "E", "P", "V", "PV", "ECV"].
Json to_json(const AgreeSetFamily& f, const CriterionNames& names);

/// {"concepts":[{"intension":"ECV","extension":"1|2|35|4"},...],"edges":[[i,j],...]}
Json to_json(const AgreeLattice& l, const CriterionNames& names);
Json to_json(const SkylineLattice& l, const CriterionNames& names);

/// {"relation":..., "criteria":[...], "cuboids":{"P":[2,5],...}} in canonical order.
Json to_json(const Skycube& cube);

Json to_json(const Relation& r);
Relation relation_from_json(const Json& j);

/// Self-contained store: relation, agree sets, skyline concepts and cover edges.
Json to_json(const PartialSkycube& p);

/// Throws SchemaError when `j` is not a store written by to_json(PartialSkycube).
PartialSkycube partial_from_json(const Json& j);

}  // namespace skylattice
