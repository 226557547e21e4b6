// JSON codecs for the structured inputs and outputs: graphs of groups,
// cell complexes and complexes of groups, Coxeter systems and building
// specs. Object keys are emitted in sorted order and arrays in
// construction order, so identical inputs give byte-identical output.
#pragma once

#include <string>

#include "gogkit/cell_complex.hpp"
#include "gogkit/complex_of_groups.hpp"
#include "gogkit/coxeter.hpp"
#include "gogkit/graph_of_groups.hpp"
#include "gogkit/graph_product.hpp"

namespace gogkit {

std::string gog_json(const GraphOfGroups& g);
GraphOfGroups gog_from_json(const std::string& text);

std::string cell_complex_json(const CellComplex& c);
CellComplex cell_complex_from_json(const std::string& text);

std::string complex_of_groups_json(const ComplexOfGroups& c);
ComplexOfGroups complex_of_groups_from_json(const std::string& text);

std::string building_spec_json(const BuildingSpec& spec);
BuildingSpec building_spec_from_json(const std::string& text);

// Output-only serializations.
std::string tree_ball_json(const TreeBall& ball, const SerreGraph& graph);
std::string dev_ball_json(const DevBall& ball, const ComplexOfGroups& c);
std::string chamber_ball_json(const ChamberBall& ball, const BuildingSpec& spec);
std::string subdivision_json(const SubdivisionGraph& s);

// Detects the schema of a JSON document by its "kind" field.
std::string json_kind(const std::string& text);

}  // namespace gogkit
