#pragma once

#include <vector>

#include "json.hpp"

#include "chinese/bicyclic.hpp"
#include "chinese/core.hpp"
#include "chinese/representation.hpp"
#include "chinese/tree.hpp"

namespace chinese {

  // {"n": 3, "k": [[0], [0, 1], [1, 0, 0]]}
  nlohmann::ordered_json staircase_to_json(StaircaseForm const& f);
  StaircaseForm  staircase_from_json(nlohmann::ordered_json const& j);

  // {"p": i, "q": j}
  nlohmann::ordered_json bicyclic_to_json(Bicyclic x);
  Bicyclic       bicyclic_from_json(nlohmann::ordered_json const& j);

  // Per component: N and Z as integers, B as {"p", "q"}.
  nlohmann::ordered_json image_to_json(ImageTuple const& t);

  // {"leaf": id, "schema": [{"kind": "N", "origin": "dot a2"}, ...],
  //  "images": {"1": [...], ...}}
  nlohmann::ordered_json representation_to_json(LeafRepresentation const& r);

  // {"n": n, "leaves": [{"id", "steps", "c", "d"}, ...]}
  nlohmann::ordered_json leaves_to_json(int rank, std::vector<Diagram> const& leaves);

}  // namespace chinese
