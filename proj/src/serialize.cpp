#include "chinese/serialize.hpp"

#include <algorithm>

#include "chinese/errors.hpp"

namespace chinese {

  using json = nlohmann::ordered_json;

  json staircase_to_json(StaircaseForm const& f) {
    return json{{"n", f.rank()}, {"k", f.rows()}};
  }

  StaircaseForm staircase_from_json(json const& j) {
    if (!j.is_object() || !j.contains("k") || !j["k"].is_array()) {
      throw ParseError("bad staircase JSON: expected {\"n\": rank, \"k\": rows}");
    }
    for (auto const& row : j["k"]) {
      if (!row.is_array() || !std::all_of(row.begin(), row.end(), [](json const& x) { return x.is_number_unsigned(); })) {
        throw ParseError("bad staircase JSON: exponents must be naturals");
      }
    }
    try {
      return StaircaseForm::from_rows(j.at("n").get<int>(),
                                      j.at("k").get<std::vector<std::vector<std::uint64_t>>>());
    } catch (json::exception const& e) {
      throw ParseError(std::string("bad staircase JSON: ") + e.what());
    }
  }

  json bicyclic_to_json(Bicyclic x) {
    return json{{"p", x.p}, {"q", x.q}};
  }

  Bicyclic bicyclic_from_json(json const& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j["p"].is_number_unsigned()
        || !j["q"].is_number_unsigned()) {
      throw ParseError("bad bicyclic JSON: expected {\"p\": natural, \"q\": natural}");
    }
    try {
      return {j.at("p").get<std::uint64_t>(), j.at("q").get<std::uint64_t>()};
    } catch (json::exception const& e) {
      throw ParseError(std::string("bad bicyclic JSON: ") + e.what());
    }
  }

  json image_to_json(ImageTuple const& t) {
    json out = json::array();
    for (auto const& v : t.values()) {
      std::visit(
          [&](auto const& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Bicyclic>) {
              out.push_back(bicyclic_to_json(x));
            } else {
              out.push_back(x.value);
            }
          },
          v);
    }
    return out;
  }

  json representation_to_json(LeafRepresentation const& r) {
    json schema = json::array();
    for (auto const& comp : r.schema().components) {
      schema.push_back({{"kind", std::string(1, kind_letter(comp.kind))}, {"origin", comp.origin}});
    }
    json images = json::object();
    for (int g = 1; g <= r.rank(); ++g) {
      images[std::to_string(g)] = image_to_json(r.generator_image(g));
    }
    return json{{"leaf", r.id()}, {"schema", schema}, {"images", images}};
  }

  json leaves_to_json(int rank, std::vector<Diagram> const& leaves) {
    json list = json::array();
    for (auto const& d : leaves) {
      json steps = json::array();
      for (auto const& s : d.steps()) {
        steps.push_back(s.token());
      }
      list.push_back({{"id", d.id()}, {"steps", steps}, {"c", d.c()}, {"d", d.d()}});
    }
    return json{{"n", rank}, {"leaves", list}};
  }

}  // namespace chinese
