#include <wqo/json_io.hpp>
#include <wqo/error.hpp>
#include <wqo/syntax.hpp>

namespace wqo {

  nlohmann::ordered_json downset_to_json (const DownSet& d) {
    nlohmann::ordered_json parts = nlohmann::ordered_json::array ();
    for (const auto& p : d.parts ())
      parts.push_back (print_ideal (d.type (), p));
    return {{"type", print_type (d.type ())}, {"parts", std::move (parts)}};
  }

  DownSet downset_from_json (const nlohmann::ordered_json& j) {
    if (not j.is_object () or not j.contains ("type") or not j.contains ("parts")
        or not j["type"].is_string () or not j["parts"].is_array ())
      throw SemanticError ("down-set JSON needs a \"type\" string and a \"parts\" array");
    Type ty = parse_type (j["type"].get<std::string> ());
    if (auto v = validate_type (ty); not v.empty ())
      throw SemanticError ("invalid type at " + v[0].path + ": " + v[0].message);
    std::vector<Ideal> parts;
    for (const auto& p : j["parts"]) {
      if (not p.is_string ())
        throw SemanticError ("down-set parts must be strings");
      parts.push_back (parse_ideal (ty, p.get<std::string> ()));
    }
    return DownSet::from_ideals (std::move (ty), std::move (parts));
  }

  nlohmann::ordered_json cover_result_to_json (const CoverResult& r) {
    return {
      {"status", to_string (r.status)},
      {"cover", downset_to_json (r.cover)},
      {"stats", {
        {"rounds", r.stats.rounds},
        {"accelerations", r.stats.accelerations},
        {"composites_explored", r.stats.composites_explored},
        {"adds", r.stats.adds},
        {"non_converged", r.stats.non_converged},
      }},
    };
  }
}
