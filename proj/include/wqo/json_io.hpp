#pragma once

#include <wqo/downset.hpp>
#include <wqo/engine.hpp>

#include <json.hpp>

namespace wqo {

  /// { "type": <type>, "parts": [<ideal>, ...] }
  nlohmann::ordered_json downset_to_json (const DownSet& d);
  DownSet downset_from_json (const nlohmann::ordered_json& j);

  /// { "status": "complete"|"budget", "cover": <downset>, "stats": {...} }
  nlohmann::ordered_json cover_result_to_json (const CoverResult& r);
}
