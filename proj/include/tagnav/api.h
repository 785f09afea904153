#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tagnav/engine.h"
#include "tagnav/error.h"

namespace tagnav {

struct ApiError {
  std::string code;
  std::string message;
  int http_status = 500;
};

ApiError to_api_error(const Error& e);

// Canonical JSON: sorted keys, compact, shortest round-trip doubles.
std::string canonical_dump(const nlohmann::json& value);

nlohmann::json to_json(const Article& article, const WeightedTagList* tags);
nlohmann::json to_json(const std::vector<RelatedTag>& related);
nlohmann::json to_json(const std::vector<RankedArticle>& ranked);
nlohmann::json to_json(const std::vector<std::string>& ids);
nlohmann::json to_json(const std::vector<SearchResult>& results);
nlohmann::json to_json(const TagCloud& cloud);
nlohmann::json to_json(const PresenceStats& stats);
nlohmann::json to_json(const std::vector<CurveRow>& rows);
nlohmann::json to_json(const ApiError& error);

// {"items": [...], "total": n}
nlohmann::json list_payload(nlohmann::json items, std::size_t total);

struct ApiRequest {
  std::string method = "GET";
  std::string path;  // decoded, e.g. /api/tags/science fiction/related
  std::map<std::string, std::string> params;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string body;
  std::uint64_t generation = 0;
};

inline constexpr std::size_t kDefaultTop = 50;
inline constexpr int kDefaultMinFont = 10;
inline constexpr int kDefaultMaxFont = 30;

// Request handling over the current engine state. GET requests are pure
// projections of one state snapshot. POST /api/relations queues a relation;
// POST /api/rebuild rebuilds from the inputs plus queued relations and swaps
// the new state in.
class Service {
 public:
  explicit Service(BuildOptions options);
  explicit Service(std::shared_ptr<const EngineState> state);

  ApiResponse handle(const ApiRequest& request);

  std::shared_ptr<const EngineState> state() const { return holder_.current(); }
  std::uint64_t rebuild();
  std::size_t add_relation(const std::string& a, const std::string& b);

 private:
  ApiResponse handle_get(const EngineState& state, const ApiRequest& request) const;

  StateHolder holder_;
  std::mutex writer_;
  std::vector<TagRelation> pending_;
};

}  // namespace tagnav
