#include "tagnav/api.h"

#include <algorithm>
#include <charconv>
#include <set>

namespace tagnav {

using nlohmann::json;

ApiError to_api_error(const Error& e) {
  int status = 500;
  switch (e.code()) {
    case ErrorCode::UnknownArticle:
      status = 404;
      break;
    case ErrorCode::EmptyTag:
    case ErrorCode::EmptyFilter:
    case ErrorCode::ConflictingFilter:
    case ErrorCode::EmptyQuery:
    case ErrorCode::InvalidArgument:
      status = 400;
      break;
    case ErrorCode::MalformedLine:
    case ErrorCode::DuplicateId:
    case ErrorCode::MissingArticle:
    case ErrorCode::NoPairs:
      status = 422;
      break;
    case ErrorCode::Io:
    case ErrorCode::AddressInUse:
      status = 500;
      break;
  }
  return {std::string(error_code_name(e.code())), e.what(), status};
}

std::string canonical_dump(const json& value) { return value.dump(); }

json to_json(const Article& a, const WeightedTagList* tags) {
  json tag_items = json::array();
  if (tags != nullptr) {
    std::vector<std::pair<std::string, std::size_t>> sorted(tags->weights.begin(),
                                                            tags->weights.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& x, const auto& y) { return x.second > y.second; });
    for (const auto& [tag, w] : sorted) tag_items.push_back({{"tag", tag}, {"weight", w}});
  }
  return {{"id", a.id},           {"title", a.title}, {"content", a.content},
          {"categories", a.categories}, {"links", a.links}, {"tags", tag_items}};
}

json to_json(const std::vector<RelatedTag>& related) {
  json out = json::array();
  for (const auto& r : related) out.push_back({{"tag", r.tag}, {"cooccurrence", r.cooccurrence}});
  return out;
}

json to_json(const std::vector<RankedArticle>& ranked) {
  json out = json::array();
  for (const auto& r : ranked) out.push_back({{"article", r.article}, {"score", r.score}});
  return out;
}

json to_json(const std::vector<std::string>& ids) {
  json out = json::array();
  for (const auto& id : ids) out.push_back(id);
  return out;
}

json to_json(const std::vector<SearchResult>& results) {
  json out = json::array();
  for (const auto& r : results) {
    json matched = json::object();
    for (const auto& [term, fields] : r.matched_fields) {
      json names = json::array();
      for (Field f : fields) names.push_back(field_name(f));
      matched[term] = std::move(names);
    }
    out.push_back({{"article", r.article}, {"score", r.score}, {"matched_fields", matched}});
  }
  return out;
}

json to_json(const TagCloud& cloud) {
  json out = json::array();
  for (const auto& e : cloud.entries) {
    out.push_back({{"tag", e.tag}, {"weight", e.weight}, {"font", e.font}});
  }
  return out;
}

json to_json(const PresenceStats& stats) {
  json scopes = json::array();
  for (Scope s : {Scope::Document, Scope::Content, Scope::Categories}) {
    const auto& c = stats.scope(s);
    const auto pct = stats.percent_found(s);
    scopes.push_back({{"scope", scope_name(s)},
                      {"found", c.found},
                      {"not_found", c.not_found},
                      {"percent", pct ? json(*pct) : json(nullptr)}});
  }
  return {{"total_pairs", stats.total_pairs}, {"scopes", scopes}};
}

json to_json(const std::vector<CurveRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"tag_count", r.tag_count},
                   {"articles", r.articles},
                   {"pairs", r.pairs},
                   {"pct_document", r.pct_document},
                   {"pct_content", r.pct_content},
                   {"pct_categories", r.pct_categories}});
  }
  return out;
}

json to_json(const ApiError& error) {
  return {{"code", error.code}, {"message", error.message}};
}

json list_payload(json items, std::size_t total) {
  return {{"items", std::move(items)}, {"total", total}};
}

namespace {

ApiResponse ok(const json& payload, std::uint64_t generation, int status = 200) {
  return {status, canonical_dump(payload), generation};
}

ApiResponse fail(const ApiError& error, std::uint64_t generation) {
  return {error.http_status, canonical_dump(to_json(error)), generation};
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start < path.size()) {
    auto end = path.find('/', start);
    if (end == std::string_view::npos) end = path.size();
    if (end > start) parts.push_back(path.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

std::string param(const ApiRequest& req, const std::string& key, std::string fallback = {}) {
  auto it = req.params.find(key);
  return it == req.params.end() ? std::move(fallback) : it->second;
}

template <typename Int>
Int int_param(const ApiRequest& req, const std::string& key, Int fallback) {
  auto it = req.params.find(key);
  if (it == req.params.end()) return fallback;
  Int value{};
  const auto& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidArgument, "invalid integer for " + key + ": " + s);
  }
  return value;
}

std::size_t top_param(const ApiRequest& req) {
  const auto top = int_param<std::size_t>(req, "top", kDefaultTop);
  if (top == 0) throw Error(ErrorCode::InvalidArgument, "top must be at least 1");
  return top;
}

bool bool_param(const ApiRequest& req, const std::string& key) {
  const auto v = param(req, key, "false");
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw Error(ErrorCode::InvalidArgument, "invalid boolean for " + key + ": " + v);
}

std::set<std::string> tag_set(const EngineState& state, const std::string& csv) {
  std::set<std::string> out;
  std::size_t start = 0;
  while (start < csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string::npos) end = csv.size();
    const auto item = std::string_view(csv).substr(start, end - start);
    if (item.find_first_not_of(" \t") != std::string_view::npos) {
      out.insert(state.canonical_tag(item));
    }
    start = end + 1;
  }
  return out;
}

template <typename T>
json truncated(const std::vector<T>& all, std::size_t top) {
  std::vector<T> head(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(std::min(top, all.size())));
  return list_payload(to_json(head), all.size());
}

}  // namespace

Service::Service(BuildOptions options) : holder_(build_engine(options, 1)) {}

Service::Service(std::shared_ptr<const EngineState> state) : holder_(std::move(state)) {}

std::size_t Service::add_relation(const std::string& a, const std::string& b) {
  std::lock_guard lock(writer_);
  pending_.emplace_back(normalize(a), normalize(b));
  return pending_.size();
}

std::uint64_t Service::rebuild() {
  std::lock_guard lock(writer_);
  const auto current = holder_.current();
  BuildOptions options = current->options;
  options.extra_relations.insert(options.extra_relations.end(), pending_.begin(), pending_.end());
  auto next = build_engine(options, current->generation + 1);
  pending_.clear();
  holder_.publish(next);
  return next->generation;
}

ApiResponse Service::handle(const ApiRequest& request) {
  const auto state = holder_.current();
  try {
    if (request.method == "GET") return handle_get(*state, request);
    if (request.method == "POST") {
      if (request.path == "/api/relations") {
        const json body = json::parse(request.body, nullptr, false);
        if (!body.is_object() || !body.contains("a") || !body.contains("b") ||
            !body["a"].is_string() || !body["b"].is_string()) {
          throw Error(ErrorCode::InvalidArgument, "expected {\"a\": str, \"b\": str}");
        }
        const auto pending =
            add_relation(body["a"].get<std::string>(), body["b"].get<std::string>());
        return ok({{"pending", pending}, {"rebuild_required", true}}, state->generation, 202);
      }
      if (request.path == "/api/rebuild") {
        const auto generation = rebuild();
        return ok({{"generation", generation}}, generation);
      }
    }
    return fail({"not_found", "no route for " + request.method + " " + request.path, 404},
                state->generation);
  } catch (const Error& e) {
    return fail(to_api_error(e), state->generation);
  }
}

ApiResponse Service::handle_get(const EngineState& state, const ApiRequest& req) const {
  const auto parts = split_path(req.path);
  const auto gen = state.generation;
  const auto not_found = [&] {
    return fail({"not_found", "no route for GET " + req.path, 404}, gen);
  };
  if (parts.size() < 2 || parts[0] != "api") return not_found();
  const auto& nav = *state.navigator;

  if (parts[1] == "articles" && parts.size() == 3) {
    const std::string id(parts[2]);
    const Article* a = state.articles.find(id);
    if (a == nullptr) throw Error(ErrorCode::UnknownArticle, "unknown article: " + id);
    auto it = state.taglists.find(id);
    return ok(to_json(*a, it == state.taglists.end() ? nullptr : &it->second), gen);
  }
  if (parts[1] == "tags" && parts.size() == 2) {
    const int min_font = int_param<int>(req, "min_font", kDefaultMinFont);
    const int max_font = int_param<int>(req, "max_font", kDefaultMaxFont);
    const auto cloud = build_cloud(state.global, top_param(req), min_font, max_font);
    return ok(list_payload(to_json(cloud), state.global.size()), gen);
  }
  if (parts[1] == "tags" && parts.size() == 4) {
    const std::string tag = state.canonical_tag(parts[2]);
    const std::size_t top = top_param(req);
    if (parts[3] == "articles") {
      const auto all = bool_param(req, "popular") ? nav.popular(tag) : nav.articles_with_tag(tag);
      return ok(truncated(all, top), gen);
    }
    if (parts[3] == "related") return ok(truncated(nav.pivot(tag), top), gen);
    return not_found();
  }
  if (parts[1] == "filter" && parts.size() == 2) {
    const auto ids = nav.filter_articles(tag_set(state, param(req, "include")),
                                         tag_set(state, param(req, "exclude")));
    return ok(truncated(ids, top_param(req)), gen);
  }
  if (parts[1] == "search" && parts.size() == 2) {
    const auto fields = param(req, "fields");
    const FieldConfig config = fields.empty() ? FieldConfig{} : FieldConfig::parse(fields);
    return ok(truncated(state.index.search(param(req, "q"), config), top_param(req)), gen);
  }
  if (parts[1] == "categories" && parts.size() == 4 && parts[3] == "articles") {
    return ok(truncated(nav.category_members(parts[2]), top_param(req)), gen);
  }
  if (parts[1] == "stats" && parts.size() == 3) {
    if (parts[2] == "presence") return ok(to_json(state.presence), gen);
    if (parts[2] == "curve") return ok(to_json(state.curve), gen);
  }
  return not_found();
}

}  // namespace tagnav
