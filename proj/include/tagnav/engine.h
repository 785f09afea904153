#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tagnav/analytics.h"
#include "tagnav/corpus.h"
#include "tagnav/navigation.h"
#include "tagnav/normalizer.h"
#include "tagnav/search_index.h"
#include "tagnav/tag_store.h"

namespace tagnav {

struct BuildOptions {
  std::filesystem::path articles_path;
  std::filesystem::path tags_path;
  std::optional<std::filesystem::path> relations_path;
  std::vector<TagRelation> extra_relations;  // replayed after the relations file
  std::vector<std::string> blacklist = kDefaultBlacklist;
  std::size_t min_users = kDefaultMinUsers;
  FieldConfig index_fields;
};

struct BuildReport {
  std::size_t articles = 0;
  std::size_t dangling_links = 0;
  std::size_t raw_assignments = 0;
  std::size_t unmatched_assignments = 0;  // name an article absent from the corpus
  std::size_t after_blacklist = 0;
  std::size_t after_threshold = 0;
  std::size_t deduplicated = 0;
  std::size_t tagged_articles = 0;
  std::size_t distinct_tags = 0;
  std::size_t relations = 0;

  bool operator==(const BuildReport&) const = default;
};

// Everything derived from one generation of inputs. Built once, then only read.
struct EngineState {
  EngineState() = default;
  EngineState(const EngineState&) = delete;
  EngineState& operator=(const EngineState&) = delete;

  std::uint64_t generation = 0;
  BuildOptions options;
  std::chrono::system_clock::time_point built_at;

  ArticleSet articles;
  AssignmentSet assignments;  // blacklisted and thresholded
  SynonymGraph graph;
  TagLists taglists;
  GlobalTagWeights global;
  std::unique_ptr<Navigator> navigator;
  Index index;
  PresenceStats presence;
  std::vector<CurveRow> curve;
  BuildReport report;

  // normalize + canonical. Throws Error(EmptyTag).
  std::string canonical_tag(std::string_view raw) const;
};

// load -> import -> blacklist -> threshold -> aggregate -> index.
// Errors carry the offending file and line.
std::shared_ptr<const EngineState> build_engine(const BuildOptions& options,
                                                std::uint64_t generation = 1);

std::string format_report(const BuildReport& report);

// Publishes whole states; readers holding an older snapshot keep it alive.
class StateHolder {
 public:
  explicit StateHolder(std::shared_ptr<const EngineState> initial)
      : state_(std::move(initial)) {}

  std::shared_ptr<const EngineState> current() const {
    std::lock_guard lock(mutex_);
    return state_;
  }

  void publish(std::shared_ptr<const EngineState> next) {
    std::lock_guard lock(mutex_);
    state_ = std::move(next);
  }

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const EngineState> state_;
};

}  // namespace tagnav
