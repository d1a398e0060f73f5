#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parlearn/io.hpp"

namespace parlearn {

/// Ordered event log of a learning session, serialized as JSONL. Every record
/// carries an "event" field: header, value_query, equivalence_query,
/// counterexample, hypothesis or rank.
class SessionTranscript {
 public:
  void record(Json event);

  const std::vector<Json>& events() const noexcept { return events_; }
  std::vector<Json> events_of(std::string_view kind) const;
  std::size_t count(std::string_view kind,
                    std::optional<std::size_t> iteration = std::nullopt) const;

  std::string to_jsonl() const;
  void write(const std::filesystem::path& path) const;
  static SessionTranscript from_jsonl(std::string_view text);

 private:
  std::vector<Json> events_;
};

}  // namespace parlearn
