#include "parlearn/transcript.hpp"

#include <sstream>

#include "parlearn/errors.hpp"

namespace parlearn {

void SessionTranscript::record(Json event) {
  if (!event.is_object() || !event.contains("event")) {
    throw Error("transcript records need an \"event\" field");
  }
  events_.push_back(std::move(event));
}

std::vector<Json> SessionTranscript::events_of(std::string_view kind) const {
  std::vector<Json> out;
  for (const auto& e : events_) {
    if (e["event"] == kind) out.push_back(e);
  }
  return out;
}

std::size_t SessionTranscript::count(std::string_view kind,
                                     std::optional<std::size_t> iteration) const {
  std::size_t n = 0;
  for (const auto& e : events_) {
    if (e["event"] != kind) continue;
    if (iteration && e.value("iteration", std::size_t{0}) != *iteration) continue;
    ++n;
  }
  return n;
}

std::string SessionTranscript::to_jsonl() const {
  std::string out;
  for (const auto& e : events_) {
    out += e.dump();
    out += '\n';
  }
  return out;
}

void SessionTranscript::write(const std::filesystem::path& path) const {
  write_text_file(path, to_jsonl());
}

SessionTranscript SessionTranscript::from_jsonl(std::string_view text) {
  SessionTranscript t;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      t.record(Json::parse(line));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("transcript line: ") + e.what());
    }
  }
  return t;
}

}  // namespace parlearn
