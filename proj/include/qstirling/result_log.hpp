#pragma once

#include <string>

#include <json.hpp>

namespace qstirling {

// Git blob id of the content: SHA-1 over "blob <size>\0" + content, as hex.
std::string content_hash(const std::string& content);

// One log line: command, parameters, outcome, elapsed time, the content hash
// of the canonical parameter dump and of the report, and a UTC timestamp.
nlohmann::json make_log_record(const std::string& command, const nlohmann::json& params,
                               const nlohmann::json& report, const std::string& outcome, double elapsed_ms);

// Appends the record as a single line. Throws std::runtime_error when the
// file cannot be opened.
void append_log(const std::string& path, const nlohmann::json& record);

}  // namespace qstirling
