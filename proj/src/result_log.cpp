#include "qstirling/result_log.hpp"

#include <openssl/sha.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace qstirling {

std::string content_hash(const std::string& content) {
  const std::string blob = "blob " + std::to_string(content.size()) + std::string(1, '\0') + content;
  unsigned char digest[SHA_DIGEST_LENGTH];
  SHA1(reinterpret_cast<const unsigned char*>(blob.data()), blob.size(), digest);
  std::string hex;
  char buf[3];
  for (unsigned char c : digest) {
    std::snprintf(buf, sizeof buf, "%02x", c);
    hex += buf;
  }
  return hex;
}

namespace {

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

nlohmann::json make_log_record(const std::string& command, const nlohmann::json& params,
                               const nlohmann::json& report, const std::string& outcome, double elapsed_ms) {
  return {{"timestamp", utc_now()},
          {"command", command},
          {"params", params},
          {"outcome", outcome},
          {"elapsed_ms", elapsed_ms},
          {"input_hash", content_hash(params.dump())},
          {"report_hash", content_hash(report.dump())}};
}

void append_log(const std::string& path, const nlohmann::json& record) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open log file " + path);
  out << record.dump() << '\n';
}

}  // namespace qstirling
