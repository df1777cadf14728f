#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace coalg {

using Json = nlohmann::ordered_json;

enum class Verdict { Ok, Bounded, Fail };

std::string to_string(Verdict v);
/// Fail dominates Bounded dominates Ok.
Verdict combine(Verdict a, Verdict b);

/// One command's outcome.  Details are checks in execution order, each an
/// object with at least "check" and "verdict".
struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<Json> details;
  std::vector<Json> witnesses;
  long long millis = 0;

  /// Appends a detail and folds its verdict in.
  Json& add(const std::string& check, Verdict v, Json extra = Json::object());
  void witness(Json w) { witnesses.push_back(std::move(w)); }

  Verdict verdict() const { return verdict_; }
  bool failed() const { return verdict_ == Verdict::Fail; }

  /// {schema, command, inputs, verdict, details, witnesses, millis}.
  Json to_json() const;
  /// Indented text: one line per detail, then witnesses.
  std::string to_text() const;

 private:
  Verdict verdict_ = Verdict::Ok;
};

inline Verdict verdict_of(bool ok) { return ok ? Verdict::Ok : Verdict::Fail; }

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long long millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace coalg
