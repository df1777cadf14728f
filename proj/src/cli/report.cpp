#include "coalg/cli/report.hpp"

namespace coalg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::Bounded: return "bounded";
    case Verdict::Fail: return "fail";
  }
  return "fail";
}

Verdict combine(Verdict a, Verdict b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

Json& Report::add(const std::string& check, Verdict v, Json extra) {
  Json d = Json::object();
  d["check"] = check;
  d["verdict"] = to_string(v);
  for (auto& [k, val] : extra.items()) d[k] = val;
  verdict_ = combine(verdict_, v);
  details.push_back(std::move(d));
  return details.back();
}

Json Report::to_json() const {
  Json j = Json::object();
  j["schema"] = 1;
  j["command"] = command;
  j["inputs"] = inputs;
  j["verdict"] = to_string(verdict_);
  j["details"] = details;
  j["witnesses"] = witnesses;
  j["millis"] = millis;
  return j;
}

namespace {

std::string inline_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string Report::to_text() const {
  std::string out = command + ": " + to_string(verdict_) + "\n";
  for (const auto& d : details) {
    out += "  [" + d.at("verdict").get<std::string>() + "] " + d.at("check").get<std::string>();
    for (const auto& [k, v] : d.items()) {
      if (k == "check" || k == "verdict") continue;
      out += "  " + k + "=" + inline_value(v);
    }
    out += "\n";
  }
  for (const auto& w : witnesses) out += "  witness: " + inline_value(w) + "\n";
  return out;
}

}  // namespace coalg
