#include "sixv/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sixv {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::ConjectureEvidence: return "conjecture_evidence";
  }
  return "fail";
}

CheckRecord make_record(std::string name, std::string anchor, double residual, double tolerance,
                        std::string params, bool conjecture) {
  CheckRecord r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.params = std::move(params);
  r.residual = residual;
  r.tolerance = tolerance;
  if (conjecture) {
    r.verdict = Verdict::ConjectureEvidence;
  } else {
    r.verdict = (residual < tolerance) ? Verdict::Pass : Verdict::Fail;
  }
  return r;
}

void CheckReport::append(const CheckReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

bool CheckReport::passed() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) {
    return r.verdict == Verdict::Fail;
  }));
}

double CheckReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : records) {
    if (std::isnan(r.residual)) return r.residual;
    m = std::max(m, r.residual);
  }
  return m;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : text) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex_digest(std::string_view text) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
  return buf;
}

std::string format_record(const CheckRecord& r) {
  char num[64];
  std::string line = "check=" + r.name + " anchor=" + r.anchor;
  std::snprintf(num, sizeof num, "%.6e", r.residual);
  line += " residual=";
  line += num;
  std::snprintf(num, sizeof num, "%.3e", r.tolerance);
  line += " tol=";
  line += num;
  line += " verdict=";
  line += to_string(r.verdict);
  line += " params_digest=" + hex_digest(r.params);
  return line;
}

}  // namespace sixv
