#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sixv {

enum class Verdict { Pass, Fail, ConjectureEvidence };

std::string_view to_string(Verdict v);

struct CheckRecord {
  std::string name;
  std::string anchor;  // equation tag of the relation being checked
  std::string params;  // canonical text of the parameters used
  double residual = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::Fail;
  std::optional<int> eigenstate;
};

/// verdict = Pass iff residual < tolerance (NaN fails); conjecture records
/// always carry ConjectureEvidence.
CheckRecord make_record(std::string name, std::string anchor, double residual, double tolerance,
                        std::string params = {}, bool conjecture = false);

struct CheckReport {
  std::vector<CheckRecord> records;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void append(const CheckReport& other);

  /// True when no record has verdict Fail.
  bool passed() const;
  double max_residual() const;
  std::size_t failures() const;
};

/// 64-bit FNV-1a, used for the params/config digests in report files.
std::uint64_t fnv1a64(std::string_view text);
std::string hex_digest(std::string_view text);

/// `check=<name> anchor=<tag> residual=<e> tol=<e> verdict=<v> params_digest=<hex>`
std::string format_record(const CheckRecord& r);

}  // namespace sixv
