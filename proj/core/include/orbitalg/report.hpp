#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbitalg {

struct ReportRecord {
  std::uint32_t degree = 0;
  std::string label;  // optional, e.g. the trial generator of a probe
  std::vector<std::pair<std::string, std::size_t>> dims;
  bool pass = true;
  std::optional<std::string> witness;

  ReportRecord& dim(std::string name, std::size_t value) {
    dims.emplace_back(std::move(name), value);
    return *this;
  }
};

// Evidence for one claim at explicit degree bounds. The overall verdict is
// pass iff every record passes.
struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ReportRecord> records;
  std::vector<std::string> warnings;

  bool pass() const;
  VerificationReport& param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  // {claim, params, records: [{degree, dims, verdict, witness?}], verdict}.
  // Key order is fixed, so equal reports serialize to identical bytes.
  std::string to_json() const;
  // Per-degree dimension table.
  std::string to_text() const;
};

}  // namespace orbitalg
