#include "orbitalg/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace orbitalg {

bool VerificationReport::pass() const {
  return std::all_of(records.begin(), records.end(), [](const ReportRecord& r) { return r.pass; });
}

std::string VerificationReport::to_json() const {
  using ojson = nlohmann::ordered_json;
  ojson doc;
  doc["claim"] = claim;
  ojson p = ojson::object();
  for (const auto& [k, v] : params) p[k] = v;
  doc["params"] = std::move(p);
  ojson recs = ojson::array();
  for (const auto& r : records) {
    ojson rec;
    rec["degree"] = r.degree;
    if (!r.label.empty()) rec["label"] = r.label;
    ojson dims = ojson::object();
    for (const auto& [k, v] : r.dims) dims[k] = v;
    rec["dims"] = std::move(dims);
    rec["verdict"] = r.pass ? "pass" : "fail";
    if (r.witness) rec["witness"] = *r.witness;
    recs.push_back(std::move(rec));
  }
  doc["records"] = std::move(recs);
  if (!warnings.empty()) doc["warnings"] = warnings;
  doc["verdict"] = pass() ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "claim: " << claim << "\n";
  for (const auto& [k, v] : params) out << "  " << k << " = " << v << "\n";
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  for (const auto& r : records) {
    out << (r.pass ? "  [pass] " : "  [FAIL] ") << "degree " << r.degree;
    if (!r.label.empty()) out << "  " << r.label;
    for (const auto& [k, v] : r.dims) out << "  " << k << "=" << v;
    if (r.witness) out << "  witness: " << *r.witness;
    out << "\n";
  }
  out << "verdict: " << (pass() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace orbitalg
