#include "qtree/report.hpp"

namespace qtree {

const char* to_string(ReportCert c) {
  switch (c) {
    case ReportCert::ProvedZero: return "ProvedZero";
    case ReportCert::ExactMatch: return "ExactMatch";
    case ReportCert::Irreducible: return "Irreducible";
    case ReportCert::BudgetExhausted: return "BudgetExhausted";
    case ReportCert::FailedExact: return "FailedExact";
    case ReportCert::FailedNumeric: return "FailedNumeric";
    case ReportCert::Unverified: return "Unverified";
  }
  return "?";
}

ReportCert from_certificate(Certificate c) {
  switch (c) {
    case Certificate::ProvedZero: return ReportCert::ProvedZero;
    case Certificate::Irreducible: return ReportCert::Irreducible;
    case Certificate::BudgetExhausted: return ReportCert::BudgetExhausted;
  }
  return ReportCert::Unverified;
}

bool is_pass(ReportCert c) {
  return c == ReportCert::ProvedZero || c == ReportCert::ExactMatch;
}

bool VerificationReport::pass() const {
  for (const auto& id : identities) {
    if (!is_pass(id.certificate)) return false;
  }
  return true;
}

json VerificationReport::to_json(bool with_timings) const {
  json out;
  out["suite"] = suite;
  out["params"] = params;
  json ids = json::array();
  for (const auto& id : identities) {
    json j;
    j["name"] = id.name;
    j["lhs"] = id.lhs;
    j["rhs"] = id.rhs;
    j["certificate"] = to_string(id.certificate);
    if (with_timings) j["millis"] = id.millis;
    ids.push_back(std::move(j));
  }
  out["identities"] = std::move(ids);
  out["pass"] = pass();
  if (with_timings) out["total_millis"] = total_millis;
  return out;
}

json SuiteConfig::to_json() const {
  json j;
  j["k"] = k;
  j["d"] = d;
  j["g"] = g;
  j["wmax"] = wmax;
  j["samples"] = samples;
  j["seed"] = seed;
  j["budget"] = budget;
  j["tol"] = tol;
  return j;
}

std::string clip_expr(const std::string& s) {
  constexpr std::size_t kMax = 4096;
  if (s.size() <= kMax) return s;
  return s.substr(0, kMax) + " ... [" + std::to_string(s.size()) + " chars]";
}

}  // namespace qtree
