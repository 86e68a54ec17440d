#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "qtree/engine.hpp"
#include "qtree/tensor.hpp"
#include "qtree/wreath.hpp"

namespace qtree {

using json = nlohmann::ordered_json;

/// Certificate attached to one checked identity in a report.
enum class ReportCert {
  ProvedZero,      // engine certificate
  ExactMatch,      // exact (rational / combinatorial) equality
  Irreducible,     // reduction finished on a nonzero fixpoint
  BudgetExhausted,
  FailedExact,     // exact check failed
  FailedNumeric,   // numeric residual above tolerance
  Unverified,      // skipped, e.g. missing coideal witness
};

const char* to_string(ReportCert c);
ReportCert from_certificate(Certificate c);
bool is_pass(ReportCert c);

struct IdentityResult {
  std::string name;
  std::string lhs, rhs;
  ReportCert certificate = ReportCert::Unverified;
  std::int64_t millis = 0;
};

struct VerificationReport {
  std::string suite;
  json params = json::object();
  std::vector<IdentityResult> identities;
  std::int64_t total_millis = 0;

  bool pass() const;
  /// Deterministic serialization; per-identity timings only when asked for.
  json to_json(bool with_timings = false) const;
};

/// Shared suite parameters; the seed is recorded in every report.
struct SuiteConfig {
  int k = 2;
  int d = 2;        // generator depth bound
  int g = 2;        // random-monomial degree bound
  int wmax = 2;     // word-length bound for restriction maps
  int samples = 25; // random monomials per suite
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000;
  double tol = 1e-10;

  json to_json() const;
  ReductionBudget reduction_budget() const { return {budget}; }
  SearchPolicy policy() const { return {{budget}, 1}; }
};

/// Collects every element certified zero during a run, for the soundness
/// sweep against the numerical representations and the classical oracle.
struct ZeroCorpus {
  std::vector<std::pair<std::string, Element>> elements;
  std::vector<std::pair<std::string, TensorElement>> tensors;
  std::vector<std::pair<std::string, WreathElement>> wreath;

  void add(const std::string& name, const Element& e) {
    elements.emplace_back(name, e);
  }
  void add(const std::string& name, const TensorElement& t) {
    tensors.emplace_back(name, t);
  }
  void add(const std::string& name, const WreathElement& w) {
    wreath.emplace_back(name, w);
  }
  std::size_t size() const {
    return elements.size() + tensors.size() + wreath.size();
  }
};

/// Caps identity strings embedded in reports; longer ones are summarized.
std::string clip_expr(const std::string& s);

}  // namespace qtree
