#pragma once

#include <chrono>
#include <string>

#include "qtree/report.hpp"

namespace qtree {

/// Accumulates identity checks into a VerificationReport and feeds every
/// certified-zero difference into the soundness corpus.
class SuiteRunner {
 public:
  SuiteRunner(std::string suite, const SuiteConfig& cfg, ZeroCorpus* corpus)
      : cfg_(cfg), corpus_(corpus) {
    report_.suite = std::move(suite);
    report_.params = cfg.to_json();
  }

  void check_zero(const std::string& name, const Element& lhs,
                  const Element& rhs);
  void check_zero(const std::string& name, const TensorElement& lhs,
                  const TensorElement& rhs);
  void check_zero(const std::string& name, const WreathElement& lhs,
                  const WreathElement& rhs);
  void check_exact(const std::string& name, bool ok, const std::string& lhs,
                   const std::string& rhs);
  void record(IdentityResult r);

  const SuiteConfig& config() const { return cfg_; }
  VerificationReport take();

 private:
  template <class Fn>
  IdentityResult timed(const std::string& name, const std::string& lhs,
                       const std::string& rhs, Fn&& fn);

  SuiteConfig cfg_;
  ZeroCorpus* corpus_;
  VerificationReport report_;
};

}  // namespace qtree
