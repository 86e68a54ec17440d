#include "qtree/suite_util.hpp"

namespace qtree {

template <class Fn>
IdentityResult SuiteRunner::timed(const std::string& name,
                                  const std::string& lhs,
                                  const std::string& rhs, Fn&& fn) {
  IdentityResult r;
  r.name = name;
  r.lhs = clip_expr(lhs);
  r.rhs = clip_expr(rhs);
  auto t0 = std::chrono::steady_clock::now();
  r.certificate = fn();
  auto t1 = std::chrono::steady_clock::now();
  r.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

void SuiteRunner::check_zero(const std::string& name, const Element& lhs,
                             const Element& rhs) {
  Element diff = lhs - rhs;
  IdentityResult r =
      timed(name, to_string(lhs), to_string(rhs), [&]() {
        return from_certificate(prove_zero(diff, cfg_.policy()).certificate);
      });
  if (corpus_ && r.certificate == ReportCert::ProvedZero) {
    corpus_->add(report_.suite + "/" + name, diff);
  }
  record(std::move(r));
}

void SuiteRunner::check_zero(const std::string& name, const TensorElement& lhs,
                             const TensorElement& rhs) {
  TensorElement diff = lhs - rhs;
  IdentityResult r =
      timed(name, to_string(lhs), to_string(rhs), [&]() {
        return from_certificate(
            prove_zero_tensor(diff, cfg_.policy()).certificate);
      });
  if (corpus_ && r.certificate == ReportCert::ProvedZero) {
    corpus_->add(report_.suite + "/" + name, diff);
  }
  record(std::move(r));
}

void SuiteRunner::check_zero(const std::string& name, const WreathElement& lhs,
                             const WreathElement& rhs) {
  WreathElement diff = lhs - rhs;
  IdentityResult r =
      timed(name, to_string(lhs), to_string(rhs), [&]() {
        return from_certificate(
            wreath_prove_zero(diff, cfg_.reduction_budget()).certificate);
      });
  if (corpus_ && r.certificate == ReportCert::ProvedZero) {
    corpus_->add(report_.suite + "/" + name, diff);
  }
  record(std::move(r));
}

void SuiteRunner::check_exact(const std::string& name, bool ok,
                              const std::string& lhs, const std::string& rhs) {
  IdentityResult r;
  r.name = name;
  r.lhs = clip_expr(lhs);
  r.rhs = clip_expr(rhs);
  r.certificate = ok ? ReportCert::ExactMatch : ReportCert::FailedExact;
  record(std::move(r));
}

void SuiteRunner::record(IdentityResult r) {
  report_.total_millis += r.millis;
  report_.identities.push_back(std::move(r));
}

VerificationReport SuiteRunner::take() { return std::move(report_); }

}  // namespace qtree
