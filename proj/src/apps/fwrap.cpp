#include "tmac/apps/fwrap.hpp"

namespace tmac::apps {

std::optional<bool> WrappedProgram::operator()(bool m, const BitString& sigma) const {
  if (sigma.size() != key.lambda()) return std::nullopt;
  if (!ctmac::accepts(key, m, sigma, eta)) return std::nullopt;
  return m ? s1 : s0;
}

std::optional<bool> Fwrap::run(const FwrapQuery& q) {
  if (queries_.fetch_add(1) >= budget_.max_queries) return std::nullopt;
  if (q.sigma.size() > budget_.max_work) return std::nullopt;
  return program_(q.m, q.sigma);
}

Fwrap fwrap_create(WrappedProgram program, FwrapBudget budget) { return Fwrap(std::move(program), budget); }

}  // namespace tmac::apps
