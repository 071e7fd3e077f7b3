#pragma once

#include <atomic>
#include <cstdint>
#include <optional>

#include "tmac/ctmac/ctmac.hpp"

namespace tmac::apps {

/// Program M: hard-coded s0, s1 and the CTMAC key. Returns s_m on a valid
/// signature for m, nothing otherwise.
struct WrappedProgram {
  bool s0 = false;
  bool s1 = false;
  ctmac::SecretKey key;
  double eta = 0.07;

  std::optional<bool> operator()(bool m, const BitString& sigma) const;
};

/// Step budget: a query cap plus a per-query work cap (signature length).
struct FwrapBudget {
  std::uint64_t max_queries = std::uint64_t{1} << 20;
  std::uint64_t max_work = std::uint64_t{1} << 24;
};

/// Classical message to the hardware. There is no quantum message type.
struct FwrapQuery {
  bool m = false;
  BitString sigma;
};

/// Stateless hardware around a WrappedProgram. The answer depends only on the
/// query; the counter exists to enforce the budget.
class Fwrap {
 public:
  Fwrap(WrappedProgram program, FwrapBudget budget) : program_(std::move(program)), budget_(budget) {}
  Fwrap(const Fwrap& o) : program_(o.program_), budget_(o.budget_), queries_(o.queries_.load()) {}

  /// nullopt is bottom: invalid signature, over budget, or too much work.
  std::optional<bool> run(const FwrapQuery& q);
  std::uint64_t queries() const { return queries_.load(); }

 private:
  WrappedProgram program_;
  FwrapBudget budget_;
  std::atomic<std::uint64_t> queries_{0};
};

Fwrap fwrap_create(WrappedProgram program, FwrapBudget budget = {});
inline std::optional<bool> fwrap_run(Fwrap& h, const FwrapQuery& q) { return h.run(q); }

}  // namespace tmac::apps
