#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tmac {

enum class Errc {
  ZeroLength,
  LengthMismatch,
  OversizeRegister,
  MixedStateUnsupported,
  TokenConsumed,
  DomainMismatch,
  PadExhausted,
  BudgetExceeded,
  UnsupportedQueryShape,
  BadFactor,
  NotConverged,
  ConsumedBill,
  UnknownAdversary,
  MalformedEncoding,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tmac
