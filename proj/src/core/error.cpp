#include "tmac/core/error.hpp"

namespace tmac {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroLength: return "ZeroLength";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::OversizeRegister: return "OversizeRegister";
    case Errc::MixedStateUnsupported: return "MixedStateUnsupported";
    case Errc::TokenConsumed: return "TokenConsumed";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::PadExhausted: return "PadExhausted";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::UnsupportedQueryShape: return "UnsupportedQueryShape";
    case Errc::BadFactor: return "BadFactor";
    case Errc::NotConverged: return "NotConverged";
    case Errc::ConsumedBill: return "ConsumedBill";
    case Errc::UnknownAdversary: return "UnknownAdversary";
    case Errc::MalformedEncoding: return "MalformedEncoding";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tmac
