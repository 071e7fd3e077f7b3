#include "tmac/bb84/statevector.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tmac/core/error.hpp"

namespace tmac::bb84 {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

StateVector::StateVector(int n) : n_(n) {
  if (n < 0 || n > kMaxQubits)
    fail(Errc::OversizeRegister, std::to_string(n) + " qubits exceeds the statevector cap");
  amp_.assign(std::size_t{1} << n, cplx{0.0, 0.0});
  amp_[0] = 1.0;
}

double StateVector::norm2() const {
  double s = 0;
  for (const cplx& a : amp_) s += std::norm(a);
  return s;
}

void StateVector::apply(int q, const Mat2& u) {
  const std::size_t m = bit_of(q);
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if (i & m) continue;
    const cplx a0 = amp_[i], a1 = amp_[i | m];
    amp_[i] = u[0] * a0 + u[1] * a1;
    amp_[i | m] = u[2] * a0 + u[3] * a1;
  }
}

void StateVector::x(int q) { apply(q, gate_x()); }
void StateVector::h(int q) { apply(q, gate_h()); }

double StateVector::prob_one(int q, Basis basis) const {
  StateVector tmp = *this;
  if (basis == Basis::Hadamard) tmp.h(q);
  const std::size_t m = bit_of(q);
  double p = 0;
  for (std::size_t i = 0; i < amp_.size(); ++i)
    if (i & m) p += std::norm(tmp.amp_[i]);
  return p;
}

bool StateVector::measure_predicate(const std::function<bool(std::uint64_t)>& pred, Rng& rng) {
  double p1 = 0;
  for (std::size_t i = 0; i < amp_.size(); ++i)
    if (pred(i)) p1 += std::norm(amp_[i]);
  const bool r = rng.uniform01() < p1;
  const double keep = r ? p1 : 1.0 - p1;
  const double scale = keep > 0 ? 1.0 / std::sqrt(keep) : 0.0;
  for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] = (pred(i) == r) ? amp_[i] * scale : cplx{};
  return r;
}

const Mat2& gate_x() {
  static const Mat2 g{0, 1, 1, 0};
  return g;
}
const Mat2& gate_y() {
  static const Mat2 g{0, cplx{0, -1}, cplx{0, 1}, 0};
  return g;
}
const Mat2& gate_z() {
  static const Mat2 g{1, 0, 0, -1};
  return g;
}
const Mat2& gate_h() {
  static const Mat2 g{kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
  return g;
}

Mat2 gate_breidbart() {
  const double c = std::cos(std::numbers::pi / 8), s = std::sin(std::numbers::pi / 8);
  return Mat2{c, s, -s, c};
}

StateVector sv_prepare(const std::vector<QubitState>& token) {
  const int n = static_cast<int>(token.size());
  if (token.size() > static_cast<std::size_t>(StateVector::kMaxQubits))
    fail(Errc::OversizeRegister, std::to_string(token.size()) + " qubits exceeds the statevector cap");
  for (const QubitState& q : token)
    if (q.mixed) fail(Errc::MixedStateUnsupported, "statevector cannot hold a maximally mixed qubit");
  StateVector sv(n);
  for (int i = 0; i < n; ++i) {
    if (token[i].bit) sv.x(i);
    if (token[i].basis == Basis::Hadamard) sv.h(i);
  }
  return sv;
}

StateVector sv_prepare(const QubitRegister& reg) { return sv_prepare(reg.states()); }

BitString sv_measure_all(StateVector&& sv, const std::vector<Basis>& bases, Rng& rng) {
  const int n = sv.qubits();
  if (bases.size() != static_cast<std::size_t>(n)) fail(Errc::LengthMismatch, "one basis per qubit required");
  for (int i = 0; i < n; ++i)
    if (bases[i] == Basis::Hadamard) sv.h(i);
  const double u = rng.uniform01();
  double acc = 0;
  const auto& amp = sv.amplitudes();
  std::size_t pick = amp.size() - 1;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    acc += std::norm(amp[i]);
    if (u < acc) {
      pick = i;
      break;
    }
  }
  // Rounding can leave acc just under 1; fall back to the last supported index.
  if (acc <= u)
    for (std::size_t i = amp.size(); i-- > 0;)
      if (std::norm(amp[i]) > 0) {
        pick = i;
        break;
      }
  BitString out(n);
  for (int i = 0; i < n; ++i) out.set(i, (pick >> (n - 1 - i)) & 1);
  StateVector spent(0);
  sv = std::move(spent);
  return out;
}

}  // namespace tmac::bb84
