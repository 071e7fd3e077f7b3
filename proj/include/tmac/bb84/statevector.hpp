#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "tmac/bb84/qubit.hpp"

namespace tmac::bb84 {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>;  // row-major

/// Dense amplitude vector, qubit 0 most significant (lexicographic order).
/// Validation oracle for the symbolic model; capped at kMaxQubits.
class StateVector {
 public:
  static constexpr int kMaxQubits = 14;

  explicit StateVector(int n);  // |0...0>

  int qubits() const { return n_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  double norm2() const;

  void apply(int q, const Mat2& u);
  void x(int q);
  void h(int q);

  /// Probability that qubit q reads 1 after rotating it into `basis`.
  double prob_one(int q, Basis basis) const;

  /// Two-outcome projective measurement {P, 1-P}, P diagonal in the
  /// computational basis with support pred. Collapses and renormalises.
  bool measure_predicate(const std::function<bool(std::uint64_t)>& pred, Rng& rng);

 private:
  std::size_t bit_of(int q) const { return std::size_t{1} << (n_ - 1 - q); }
  int n_;
  std::vector<cplx> amp_;
};

const Mat2& gate_x();
const Mat2& gate_y();
const Mat2& gate_z();
const Mat2& gate_h();
Mat2 gate_breidbart();  // maps e0 -> |0>, e1 -> |1>

StateVector sv_prepare(const std::vector<QubitState>& token);
StateVector sv_prepare(const QubitRegister& reg);

/// Sample all qubits, qubit i in bases[i]. Consumes the state.
BitString sv_measure_all(StateVector&& sv, const std::vector<Basis>& bases, Rng& rng);

}  // namespace tmac::bb84
