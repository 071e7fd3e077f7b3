#include <gtest/gtest.h>

#include <cmath>

#include "tmac/bb84/qubit.hpp"
#include "tmac/bb84/statevector.hpp"
#include "tmac/core/error.hpp"
#include "tmac/games/stats.hpp"

using namespace tmac;
using namespace tmac::bb84;

namespace {

std::vector<QubitState> four_states() {
  return {QubitState::pure(false, Basis::Computational), QubitState::pure(true, Basis::Computational),
          QubitState::pure(false, Basis::Hadamard), QubitState::pure(true, Basis::Hadamard)};
}

// Probability that the symbolic model reads 1, written out by hand.
double symbolic_prob_one(const QubitState& q, Basis b) {
  if (q.mixed || q.basis != b) return 0.5;
  return q.bit ? 1.0 : 0.0;
}

}  // namespace

TEST(Bb84, MatchedBasisIsExactAgainstStatevector) {
  Rng rng(1);
  for (const auto& q : four_states()) {
    const StateVector sv = sv_prepare(std::vector<QubitState>{q});
    EXPECT_NEAR(sv.prob_one(0, q.basis), q.bit ? 1.0 : 0.0, 1e-12) << to_string(q);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(measure(q, q.basis, rng), q.bit);
  }
}

TEST(Bb84, MismatchedBasisChiSquare) {
  Rng rng(2);
  const int n = 100000;
  for (const auto& q : four_states()) {
    const Basis other = q.basis == Basis::Computational ? Basis::Hadamard : Basis::Computational;
    const StateVector sv = sv_prepare(std::vector<QubitState>{q});
    const double p1 = sv.prob_one(0, other);
    EXPECT_NEAR(p1, 0.5, 1e-12);
    std::vector<std::uint64_t> counts(2, 0);
    for (int i = 0; i < n; ++i) ++counts[measure(q, other, rng)];
    // four simultaneous tests: family-wise 0.01
    EXPECT_GT(games::chi_square_pvalue(counts, {1 - p1, p1}), 0.01 / 4) << to_string(q);
  }
}

TEST(Bb84, StatevectorSamplingMatchesModel) {
  Rng rng(3);
  const auto qs = four_states();
  const std::vector<Basis> bases = {Basis::Hadamard, Basis::Computational, Basis::Hadamard, Basis::Computational};
  std::vector<std::uint64_t> ones(4, 0);
  const int n = 20000;
  for (int t = 0; t < n; ++t) {
    const BitString out = sv_measure_all(sv_prepare(qs), bases, rng);
    for (int i = 0; i < 4; ++i) ones[i] += out[i];
  }
  for (int i = 0; i < 4; ++i) {
    const double p = symbolic_prob_one(qs[i], bases[i]);
    if (p == 0.5) EXPECT_GT(games::chi_square_pvalue({n - ones[i], ones[i]}, {0.5, 0.5}), 0.001);
    else EXPECT_EQ(ones[i], p == 1.0 ? n : 0u);
  }
}

TEST(Bb84, NoiseMapsAgreeWithPauliGates) {
  Rng rng(4);
  const std::vector<std::pair<NoiseMap, const Mat2*>> maps = {
      {NoiseMap::PauliX, &gate_x()}, {NoiseMap::PauliY, &gate_y()}, {NoiseMap::PauliZ, &gate_z()}};
  for (const auto& [map, gate] : maps)
    for (const auto& q : four_states()) {
      StateVector sv = sv_prepare(std::vector<QubitState>{q});
      sv.apply(0, *gate);
      const QubitState c = corrupt(q, map, rng);
      for (Basis b : {Basis::Computational, Basis::Hadamard})
        EXPECT_NEAR(sv.prob_one(0, b), symbolic_prob_one(c, b), 1e-12) << to_string(map) << " " << to_string(q);
    }
  EXPECT_TRUE(corrupt(four_states()[2], NoiseMap::Depolarize, rng).mixed);
}

TEST(Bb84, BreidbartSuccessEqualsCos2) {
  EXPECT_NEAR(breidbart_success(), std::pow(std::cos(M_PI / 8), 2), 1e-15);
  for (const auto& q : four_states()) {
    StateVector sv = sv_prepare(std::vector<QubitState>{q});
    sv.apply(0, gate_breidbart());
    const double p_correct = q.bit ? sv.prob_one(0, Basis::Computational) : 1 - sv.prob_one(0, Basis::Computational);
    EXPECT_NEAR(p_correct, breidbart_success(), 1e-12) << to_string(q);
  }
  Rng rng(5);
  int ok = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto q = four_states()[i % 4];
    ok += measure_breidbart(q, rng) == q.bit;
  }
  EXPECT_NEAR(static_cast<double>(ok) / n, breidbart_success(), 0.005);
}

TEST(Bb84, PackedRegisterRoundTrip) {
  std::vector<QubitState> qs = four_states();
  qs.push_back(QubitState::maximally_mixed());
  const QubitRegister reg = QubitRegister::from_states(qs);
  EXPECT_EQ(reg.states(), qs);
  Rng rng(6);
  const BitString out = measure_all(reg, BitString::from_string("00110"), rng);
  EXPECT_EQ(out[0], false);
  EXPECT_EQ(out[1], true);
  EXPECT_EQ(out[2], false);
  EXPECT_EQ(out[3], true);
  EXPECT_THROW(measure_all(reg, BitString(4), rng), Error);
}

TEST(Bb84, SparseNoiseRate) {
  Rng rng(7);
  QubitRegister reg(200000);
  apply_noise(reg, {0.01, NoiseMap::PauliY}, rng);
  const double rate = static_cast<double>(reg.value.count()) / 200000;
  EXPECT_NEAR(rate, 0.01, 0.001);
  QubitRegister clean(1000);
  apply_noise(clean, {0.0, NoiseMap::PauliY}, rng);
  EXPECT_EQ(clean.value.count(), 0u);
}

TEST(Bb84, ParseNoise) {
  const NoiseSpec s = parse_noise("Y:0.1");
  EXPECT_EQ(s.map, NoiseMap::PauliY);
  EXPECT_DOUBLE_EQ(s.p, 0.1);
  EXPECT_EQ(parse_noise("depolarize:0.05").map, NoiseMap::Depolarize);
  EXPECT_THROW(parse_noise("Y"), Error);
  EXPECT_THROW(parse_noise("Y:1.5"), Error);
  EXPECT_THROW(parse_noise("Q:0.1"), Error);
}

TEST(StateVector, Limits) {
  EXPECT_THROW(StateVector(StateVector::kMaxQubits + 1), Error);
  StateVector sv(3);
  sv.h(1);
  EXPECT_NEAR(sv.norm2(), 1.0, 1e-12);
  EXPECT_NEAR(sv.prob_one(1, Basis::Computational), 0.5, 1e-12);
  EXPECT_NEAR(sv.prob_one(1, Basis::Hadamard), 0.0, 1e-12);
}
