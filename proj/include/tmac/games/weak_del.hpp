#pragma once

#include <memory>
#include <string>

#include "tmac/bb84/qubit.hpp"
#include "tmac/core/bitstring.hpp"

namespace tmac::games {

/// Adversary for the weak certified-deletion game against E_m.
class DeletionAdversary {
 public:
  virtual ~DeletionAdversary() = default;
  virtual std::string name() const = 0;
  /// Receives c = H^k|a> and m; returns the deletion certificate.
  virtual BitString certificate(const bb84::QubitRegister& c, bool m, Rng& rng) = 0;
  /// Receives k after the certificate; returns the guess a'.
  virtual BitString guess(const BitString& k, Rng& rng) = 0;
};

/// Runs del honestly (measure in basis m), then keeps the bits that k says
/// were measured in the right basis and guesses the rest.
class HonestDeleteAdversary final : public DeletionAdversary {
 public:
  std::string name() const override { return "honest-delete"; }
  BitString certificate(const bb84::QubitRegister& c, bool m, Rng& rng) override;
  BitString guess(const BitString& k, Rng& rng) override;

 private:
  BitString cert_;
  bool m_ = false;
};

/// Measures every qubit in the intermediate basis and submits the outcome as
/// both certificate and guess.
class BreidbartAdversary final : public DeletionAdversary {
 public:
  std::string name() const override { return "breidbart"; }
  BitString certificate(const bb84::QubitRegister& c, bool m, Rng& rng) override;
  BitString guess(const BitString& k, Rng& rng) override;

  const BitString& outcome() const { return outcome_; }

 private:
  BitString outcome_;
};

struct WeakDelRun {
  bool won = false;
  bool certificate_valid = false;
  BitString a, k, guess;
};

/// k, a uniform; V = [cert|Cons_m == a|Cons_m] with Cons_m = {i : k_i = m};
/// the adversary then learns k and wins iff V and a' = a.
WeakDelRun run_weak_del_ind_detailed(bool m, DeletionAdversary& adv, std::size_t lambda, Rng& rng);
bool run_weak_del_ind(bool m, DeletionAdversary& adv, std::size_t lambda, Rng& rng);

std::unique_ptr<DeletionAdversary> make_deletion_adversary(const std::string& name);

}  // namespace tmac::games
