#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tmac/bb84/statevector.hpp"
#include "tmac/games/transcript.hpp"
#include "tmac/lifts/lifts.hpp"

namespace tmac::games {

enum class VerifyAccess { None, Classical, Coherent };
enum class VrMode { Off, Vr, VrStar };

struct OracleSet {
  static constexpr std::uint64_t kPoly = std::uint64_t{1} << 20;

  std::uint64_t token_budget = 1;
  VerifyAccess verify = VerifyAccess::Classical;
  std::uint64_t verify_budget = kPoly;
  bool sign = false;
  std::uint64_t sign_budget = 0;
  VrMode vr = VrMode::Off;

  // Parameters of the bare CTMAC instance that VR and coherent oracles speak to.
  std::size_t ctmac_lambda = 0;
  double eta = 0.0;

  static OracleSet one_token_verify() { return {}; }
};

struct Submission {
  lifts::Document m;
  lifts::SchemeSignature sig;
};

struct VrResponse {
  bool result = false;
  std::optional<BitString> cons;
  std::optional<BitString> miss;
};

/// Everything the adversary may touch. All calls are budgeted and logged.
class ForgeContext {
 public:
  ForgeContext(const lifts::TmacScheme& scheme, lifts::Key& key, const OracleSet& oracles, Rng& challenger,
               Rng& adversary);

  const lifts::TmacScheme& scheme() const { return scheme_; }
  const OracleSet& oracles() const { return oracles_; }
  Rng& rng() { return adv_rng_; }

  lifts::SchemeToken token_gen();
  bool verify(const lifts::Document& m, const lifts::SchemeSignature& sig);
  lifts::SchemeSignature sign(const lifts::Document& m);
  VrResponse vr(bool m, const BitString& sigma);

  /// Coherent verification on a packed register (structured branch).
  bool coherent_verify(const bb84::QubitRegister& reg, bool m);
  /// Coherent verification on a statevector (general branch); collapses it.
  bool coherent_verify(bb84::StateVector& sv, bool m);

  // Challenger side.
  const Counters& counters() const { return counters_; }
  Transcript& transcript() { return transcript_; }
  bool voided() const { return voided_; }
  const std::set<BitString>& signed_documents() const { return q_docs_; }
  const std::set<std::pair<BitString, Bytes>>& signed_pairs() const { return q_pairs_; }
  void note_submission(const Submission& s, bool accepted);

 private:
  const ctmac::SecretKey& ctmac_key();

  const lifts::TmacScheme& scheme_;
  lifts::Key& key_;
  OracleSet oracles_;
  Rng& rng_;
  Rng& adv_rng_;
  Counters counters_;
  Transcript transcript_;
  std::set<BitString> q_docs_;
  std::set<std::pair<BitString, Bytes>> q_pairs_;
  std::map<BitString, int> vr_successes_;
  std::optional<ctmac::SecretKey> ctmac_key_;
  bool voided_ = false;
};

class ForgeAdversary {
 public:
  virtual ~ForgeAdversary() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Submission> run(ForgeContext& ctx) = 0;
};

struct GameOutcome {
  bool won = false;
  bool voided = false;
  std::uint64_t count = 0;
  Counters counters;
  Transcript transcript;
  lifts::Key key;  // challenger's key after the run, for audits
};

enum class ForgeVariant { Standard, Strong };

/// Challenger: key-gen, drive the adversary, verify its w submissions.
/// Standard: count distinct accepted documents outside the signing-oracle set.
/// Strong: count distinct accepted (document, signature) pairs outside it.
/// Won iff count >= r + 1. Budget overruns void the run.
GameOutcome run_forge_game(const lifts::TmacScheme& scheme, ForgeAdversary& adv, const OracleSet& oracles,
                           Rng& rng, ForgeVariant variant = ForgeVariant::Standard);

/// Re-derive the winning condition from a transcript alone.
std::uint64_t recount_from_transcript(const Transcript& t);

// Adversaries --------------------------------------------------------------

/// Requests r tokens and signs r distinct documents honestly.
class HonestAdversary final : public ForgeAdversary {
 public:
  explicit HonestAdversary(std::uint64_t r = 1) : r_(r) {}
  std::string name() const override { return "honest"; }
  std::vector<Submission> run(ForgeContext& ctx) override;

 private:
  std::uint64_t r_;
};

/// Never touches the token: submits uniformly random CTMAC signatures for
/// both one-bit documents.
class RandomSignatureAdversary final : public ForgeAdversary {
 public:
  std::string name() const override { return "random-signature"; }
  std::vector<Submission> run(ForgeContext& ctx) override;
};

/// Honest signature for document 0 plus a copy with one random bit flipped.
/// Wins the strong game whenever the flipped coordinate is unchecked.
class MeasureThenPerturbAdversary final : public ForgeAdversary {
 public:
  std::string name() const override { return "measure-then-perturb"; }
  std::vector<Submission> run(ForgeContext& ctx) override;
};

/// Learns the basis of each qubit with one coherent query per coordinate,
/// then measures every qubit in its own basis and signs both documents.
class SuperpositionAttack final : public ForgeAdversary {
 public:
  enum class Oracle { Structured, StateVector };
  explicit SuperpositionAttack(Oracle mode) : mode_(mode) {}
  std::string name() const override {
    return mode_ == Oracle::Structured ? "superposition" : "superposition-statevector";
  }
  std::vector<Submission> run(ForgeContext& ctx) override;

  const std::vector<bool>& query_results() const { return results_; }
  const ctmac::SecretKey& recovered() const { return recovered_; }

 private:
  Oracle mode_;
  std::vector<bool> results_;
  ctmac::SecretKey recovered_;
};

/// Replays one signature to VR twice for the same document; VR-star voids it.
class RepeatVrAdversary final : public ForgeAdversary {
 public:
  std::string name() const override { return "repeat-vr"; }
  std::vector<Submission> run(ForgeContext& ctx) override;
};

std::unique_ptr<ForgeAdversary> make_adversary(const std::string& name);
std::vector<std::string> adversary_names();

}  // namespace tmac::games
