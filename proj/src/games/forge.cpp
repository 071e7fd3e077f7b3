#include "tmac/games/forge.hpp"

#include "tmac/core/error.hpp"
#include "tmac/games/coherent.hpp"
#include "tmac/games/vr.hpp"

namespace tmac::games {

namespace {

Bytes encode_document(const BitString& m) {
  Bytes b;
  put_u64be(b, m.size());
  append(b, m.to_bytes());
  return b;
}

Bytes encode_pair(const BitString& m, const Bytes& sig) {
  Bytes b = encode_document(m);
  put_u32be(b, static_cast<std::uint32_t>(sig.size()));
  append(b, sig);
  return b;
}

}  // namespace

ForgeContext::ForgeContext(const lifts::TmacScheme& scheme, lifts::Key& key, const OracleSet& oracles,
                           Rng& challenger, Rng& adversary)
    : scheme_(scheme), key_(key), oracles_(oracles), rng_(challenger), adv_rng_(adversary) {}

const ctmac::SecretKey& ForgeContext::ctmac_key() {
  if (oracles_.ctmac_lambda == 0) fail(Errc::InvalidArgument, "oracle needs a bare CTMAC instance");
  if (!ctmac_key_) ctmac_key_ = lifts::ctmac_key_of(key_, oracles_.ctmac_lambda);
  return *ctmac_key_;
}

lifts::SchemeToken ForgeContext::token_gen() {
  if (counters_.r >= oracles_.token_budget) fail(Errc::BudgetExceeded, "token-gen budget exhausted");
  ++counters_.r;
  lifts::SchemeToken t = scheme_.token_gen(key_, rng_);
  transcript_.append("token-gen", {}, "token", counters_);
  return t;
}

bool ForgeContext::verify(const lifts::Document& m, const lifts::SchemeSignature& sig) {
  if (oracles_.verify == VerifyAccess::None) fail(Errc::BudgetExceeded, "no verification access");
  if (counters_.q >= oracles_.verify_budget) fail(Errc::BudgetExceeded, "verification budget exhausted");
  ++counters_.q;
  const bool ok = scheme_.verify(key_, m, sig);
  transcript_.append("verify", encode_pair(m, sig), ok ? "1" : "0", counters_);
  return ok;
}

lifts::SchemeSignature ForgeContext::sign(const lifts::Document& m) {
  if (!oracles_.sign || counters_.s >= oracles_.sign_budget) fail(Errc::BudgetExceeded, "signing budget exhausted");
  ++counters_.s;
  lifts::SchemeToken t = scheme_.token_gen(key_, rng_);
  lifts::SchemeSignature sig = scheme_.sign(t, m, rng_);
  q_docs_.insert(m);
  q_pairs_.insert({m, sig});
  transcript_.append("sign", encode_document(m), digest_hex(sig), counters_);
  return sig;
}

VrResponse ForgeContext::vr(bool m, const BitString& sigma) {
  if (oracles_.vr == VrMode::Off) fail(Errc::BudgetExceeded, "no VR access");
  if (counters_.q >= oracles_.verify_budget) fail(Errc::BudgetExceeded, "verification budget exhausted");
  ++counters_.q;
  VrResponse r = vr_oracle(ctmac_key(), m, sigma, oracles_.eta);
  const BitString doc = lifts::bit_document(m);
  if (r.result && ++vr_successes_[doc] >= 2 && oracles_.vr == VrMode::VrStar) voided_ = true;
  transcript_.append("vr", encode_pair(doc, sigma.to_bytes()), r.result ? "1" : "0", counters_);
  return r;
}

bool ForgeContext::coherent_verify(const bb84::QubitRegister& reg, bool m) {
  if (oracles_.verify != VerifyAccess::Coherent) fail(Errc::BudgetExceeded, "no coherent verification access");
  if (counters_.q >= oracles_.verify_budget) fail(Errc::BudgetExceeded, "verification budget exhausted");
  ++counters_.q;
  const bool ok = coherent_verify_structured(ctmac_key(), reg, m, oracles_.eta);
  transcript_.append("coherent-verify", encode_document(lifts::bit_document(m)), ok ? "1" : "0", counters_);
  return ok;
}

bool ForgeContext::coherent_verify(bb84::StateVector& sv, bool m) {
  if (oracles_.verify != VerifyAccess::Coherent) fail(Errc::BudgetExceeded, "no coherent verification access");
  if (counters_.q >= oracles_.verify_budget) fail(Errc::BudgetExceeded, "verification budget exhausted");
  ++counters_.q;
  const bool ok = coherent_verify_statevector(ctmac_key(), sv, m, oracles_.eta, rng_);
  transcript_.append("coherent-verify", encode_document(lifts::bit_document(m)), ok ? "1" : "0", counters_);
  return ok;
}

void ForgeContext::note_submission(const Submission& s, bool accepted) {
  ++counters_.w;
  transcript_.append("submit", encode_document(s.m), std::string(accepted ? "1:" : "0:") + digest_hex(s.sig),
                     counters_);
}

GameOutcome run_forge_game(const lifts::TmacScheme& scheme, ForgeAdversary& adv, const OracleSet& oracles,
                           Rng& rng, ForgeVariant variant) {
  Rng adv_rng = rng.split(0xad);
  lifts::Key key = scheme.key_gen(rng);
  ForgeContext ctx(scheme, key, oracles, rng, adv_rng);
  GameOutcome out;
  std::vector<Submission> subs;
  try {
    subs = adv.run(ctx);
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    out.voided = true;
  }
  if (!out.voided && !ctx.voided()) {
    std::set<BitString> docs;
    std::set<std::pair<BitString, Bytes>> pairs;
    for (const auto& s : subs) {
      const bool ok = scheme.verify(key, s.m, s.sig);
      ctx.note_submission(s, ok);
      if (!ok) continue;
      if (variant == ForgeVariant::Standard && !ctx.signed_documents().count(s.m)) docs.insert(s.m);
      if (variant == ForgeVariant::Strong && !ctx.signed_pairs().count({s.m, s.sig})) pairs.insert({s.m, s.sig});
    }
    out.count = variant == ForgeVariant::Standard ? docs.size() : pairs.size();
    out.won = out.count >= ctx.counters().r + 1;
  }
  out.voided = out.voided || ctx.voided();
  if (out.voided) out.won = false;
  out.counters = ctx.counters();
  out.transcript = ctx.transcript();
  out.key = key;
  return out;
}

std::uint64_t recount_from_transcript(const Transcript& t) {
  std::set<std::string> signed_docs, accepted;
  for (const auto& r : t.records()) {
    if (r.oracle == "sign") signed_docs.insert(r.input_digest);
    if (r.oracle == "submit" && r.output.rfind("1:", 0) == 0) accepted.insert(r.input_digest);
  }
  std::uint64_t n = 0;
  for (const auto& d : accepted) n += !signed_docs.count(d);
  return n;
}

// Adversaries --------------------------------------------------------------

std::vector<Submission> HonestAdversary::run(ForgeContext& ctx) {
  std::vector<Submission> out;
  const auto dom = ctx.scheme().domain();
  for (std::uint64_t i = 0; i < r_; ++i) {
    auto t = ctx.token_gen();
    BitString m = dom.kind == lifts::Domain::Unrestricted ? BitString::from_u64(i, 64)
                                                          : BitString::from_u64(i, dom.length);
    out.push_back({m, ctx.scheme().sign(t, m, ctx.rng())});
  }
  return out;
}

std::vector<Submission> RandomSignatureAdversary::run(ForgeContext& ctx) {
  const std::size_t lambda = ctx.oracles().ctmac_lambda;
  if (lambda == 0) fail(Errc::InvalidArgument, "random-signature adversary targets bare CTMAC");
  ctx.token_gen();  // r = 1; the token itself is never measured
  std::vector<Submission> out;
  for (bool m : {false, true})
    out.push_back({lifts::bit_document(m), lifts::ctmac_signature(BitString::random(lambda, ctx.rng()))});
  return out;
}

std::vector<Submission> MeasureThenPerturbAdversary::run(ForgeContext& ctx) {
  auto t = ctx.token_gen();
  if (t.quantum.size() != 1) fail(Errc::InvalidArgument, "measure-then-perturb targets bare CTMAC");
  BitString sigma = ctmac::sign(t.quantum[0], false, ctx.rng());
  BitString perturbed = sigma;
  perturbed.flip(ctx.rng().below(sigma.size()));
  return {{lifts::bit_document(false), lifts::ctmac_signature(sigma)},
          {lifts::bit_document(false), lifts::ctmac_signature(perturbed)}};
}

std::vector<Submission> SuperpositionAttack::run(ForgeContext& ctx) {
  auto t = ctx.token_gen();
  if (t.quantum.size() != 1) fail(Errc::InvalidArgument, "superposition attack targets bare CTMAC");
  ctmac::Token& tok = t.quantum[0];
  const std::size_t n = tok.lambda();
  results_.assign(n, false);
  recovered_ = {BitString(n), BitString(n)};

  if (mode_ == Oracle::Structured) {
    bb84::QubitRegister& reg = tok.qubits_mut();
    for (std::size_t i = 0; i < n; ++i) {
      reg.put(i, bb84::corrupt(reg.at(i), bb84::NoiseMap::PauliX, ctx.rng()));
      results_[i] = ctx.coherent_verify(reg, false);
      reg.put(i, bb84::corrupt(reg.at(i), bb84::NoiseMap::PauliX, ctx.rng()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      recovered_.b.set(i, results_[i]);
      recovered_.a.set(i, bb84::measure(reg.at(i), bb84::basis_of(results_[i]), ctx.rng()));
    }
  } else {
    bb84::StateVector sv = bb84::sv_prepare(tok.qubits());
    for (std::size_t i = 0; i < n; ++i) {
      sv.x(static_cast<int>(i));
      results_[i] = ctx.coherent_verify(sv, false);
      sv.x(static_cast<int>(i));
    }
    std::vector<bb84::Basis> bases(n);
    for (std::size_t i = 0; i < n; ++i) {
      bases[i] = bb84::basis_of(results_[i]);
      recovered_.b.set(i, results_[i]);
    }
    recovered_.a = bb84::sv_measure_all(std::move(sv), bases, ctx.rng());
  }
  tok.consume();
  return {{lifts::bit_document(false), lifts::ctmac_signature(recovered_.a)},
          {lifts::bit_document(true), lifts::ctmac_signature(recovered_.a)}};
}

std::vector<Submission> RepeatVrAdversary::run(ForgeContext& ctx) {
  auto t = ctx.token_gen();
  if (t.quantum.size() != 1) fail(Errc::InvalidArgument, "repeat-vr targets bare CTMAC");
  BitString sigma = ctmac::sign(t.quantum[0], false, ctx.rng());
  ctx.vr(false, sigma);
  ctx.vr(false, sigma);
  return {{lifts::bit_document(false), lifts::ctmac_signature(sigma)}};
}

std::vector<std::string> adversary_names() {
  return {"honest", "random-signature", "measure-then-perturb", "superposition", "superposition-statevector",
          "repeat-vr"};
}

std::unique_ptr<ForgeAdversary> make_adversary(const std::string& name) {
  if (name == "honest") return std::make_unique<HonestAdversary>();
  if (name == "random-signature") return std::make_unique<RandomSignatureAdversary>();
  if (name == "measure-then-perturb") return std::make_unique<MeasureThenPerturbAdversary>();
  if (name == "superposition") return std::make_unique<SuperpositionAttack>(SuperpositionAttack::Oracle::Structured);
  if (name == "superposition-statevector")
    return std::make_unique<SuperpositionAttack>(SuperpositionAttack::Oracle::StateVector);
  if (name == "repeat-vr") return std::make_unique<RepeatVrAdversary>();
  fail(Errc::UnknownAdversary, "no adversary named '" + name + "'");
}

}  // namespace tmac::games
