#include "tmac/core/error.hpp"
#include "tmac/crypto/jwise.hpp"
#include "tmac/crypto/wcmac.hpp"
#include "tmac/lifts/lifts.hpp"
#include "tmac/lifts/wire.hpp"

namespace tmac::lifts {

namespace {

class TomJ final : public TmacScheme {
 public:
  TomJ(SchemePtr base, std::size_t lambda, std::size_t j) : base_(std::move(base)), lambda_(lambda), j_(j) {
    if (j == 0) fail(Errc::ZeroLength, "j must be positive");
  }

  std::string name() const override { return "TomJ[" + std::to_string(j_) + "](" + base_->name() + ")"; }
  Domain domain() const override { return base_->domain(); }
  std::size_t key_size() const override {
    const std::size_t blocks = (base_->key_size() + 7) / 8;
    return framed_size({16 + blocks * j_ * 8, 28 + 8 * j_});
  }

  Key key_gen(Rng& rng) const override {
    auto enc = crypto::jwise_keygen(j_, base_->key_size(), rng);
    auto mac = crypto::wc_keygen(j_, lambda_, rng);
    return frame(Layer::TomJ, {enc.serialize(), mac.serialize()});
  }

  SchemeToken token_gen(Key& k, Rng& rng) const override {
    auto f = unframe(Layer::TomJ, k, 2);
    if (!f) fail(Errc::MalformedEncoding, "not a TomJ key");
    auto enc = crypto::JwiseKey::parse((*f)[0]);
    auto mac = crypto::WcMacKey::parse((*f)[1]);
    if (mac.counter >= mac.j()) fail(Errc::PadExhausted, "all " + std::to_string(j_) + " tokens issued");
    Key kappa = base_->key_gen(rng);
    Bytes c = crypto::jenc_bytes(enc, kappa, rng);
    const crypto::WcTag tag = crypto::wc_sign(mac, c);
    k = frame(Layer::TomJ, {(*f)[0], mac.serialize()});
    SchemeToken t;
    t.parts.push_back(base_->token_gen(kappa, rng));
    t.attachments = {c, tag.to_bytes()};
    return t;
  }

  SchemeSignature sign(SchemeToken& t, const Document& m, Rng& rng) const override {
    if (t.parts.size() != 1 || t.attachments.size() != 2) fail(Errc::MalformedEncoding, "not a TomJ token");
    return frame(Layer::TomJ, {base_->sign(t.parts[0], m, rng), t.attachments[0], t.attachments[1]});
  }

  bool verify(const Key& k, const Document& m, const SchemeSignature& sig) const override {
    auto s = unframe(Layer::TomJ, sig, 3);
    if (!s) return false;
    auto f = unframe(Layer::TomJ, k, 2);
    if (!f) fail(Errc::MalformedEncoding, "not a TomJ key");
    auto tag = crypto::WcTag::from_bytes((*s)[2]);
    if (!tag || !crypto::wc_verify(crypto::WcMacKey::parse((*f)[1]), (*s)[1], *tag)) return false;
    try {
      Key kappa = crypto::jdec_bytes(crypto::JwiseKey::parse((*f)[0]), (*s)[1]);
      return base_->verify(kappa, m, (*s)[0]);
    } catch (const Error&) {
      return false;
    }
  }

 private:
  SchemePtr base_;
  std::size_t lambda_, j_;
};

}  // namespace

SchemePtr lift_tomj(SchemePtr base, std::size_t lambda, std::size_t j) {
  return std::make_shared<TomJ>(std::move(base), lambda, j);
}

}  // namespace tmac::lifts
