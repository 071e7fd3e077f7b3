#include "tmac/core/error.hpp"
#include "tmac/crypto/aead.hpp"
#include "tmac/lifts/lifts.hpp"
#include "tmac/lifts/wire.hpp"

namespace tmac::lifts {

namespace {

class Tom final : public TmacScheme {
 public:
  Tom(SchemePtr base, std::size_t lambda) : base_(std::move(base)), lambda_(lambda) {}

  std::string name() const override { return "TOM(" + base_->name() + ")"; }
  Domain domain() const override { return base_->domain(); }
  std::size_t key_size() const override { return 64; }

  Key key_gen(Rng& rng) const override { return crypto::aead_keygen(lambda_, rng).serialize(); }

  SchemeToken token_gen(Key& k, Rng& rng) const override {
    const auto master = crypto::AeadKey::parse(k);
    Key kappa = base_->key_gen(rng);
    SchemeToken t;
    t.parts.push_back(base_->token_gen(kappa, rng));
    t.attachments.push_back(crypto::aead_enc(master, kappa, rng));
    return t;
  }

  SchemeSignature sign(SchemeToken& t, const Document& m, Rng& rng) const override {
    if (t.parts.size() != 1 || t.attachments.size() != 1) fail(Errc::MalformedEncoding, "not a TOM token");
    return frame(Layer::Tom, {base_->sign(t.parts[0], m, rng), t.attachments[0]});
  }

  bool verify(const Key& k, const Document& m, const SchemeSignature& sig) const override {
    auto f = unframe(Layer::Tom, sig, 2);
    if (!f) return false;
    auto kappa = crypto::aead_dec(crypto::AeadKey::parse(k), (*f)[1]);
    if (!kappa) return false;
    try {
      return base_->verify(*kappa, m, (*f)[0]);
    } catch (const Error&) {
      return false;  // authentic but not a base key: only reachable with a foreign master key
    }
  }

 private:
  SchemePtr base_;
  std::size_t lambda_;
};

}  // namespace

SchemePtr lift_tom(SchemePtr base, std::size_t lambda) { return std::make_shared<Tom>(std::move(base), lambda); }

}  // namespace tmac::lifts
