#include "tmac/core/error.hpp"
#include "tmac/lifts/lifts.hpp"
#include "tmac/lifts/wire.hpp"

namespace tmac::lifts {

namespace {

class Otl final : public TmacScheme {
 public:
  Otl(SchemePtr base, std::size_t ell) : base_(std::move(base)), ell_(ell) {
    if (ell == 0) fail(Errc::ZeroLength, "OTL needs at least one instance");
    if (base_->domain() != Domain::bit()) fail(Errc::DomainMismatch, "OTL base must sign single bits");
  }

  std::string name() const override { return "OTL[" + std::to_string(ell_) + "](" + base_->name() + ")"; }
  Domain domain() const override { return Domain::fixed(ell_); }
  std::size_t key_size() const override { return framed_size(std::vector<std::size_t>(ell_, base_->key_size())); }

  Key key_gen(Rng& rng) const override {
    std::vector<Bytes> keys;
    keys.reserve(ell_);
    for (std::size_t i = 0; i < ell_; ++i) keys.push_back(base_->key_gen(rng));
    return frame(Layer::Otl, keys);
  }

  SchemeToken token_gen(Key& k, Rng& rng) const override {
    auto keys = unframe(Layer::Otl, k, ell_);
    if (!keys) fail(Errc::MalformedEncoding, "not an OTL key");
    SchemeToken t;
    for (auto& sub : *keys) t.parts.push_back(base_->token_gen(sub, rng));
    return t;
  }

  SchemeSignature sign(SchemeToken& t, const Document& m, Rng& rng) const override {
    check_domain(m);
    if (t.parts.size() != ell_) fail(Errc::MalformedEncoding, "OTL token has the wrong instance count");
    std::vector<Bytes> sigs;
    sigs.reserve(ell_);
    for (std::size_t i = 0; i < ell_; ++i) sigs.push_back(base_->sign(t.parts[i], bit_document(m[i]), rng));
    return frame(Layer::Otl, sigs);
  }

  bool verify(const Key& k, const Document& m, const SchemeSignature& sig) const override {
    if (!domain().admits(m)) return false;
    auto keys = unframe(Layer::Otl, k, ell_);
    if (!keys) fail(Errc::MalformedEncoding, "not an OTL key");
    auto sigs = unframe(Layer::Otl, sig, ell_);
    if (!sigs) return false;
    for (std::size_t i = 0; i < ell_; ++i)
      if (!base_->verify((*keys)[i], bit_document(m[i]), (*sigs)[i])) return false;
    return true;
  }

 private:
  SchemePtr base_;
  std::size_t ell_;
};

}  // namespace

SchemePtr lift_otl(SchemePtr base, std::size_t ell) { return std::make_shared<Otl>(std::move(base), ell); }

}  // namespace tmac::lifts
