#include "tmac/core/error.hpp"
#include "tmac/lifts/lifts.hpp"
#include "tmac/lifts/wire.hpp"

namespace tmac::lifts {

namespace {

class Tms final : public TmacScheme {
 public:
  Tms(SchemePtr base, std::size_t lambda) : base_(std::move(base)), lambda_(lambda) {
    if (lambda == 0) fail(Errc::ZeroLength, "lambda must be positive");
    if (base_->domain() != Domain::unrestricted()) fail(Errc::DomainMismatch, "TMS base must sign any length");
  }

  std::string name() const override { return "TMS(" + base_->name() + ")"; }
  Domain domain() const override { return Domain::unrestricted(); }
  std::size_t key_size() const override { return base_->key_size(); }

  Key key_gen(Rng& rng) const override { return base_->key_gen(rng); }

  SchemeToken token_gen(Key& k, Rng& rng) const override {
    SchemeToken t;
    t.parts.push_back(base_->token_gen(k, rng));
    return t;
  }

  SchemeSignature sign(SchemeToken& t, const Document& m, Rng& rng) const override {
    if (t.parts.size() != 1) fail(Errc::MalformedEncoding, "TMS token wraps one inner token");
    BitString rnd = BitString::random(lambda_, rng);
    Bytes sig = base_->sign(t.parts[0], m.concat(rnd), rng);
    return frame(Layer::Tms, {rnd.to_bytes(), sig});
  }

  bool verify(const Key& k, const Document& m, const SchemeSignature& sig) const override {
    auto f = unframe(Layer::Tms, sig, 2);
    if (!f) return false;
    auto rnd = bits_from_field((*f)[0], lambda_);
    if (!rnd) return false;
    return base_->verify(k, m.concat(*rnd), (*f)[1]);
  }

 private:
  SchemePtr base_;
  std::size_t lambda_;
};

}  // namespace

SchemePtr lift_tms(SchemePtr base, std::size_t lambda) { return std::make_shared<Tms>(std::move(base), lambda); }

}  // namespace tmac::lifts
