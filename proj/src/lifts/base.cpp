#include "tmac/core/error.hpp"
#include "tmac/lifts/lifts.hpp"
#include "tmac/lifts/wire.hpp"

namespace tmac::lifts {

namespace {

class CtmacScheme final : public TmacScheme {
 public:
  CtmacScheme(std::size_t lambda, double eta) : lambda_(lambda), eta_(eta) {
    if (lambda == 0) fail(Errc::ZeroLength, "lambda must be positive");
    if (!(eta >= 0.0 && eta <= 1.0)) fail(Errc::InvalidArgument, "eta outside [0,1]");
  }

  std::string name() const override { return "CTMAC^" + std::to_string(eta_); }
  Domain domain() const override { return Domain::bit(); }
  std::size_t key_size() const override {
    const std::size_t nb = (lambda_ + 7) / 8;
    return framed_size({4, nb, nb});
  }

  Key key_gen(Rng& rng) const override {
    auto k = ctmac::key_gen(lambda_, rng);
    return frame(Layer::Ctmac, {u32_field(static_cast<std::uint32_t>(lambda_)), k.a.to_bytes(), k.b.to_bytes()});
  }

  SchemeToken token_gen(Key& k, Rng&) const override {
    SchemeToken t;
    t.quantum.push_back(ctmac::token_gen(parse_key(k)));
    return t;
  }

  SchemeSignature sign(SchemeToken& t, const Document& m, Rng& rng) const override {
    check_domain(m);
    if (t.quantum.size() != 1) fail(Errc::MalformedEncoding, "CTMAC token holds one register");
    return frame(Layer::Ctmac, {ctmac::sign(t.quantum[0], m[0], rng).to_bytes()});
  }

  bool verify(const Key& k, const Document& m, const SchemeSignature& sig) const override {
    if (!domain().admits(m)) return false;
    auto f = unframe(Layer::Ctmac, sig, 1);
    if (!f) return false;
    auto sigma = bits_from_field((*f)[0], lambda_);
    if (!sigma) return false;
    return ctmac::accepts(parse_key(k), m[0], *sigma, eta_);
  }

  ctmac::SecretKey parse_key(const Key& k) const {
    auto f = unframe(Layer::Ctmac, k, 3);
    if (!f || read_u32_field((*f)[0]) != lambda_) fail(Errc::MalformedEncoding, "not a CTMAC key for this lambda");
    auto a = bits_from_field((*f)[1], lambda_), b = bits_from_field((*f)[2], lambda_);
    if (!a || !b) fail(Errc::MalformedEncoding, "CTMAC key halves malformed");
    return {*a, *b};
  }

 private:
  std::size_t lambda_;
  double eta_;
};

}  // namespace

SchemePtr ctmac_scheme(std::size_t lambda, double eta) { return std::make_shared<CtmacScheme>(lambda, eta); }

}  // namespace tmac::lifts

namespace tmac::lifts {

ctmac::SecretKey ctmac_key_of(const Key& k, std::size_t lambda) { return CtmacScheme(lambda, 0.0).parse_key(k); }

SchemeSignature ctmac_signature(const BitString& sigma) { return frame(Layer::Ctmac, {sigma.to_bytes()}); }

}  // namespace tmac::lifts
