#include "tmac/core/error.hpp"
#include "tmac/crypto/uowhf.hpp"
#include "tmac/lifts/lifts.hpp"
#include "tmac/lifts/wire.hpp"

namespace tmac::lifts {

namespace {

class Ot final : public TmacScheme {
 public:
  Ot(SchemePtr base, std::size_t lambda, std::size_t hash_bits)
      : base_(std::move(base)), lambda_(lambda), hash_bits_(hash_bits) {
    if (lambda == 0 || hash_bits == 0) fail(Errc::ZeroLength, "lambda and hash length must be positive");
    if (base_->domain() != Domain::fixed(lambda + hash_bits))
      fail(Errc::DomainMismatch, "OT base must sign exactly lambda + hash_bits bits");
  }

  std::string name() const override { return "OT(" + base_->name() + ")"; }
  Domain domain() const override { return Domain::unrestricted(); }
  std::size_t key_size() const override { return base_->key_size(); }

  Key key_gen(Rng& rng) const override { return base_->key_gen(rng); }

  SchemeToken token_gen(Key& k, Rng& rng) const override {
    SchemeToken t;
    t.parts.push_back(base_->token_gen(k, rng));
    return t;
  }

  SchemeSignature sign(SchemeToken& t, const Document& m, Rng& rng) const override {
    if (t.parts.size() != 1) fail(Errc::MalformedEncoding, "OT token wraps one inner token");
    crypto::UowhfIndex s = crypto::uowhf_index(lambda_, rng);
    Bytes sigma = base_->sign(t.parts[0], inner(s, m), rng);
    return frame(Layer::Ot, {s.s, sigma});
  }

  bool verify(const Key& k, const Document& m, const SchemeSignature& sig) const override {
    auto f = unframe(Layer::Ot, sig, 2);
    if (!f || !bits_from_field((*f)[0], lambda_)) return false;
    return base_->verify(k, inner({(*f)[0]}, m), (*f)[1]);
  }

  // s || h_s(m)
  Document inner(const crypto::UowhfIndex& s, const Document& m) const {
    return BitString::from_bytes(s.s, lambda_).concat(crypto::uowhf_eval(s, m, hash_bits_));
  }

 private:
  SchemePtr base_;
  std::size_t lambda_, hash_bits_;
};

}  // namespace

SchemePtr lift_ot(SchemePtr base, std::size_t lambda, std::size_t hash_bits) {
  return std::make_shared<Ot>(std::move(base), lambda, hash_bits);
}

}  // namespace tmac::lifts
