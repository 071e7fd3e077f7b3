#include "tmac/core/error.hpp"
#include "tmac/crypto/aead.hpp"
#include "tmac/crypto/uowhf.hpp"
#include "tmac/lifts/lifts.hpp"
#include "tmac/lifts/wire.hpp"

namespace tmac::lifts {

namespace {

class Full final : public TmacScheme {
 public:
  explicit Full(const FullParams& p) : p_(p) {
    if (p.lambda == 0 || p.sub_lambda == 0 || p.hash_bits == 0) fail(Errc::ZeroLength, "parameters must be positive");
  }

  std::string name() const override { return "CTMAC^" + std::to_string(p_.eta) + "-full"; }
  Domain domain() const override { return Domain::unrestricted(); }
  std::size_t key_size() const override { return 64; }

  Key key_gen(Rng& rng) const override { return crypto::aead_keygen(p_.lambda, rng).serialize(); }

  // kappa = u32 sub_lambda || a^1 || b^1 || ... || a^l || b^l
  SchemeToken token_gen(Key& k, Rng& rng) const override {
    const auto master = crypto::AeadKey::parse(k);
    SchemeToken t;
    Bytes kappa;
    put_u32be(kappa, static_cast<std::uint32_t>(p_.sub_lambda));
    t.quantum.reserve(p_.ell());
    for (std::size_t j = 0; j < p_.ell(); ++j) {
      auto sub = ctmac::key_gen(p_.sub_lambda, rng);
      append(kappa, sub.a.to_bytes());
      append(kappa, sub.b.to_bytes());
      t.quantum.push_back(ctmac::token_gen(sub));
    }
    t.attachments.push_back(crypto::aead_enc(master, kappa, rng));
    return t;
  }

  SchemeSignature sign(SchemeToken& t, const Document& m, Rng& rng) const override {
    if (t.quantum.size() != p_.ell() || t.attachments.size() != 1) fail(Errc::MalformedEncoding, "not a full token");
    const crypto::UowhfIndex r1 = crypto::uowhf_index(p_.lambda, rng);
    const BitString r2 = BitString::random(p_.lambda, rng);
    const BitString mp = derived(m, r1, r2);
    std::vector<Bytes> s;
    s.reserve(p_.ell());
    for (std::size_t j = 0; j < p_.ell(); ++j) s.push_back(ctmac::sign(t.quantum[j], mp[j], rng).to_bytes());
    return frame(Layer::Full, {frame(Layer::Full, s), t.attachments[0], r1.s, r2.to_bytes()});
  }

  bool verify(const Key& k, const Document& m, const SchemeSignature& sig) const override {
    auto f = unframe(Layer::Full, sig, 4);
    if (!f) return false;
    auto s = unframe(Layer::Full, (*f)[0], p_.ell());
    if (!s || !bits_from_field((*f)[2], p_.lambda)) return false;
    auto r2 = bits_from_field((*f)[3], p_.lambda);
    if (!r2) return false;
    auto kappa = crypto::aead_dec(crypto::AeadKey::parse(k), (*f)[1]);
    const std::size_t nb = (p_.sub_lambda + 7) / 8;
    if (!kappa || kappa->size() != 4 + 2 * nb * p_.ell() || get_u32be(kappa->data()) != p_.sub_lambda) return false;
    const BitString mp = derived(m, {(*f)[2]}, *r2);
    const std::uint8_t* base = kappa->data() + 4;
    for (std::size_t j = 0; j < p_.ell(); ++j) {
      auto sj = bits_from_field((*s)[j], p_.sub_lambda);
      if (!sj) return false;
      const Bytes a(base + 2 * nb * j, base + 2 * nb * j + nb), b(base + 2 * nb * j + nb, base + 2 * nb * (j + 1));
      const ctmac::SecretKey sub{BitString::from_bytes(a, p_.sub_lambda), BitString::from_bytes(b, p_.sub_lambda)};
      if (!ctmac::accepts(sub, mp[j], *sj, p_.eta)) return false;
    }
    return true;
  }

  // m' = h_r1(m || r2) || r1
  BitString derived(const Document& m, const crypto::UowhfIndex& r1, const BitString& r2) const {
    return crypto::uowhf_eval(r1, m.concat(r2), p_.hash_bits).concat(BitString::from_bytes(r1.s, p_.lambda));
  }

 private:
  FullParams p_;
};

}  // namespace

SchemePtr full_ctmac(const FullParams& p) { return std::make_shared<Full>(p); }

SchemePtr composed_ctmac(const FullParams& p) {
  auto otl = lift_otl(ctmac_scheme(p.sub_lambda, p.eta), p.ell());
  return lift_tms(lift_tom(lift_ot(otl, p.lambda, p.hash_bits), p.lambda), p.lambda);
}

}  // namespace tmac::lifts
