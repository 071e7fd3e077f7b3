#include "tmac/ctmac/ctmac.hpp"

#include "tmac/core/error.hpp"
#include "tmac/kernels/bitops.hpp"

namespace tmac::ctmac {

const bb84::QubitRegister& Token::qubits() const {
  if (consumed_) fail(Errc::TokenConsumed, "token already used to sign");
  return reg_;
}

bb84::QubitRegister& Token::qubits_mut() {
  if (consumed_) fail(Errc::TokenConsumed, "token already used to sign");
  return reg_;
}

SecretKey key_gen(std::size_t lambda, Rng& rng) {
  if (lambda == 0) fail(Errc::ZeroLength, "lambda must be positive");
  SecretKey k;
  k.a = BitString::random(lambda, rng);
  k.b = BitString::random(lambda, rng);
  return k;
}

Token token_gen(const SecretKey& k) {
  bb84::QubitRegister reg;
  reg.value = k.a;
  reg.basis = k.b;
  reg.mixed = BitString(k.lambda());
  return Token(std::move(reg));
}

Signature sign(Token& t, bool m, Rng& rng) {
  Signature s = bb84::measure_all(t.qubits(), m ? bb84::Basis::Hadamard : bb84::Basis::Computational, rng);
  t.consume();
  return s;
}

static BitString cons_mask(const SecretKey& k, bool m) { return m ? k.b : ~k.b; }

static void check_lengths(const SecretKey& k, const Signature& sigma) {
  if (k.a.size() != k.b.size()) fail(Errc::LengthMismatch, "key halves differ in length");
  if (sigma.size() != k.lambda()) fail(Errc::LengthMismatch, "signature length differs from lambda");
}

VerifyReport verify(const SecretKey& k, bool m, const Signature& sigma, double eta) {
  check_lengths(k, sigma);
  VerifyReport r;
  r.cons = cons_mask(k, m);
  r.miss = (sigma ^ k.a) & r.cons;
  r.cons_size = r.cons.count();
  r.miss_size = r.miss.count();
  r.threshold = eta * static_cast<double>(k.lambda());
  r.accepted = static_cast<double>(r.miss_size) <= r.threshold;
  return r;
}

std::size_t miss_count(const SecretKey& k, bool m, const Signature& sigma) {
  check_lengths(k, sigma);
  BitString cons = cons_mask(k, m);
  return kernels::masked_xor_popcount(sigma.words(), k.a.words(), cons.words(), cons.word_count());
}

bool accepts(const SecretKey& k, bool m, const Signature& sigma, double eta) {
  return within(miss_count(k, m, sigma), eta, k.lambda());
}

static std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

static std::size_t parse_len(const std::string& s) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    fail(Errc::MalformedEncoding, "bad length field '" + s + "'");
  }
}

std::string key_to_hex(const SecretKey& k) {
  return std::to_string(k.lambda()) + ":" + k.a.to_hex() + ":" + k.b.to_hex();
}

SecretKey key_from_hex(const std::string& s) {
  auto p = split(s, ':');
  if (p.size() != 3) fail(Errc::MalformedEncoding, "key encoding needs three fields");
  const std::size_t n = parse_len(p[0]);
  return {BitString::from_hex(p[1], n), BitString::from_hex(p[2], n)};
}

std::string signature_to_hex(const Signature& s) { return std::to_string(s.size()) + ":" + s.to_hex(); }

Signature signature_from_hex(const std::string& s) {
  auto p = split(s, ':');
  if (p.size() != 2) fail(Errc::MalformedEncoding, "signature encoding needs two fields");
  return BitString::from_hex(p[1], parse_len(p[0]));
}

// One character per qubit: 0 1 + - for the pure states, * for mixed.
std::string debug_token_to_string(const Token& t, InsecureDebug) {
  const auto& reg = t.qubits();
  std::string s(reg.size(), '0');
  for (std::size_t i = 0; i < reg.size(); ++i) {
    const auto q = reg.at(i);
    if (q.mixed) s[i] = '*';
    else if (q.basis == bb84::Basis::Computational) s[i] = q.bit ? '1' : '0';
    else s[i] = q.bit ? '-' : '+';
  }
  return s;
}

Token debug_token_from_string(const std::string& s, InsecureDebug) {
  bb84::QubitRegister reg(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    using bb84::Basis;
    using bb84::QubitState;
    switch (s[i]) {
      case '0': reg.put(i, QubitState::pure(false, Basis::Computational)); break;
      case '1': reg.put(i, QubitState::pure(true, Basis::Computational)); break;
      case '+': reg.put(i, QubitState::pure(false, Basis::Hadamard)); break;
      case '-': reg.put(i, QubitState::pure(true, Basis::Hadamard)); break;
      case '*': reg.put(i, QubitState::maximally_mixed()); break;
      default: fail(Errc::MalformedEncoding, "unknown qubit symbol");
    }
  }
  return Token(std::move(reg));
}

}  // namespace tmac::ctmac
