#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tmac/bb84/qubit.hpp"
#include "tmac/core/bitstring.hpp"
#include "tmac/core/bytes.hpp"
#include "tmac/core/rng.hpp"
#include "tmac/ctmac/ctmac.hpp"

namespace tmac::lifts {

using Document = BitString;
using Key = Bytes;
using SchemeSignature = Bytes;

struct Domain {
  enum Kind { Bit, Fixed, Unrestricted } kind = Unrestricted;
  std::size_t length = 0;  // Bit: 1, Fixed: l

  static Domain bit() { return {Bit, 1}; }
  static Domain fixed(std::size_t l) { return {Fixed, l}; }
  static Domain unrestricted() { return {Unrestricted, 0}; }

  bool admits(const Document& m) const { return kind == Unrestricted || m.size() == length; }
  bool operator==(const Domain&) const = default;
};

/// Quantum part plus classical attachments; lifts that wrap a token keep the
/// inner one in `parts`.
struct SchemeToken {
  std::vector<ctmac::Token> quantum;
  std::vector<Bytes> attachments;
  std::vector<SchemeToken> parts;

  std::size_t qubit_count() const;
  void for_each_token(const std::function<void(ctmac::Token&)>& fn);
  void for_each_token(const std::function<void(const ctmac::Token&)>& fn) const;
};

/// True when every qubit is one of the four BB84 states.
bool is_conjugate_coding(const SchemeToken& t);

void apply_noise(SchemeToken& t, const bb84::NoiseSpec& spec, Rng& rng);

class TmacScheme {
 public:
  virtual ~TmacScheme() = default;

  virtual std::string name() const = 0;
  virtual Domain domain() const = 0;
  virtual std::size_t key_size() const = 0;

  virtual Key key_gen(Rng& rng) const = 0;
  // Key is mutable for schemes whose issuer keeps a counter.
  virtual SchemeToken token_gen(Key& k, Rng& rng) const = 0;
  virtual SchemeSignature sign(SchemeToken& t, const Document& m, Rng& rng) const = 0;
  /// Deterministic; malformed signatures are rejected, not thrown.
  virtual bool verify(const Key& k, const Document& m, const SchemeSignature& sig) const = 0;

 protected:
  void check_domain(const Document& m) const;
};

using SchemePtr = std::shared_ptr<const TmacScheme>;

inline Document bit_document(bool m) { return BitString(1, m); }

}  // namespace tmac::lifts
