#include "tmac/crypto/hash.hpp"

#include <openssl/crypto.h>
#include <openssl/hmac.h>
#include <openssl/evp.h>

#include "tmac/core/error.hpp"

namespace tmac::crypto {

Digest sha256(std::initializer_list<const Bytes*> parts) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || !EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr)) fail(Errc::InvalidArgument, "SHA-256 init failed");
  for (const Bytes* p : parts) EVP_DigestUpdate(ctx, p->data(), p->size());
  Digest d;
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, d.data(), &len);
  EVP_MD_CTX_free(ctx);
  return d;
}

Digest sha256(const Bytes& data) { return sha256({&data}); }

Digest hmac_sha256(const Bytes& key, std::initializer_list<const Bytes*> parts) {
  Bytes msg;
  for (const Bytes* p : parts) append(msg, *p);
  Digest d;
  unsigned int len = 0;
  if (!HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), msg.data(), msg.size(), d.data(), &len) ||
      len != d.size())
    fail(Errc::InvalidArgument, "HMAC-SHA256 failed");
  return d;
}

bool equal_ct(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) { return CRYPTO_memcmp(a, b, n) == 0; }

}  // namespace tmac::crypto
