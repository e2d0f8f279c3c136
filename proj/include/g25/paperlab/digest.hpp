#pragma once

#include "g25/algebra/multipoly.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <map>
#include <string>

namespace g25 {

inline std::string sha256_hex(const std::string& text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw numeric_error("sha256 failed");
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

// Digest of the canonical printed form, so reordering terms in the source
// string does not change it but any coefficient edit does.
inline std::string poly_digest(const MultiPoly& p) { return sha256_hex(p.str()); }

}  // namespace g25
