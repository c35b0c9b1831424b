// Copyright 2026 The causalkg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "causalkg/digest.h"

#include <openssl/evp.h>

#include <fstream>
#include <memory>

#include "causalkg/error.h"
#include "json_util.h"

namespace causalkg {

namespace {

struct DigestContext {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx{EVP_MD_CTX_new(),
                                                              &EVP_MD_CTX_free};
  DigestContext() {
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
      throw Error(ErrorCategory::kInternal, "SHA-256 init failed");
    }
  }
  void Update(const void *data, std::size_t size) {
    if (EVP_DigestUpdate(ctx.get(), data, size) != 1) {
      throw Error(ErrorCategory::kInternal, "SHA-256 update failed");
    }
  }
  std::string HexFinal() {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx.get(), md, &len) != 1) {
      throw Error(ErrorCategory::kInternal, "SHA-256 final failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out += kHex[md[i] >> 4];
      out += kHex[md[i] & 0xf];
    }
    return out;
  }
};

}  // namespace

std::string Sha256Hex(std::string_view data) {
  DigestContext d;
  d.Update(data.data(), data.size());
  return d.HexFinal();
}

std::string FileSha256Hex(const std::filesystem::path &path) {
  std::ifstream in = internal::OpenInput(path, std::ios::in | std::ios::binary);
  DigestContext d;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    if (in.gcount() > 0) d.Update(buf, static_cast<std::size_t>(in.gcount()));
  }
  if (in.bad()) throw IoError("cannot read " + path.string());
  return d.HexFinal();
}

}  // namespace causalkg
