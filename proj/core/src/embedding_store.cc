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

#include "causalkg/embedding_store.h"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "causalkg/error.h"
#include "json_util.h"

namespace causalkg {

namespace {

constexpr char kMagic[4] = {'C', 'K', 'G', 'E'};

std::uint32_t ReadU32(const std::string &buf, std::size_t &pos) {
  if (pos + 4 > buf.size()) throw InputError("embedding store truncated");
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(buf[pos + i]);
  pos += 4;
  return v;
}

void WriteU32(std::ostream &out, std::uint32_t v) {
  char bytes[4];
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(bytes, 4);
}

EmbeddingStore ParseBinary(const std::string &buf) {
  std::size_t pos = 4;
  const std::uint32_t dim = ReadU32(buf, pos);
  const std::uint32_t count = ReadU32(buf, pos);
  if (dim == 0) throw InputError("embedding dimension must be positive");
  EmbeddingStore store(static_cast<int>(dim));
  std::vector<float> vec(dim);
  for (std::uint32_t r = 0; r < count; ++r) {
    const std::uint32_t len = ReadU32(buf, pos);
    if (pos + len > buf.size()) throw InputError("embedding store truncated");
    std::string id = buf.substr(pos, len);
    pos += len;
    for (std::uint32_t d = 0; d < dim; ++d) {
      std::uint32_t bits = ReadU32(buf, pos);
      std::memcpy(&vec[d], &bits, 4);
    }
    store.Add(std::move(id), vec);
  }
  if (pos != buf.size()) throw InputError("trailing bytes after embedding records");
  return store;
}

EmbeddingStore ParseText(const std::string &buf) {
  std::istringstream in(buf);
  std::string line;
  int line_number = 0;
  int dim = 0;
  long long count = -1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream header(line);
    if (!(header >> dim >> count) || dim <= 0 || count < 0) {
      throw InputError("embedding text header must be '<dimension> <count>'");
    }
    break;
  }
  if (dim <= 0) throw InputError("empty embedding store");
  EmbeddingStore store(dim);
  std::vector<float> vec;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw InputError("embedding line " + std::to_string(line_number) +
                       ": expected '<arg_id>\\t<floats>'");
    }
    vec.clear();
    std::size_t pos = tab + 1;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) comma = line.size();
      const std::string piece = line.substr(pos, comma - pos);
      try {
        std::size_t used = 0;
        vec.push_back(std::stof(piece, &used));
        if (used != piece.size()) throw std::invalid_argument(piece);
      } catch (const std::exception &) {
        throw InputError("embedding line " + std::to_string(line_number) +
                         ": bad number '" + piece + "'");
      }
      pos = comma + 1;
    }
    try {
      store.Add(line.substr(0, tab), vec);
    } catch (const Error &e) {
      throw InputError("embedding line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  if (static_cast<long long>(store.size()) != count) {
    throw InputError("embedding header announces " + std::to_string(count) +
                     " records, found " + std::to_string(store.size()));
  }
  return store;
}

}  // namespace

void EmbeddingStore::Add(std::string arg_id, std::span<const float> vector) {
  if (static_cast<int>(vector.size()) != dimension_) {
    throw InputError("embedding for '" + arg_id + "' has length " +
                     std::to_string(vector.size()) + ", expected " +
                     std::to_string(dimension_));
  }
  if (!index_.emplace(arg_id, ids_.size()).second) {
    throw InputError("duplicate embedding for '" + arg_id + "'");
  }
  ids_.push_back(std::move(arg_id));
  data_.insert(data_.end(), vector.begin(), vector.end());
}

bool EmbeddingStore::Contains(std::string_view arg_id) const {
  return index_.contains(std::string(arg_id));
}

std::span<const float> EmbeddingStore::Find(std::string_view arg_id) const {
  auto it = index_.find(std::string(arg_id));
  if (it == index_.end()) return {};
  return {data_.data() + it->second * dimension_, std::size_t(dimension_)};
}

EmbeddingStore ReadEmbeddingStore(std::istream &in) {
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() >= 4 && std::memcmp(buf.data(), kMagic, 4) == 0) return ParseBinary(buf);
  return ParseText(buf);
}

EmbeddingStore LoadEmbeddingStore(const std::filesystem::path &path) {
  std::ifstream in = internal::OpenInput(path, std::ios::in | std::ios::binary);
  return ReadEmbeddingStore(in);
}

void WriteEmbeddingStoreBinary(const EmbeddingStore &store, std::ostream &out) {
  out.write(kMagic, 4);
  WriteU32(out, static_cast<std::uint32_t>(store.dimension()));
  WriteU32(out, static_cast<std::uint32_t>(store.size()));
  for (const std::string &id : store.ids()) {
    WriteU32(out, static_cast<std::uint32_t>(id.size()));
    out.write(id.data(), static_cast<std::streamsize>(id.size()));
    for (float f : store.Find(id)) {
      std::uint32_t bits;
      std::memcpy(&bits, &f, 4);
      WriteU32(out, bits);
    }
  }
}

void WriteEmbeddingStoreText(const EmbeddingStore &store, std::ostream &out) {
  out << store.dimension() << ' ' << store.size() << '\n';
  char buf[32];
  for (const std::string &id : store.ids()) {
    out << id << '\t';
    bool first = true;
    for (float f : store.Find(id)) {
      if (!first) out << ',';
      first = false;
      std::snprintf(buf, sizeof(buf), "%.9g", f);
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace causalkg
