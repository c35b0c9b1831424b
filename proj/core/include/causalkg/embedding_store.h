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

#ifndef CAUSALKG_EMBEDDING_STORE_H_
#define CAUSALKG_EMBEDDING_STORE_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace causalkg {

// Fixed-dimension float vectors keyed by argument id.
//
// On disk two encodings are accepted and told apart by the first four bytes:
//   binary: "CKGE", u32 dimension, u32 count, then per record u32 id length,
//           id bytes, dimension x f32; all little-endian.
//   text:   first line "<dimension> <count>", then "<arg_id>\t<f>,<f>,...".
class EmbeddingStore {
 public:
  explicit EmbeddingStore(int dimension = 0) : dimension_(dimension) {}

  int dimension() const { return dimension_; }
  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string> &ids() const { return ids_; }

  // Throws InputError on a length mismatch or a duplicate id.
  void Add(std::string arg_id, std::span<const float> vector);

  bool Contains(std::string_view arg_id) const;
  // Empty span when absent.
  std::span<const float> Find(std::string_view arg_id) const;

 private:
  int dimension_;
  std::vector<std::string> ids_;
  std::vector<float> data_;
  std::unordered_map<std::string, std::size_t> index_;
};

EmbeddingStore ReadEmbeddingStore(std::istream &in);
EmbeddingStore LoadEmbeddingStore(const std::filesystem::path &path);
void WriteEmbeddingStoreBinary(const EmbeddingStore &store, std::ostream &out);
void WriteEmbeddingStoreText(const EmbeddingStore &store, std::ostream &out);

}  // namespace causalkg

#endif  // CAUSALKG_EMBEDDING_STORE_H_
