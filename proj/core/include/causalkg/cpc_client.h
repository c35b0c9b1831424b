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

#ifndef CAUSALKG_CPC_CLIENT_H_
#define CAUSALKG_CPC_CLIENT_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "causalkg/corpus.h"
#include "causalkg/span.h"

namespace causalkg {

// Sentence tokens joined by spaces with <ARG0>..</ARG0> around the cause and
// <ARG1>..</ARG1> around the effect.
std::string MarkSentence(const SentenceAnalysis &sentence, const TokenSpan &cause,
                         const TokenSpan &effect);

// Causal pair classification verdicts. Implementations must be safe for
// concurrent calls.
class CpcClient {
 public:
  virtual ~CpcClient() = default;

  // Throws Error when no verdict can be produced for the pair.
  virtual bool IsCausal(const SentenceAnalysis &sentence, const TokenSpan &cause,
                        const TokenSpan &effect) const = 0;
};

struct CpcVerdict {
  std::string sentence_id;
  TokenSpan cause_span;
  TokenSpan effect_span;
  bool causal = false;
};

std::vector<CpcVerdict> ReadCpcVerdicts(std::istream &in);
void WriteCpcVerdicts(const std::vector<CpcVerdict> &verdicts, std::ostream &out);

// Looks verdicts up by (sentence_id, cause_span, effect_span). A missing key
// is a hard error naming the pair.
class VerdictFileClient : public CpcClient {
 public:
  VerdictFileClient() = default;
  explicit VerdictFileClient(const std::vector<CpcVerdict> &verdicts);
  static VerdictFileClient Load(const std::filesystem::path &path);

  bool IsCausal(const SentenceAnalysis &sentence, const TokenSpan &cause,
                const TokenSpan &effect) const override;

  std::size_t size() const { return verdicts_.size(); }

 private:
  using Key = std::tuple<std::string, TokenSpan, TokenSpan>;
  std::map<Key, bool> verdicts_;
};

// Talks to the model sidecar: POST /cpc {"marked_text": ...} -> {"causal": b}
// and POST /batch {"marked_texts": [...]} -> {"causal": [b, ...]}.
class HttpCpcClient : public CpcClient {
 public:
  // `base_url` like "http://127.0.0.1:8009".
  explicit HttpCpcClient(std::string base_url, int timeout_seconds = 30);

  bool IsCausal(const SentenceAnalysis &sentence, const TokenSpan &cause,
                const TokenSpan &effect) const override;

  bool ClassifyMarked(const std::string &marked_text) const;
  std::vector<bool> ClassifyBatch(const std::vector<std::string> &marked_texts) const;

 private:
  std::string base_url_;
  int timeout_seconds_;
};

}  // namespace causalkg

#endif  // CAUSALKG_CPC_CLIENT_H_
