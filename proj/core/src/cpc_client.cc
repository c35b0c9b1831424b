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

#include "causalkg/cpc_client.h"

#include <fstream>

#include "causalkg/error.h"
#include "httplib.h"
#include "json_util.h"

namespace causalkg {

using internal::Json;

std::string MarkSentence(const SentenceAnalysis &sentence, const TokenSpan &cause,
                         const TokenSpan &effect) {
  std::string out;
  for (int i = 0; i < sentence.size(); ++i) {
    if (!out.empty()) out += ' ';
    if (i == cause.start) out += "<ARG0>";
    if (i == effect.start) out += "<ARG1>";
    out += sentence.tokens[i].text;
    if (i == cause.end - 1) out += "</ARG0>";
    if (i == effect.end - 1) out += "</ARG1>";
  }
  return out;
}

std::vector<CpcVerdict> ReadCpcVerdicts(std::istream &in) {
  std::vector<CpcVerdict> out;
  internal::ForEachJsonLine(in, "cpc verdicts", [&](int, const Json &j) {
    CpcVerdict v;
    v.sentence_id = j.at("sentence_id").get<std::string>();
    v.cause_span = internal::SpanFromJson(j.at("cause_span"));
    v.effect_span = internal::SpanFromJson(j.at("effect_span"));
    v.causal = j.at("causal").get<bool>();
    out.push_back(std::move(v));
  });
  return out;
}

void WriteCpcVerdicts(const std::vector<CpcVerdict> &verdicts, std::ostream &out) {
  for (const CpcVerdict &v : verdicts) {
    internal::OrderedJson j;
    j["sentence_id"] = v.sentence_id;
    j["cause_span"] = internal::SpanToJson(v.cause_span);
    j["effect_span"] = internal::SpanToJson(v.effect_span);
    j["causal"] = v.causal;
    out << j.dump() << '\n';
  }
}

VerdictFileClient::VerdictFileClient(const std::vector<CpcVerdict> &verdicts) {
  for (const CpcVerdict &v : verdicts) {
    auto [it, inserted] =
        verdicts_.try_emplace(Key{v.sentence_id, v.cause_span, v.effect_span}, v.causal);
    if (!inserted && it->second != v.causal) {
      throw InputError("conflicting cpc verdicts for sentence '" + v.sentence_id +
                       "' cause " + v.cause_span.ToString() + " effect " +
                       v.effect_span.ToString());
    }
  }
}

VerdictFileClient VerdictFileClient::Load(const std::filesystem::path &path) {
  std::ifstream in = internal::OpenInput(path);
  return VerdictFileClient(ReadCpcVerdicts(in));
}

bool VerdictFileClient::IsCausal(const SentenceAnalysis &sentence, const TokenSpan &cause,
                                 const TokenSpan &effect) const {
  auto it = verdicts_.find(Key{sentence.sentence_id, cause, effect});
  if (it == verdicts_.end()) {
    throw InputError("no cpc verdict for sentence '" + sentence.sentence_id +
                     "' cause " + cause.ToString() + " effect " + effect.ToString() +
                     ": " + MarkSentence(sentence, cause, effect));
  }
  return it->second;
}

HttpCpcClient::HttpCpcClient(std::string base_url, int timeout_seconds)
    : base_url_(std::move(base_url)), timeout_seconds_(timeout_seconds) {
  while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
}

namespace {

Json PostJson(const std::string &base_url, int timeout, const std::string &path,
              const Json &body) {
  // One client per call keeps concurrent callers independent.
  httplib::Client client(base_url);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  auto response = client.Post(path, body.dump(), "application/json");
  if (!response) {
    throw ExternalError("cpc sidecar at " + base_url + path + " unreachable: " +
                        httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw ExternalError("cpc sidecar returned HTTP " + std::to_string(response->status) +
                        " for " + path + ": " + response->body);
  }
  try {
    return Json::parse(response->body);
  } catch (const Json::exception &e) {
    throw ExternalError("cpc sidecar sent malformed JSON: " + std::string(e.what()));
  }
}

}  // namespace

bool HttpCpcClient::ClassifyMarked(const std::string &marked_text) const {
  Json reply = PostJson(base_url_, timeout_seconds_, "/cpc", {{"marked_text", marked_text}});
  if (!reply.contains("causal") || !reply["causal"].is_boolean()) {
    throw ExternalError("cpc sidecar reply lacks boolean 'causal'");
  }
  return reply["causal"].get<bool>();
}

std::vector<bool> HttpCpcClient::ClassifyBatch(
    const std::vector<std::string> &marked_texts) const {
  if (marked_texts.empty()) return {};
  Json reply =
      PostJson(base_url_, timeout_seconds_, "/batch", {{"marked_texts", marked_texts}});
  if (!reply.contains("causal") || !reply["causal"].is_array() ||
      reply["causal"].size() != marked_texts.size()) {
    throw ExternalError("cpc sidecar batch reply must hold one verdict per input");
  }
  std::vector<bool> out;
  for (const Json &v : reply["causal"]) out.push_back(v.get<bool>());
  return out;
}

bool HttpCpcClient::IsCausal(const SentenceAnalysis &sentence, const TokenSpan &cause,
                             const TokenSpan &effect) const {
  return ClassifyMarked(MarkSentence(sentence, cause, effect));
}

}  // namespace causalkg
