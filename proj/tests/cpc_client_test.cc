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

#include <gtest/gtest.h>

#include <sstream>
#include <thread>

#include "causalkg/cpc_client.h"
#include "causalkg/error.h"
#include "httplib.h"
#include "json.hpp"
#include "support/fixtures.h"

namespace causalkg {
namespace {

using testing::MakeSentence;
using testing::PostProcessingExamples;

TEST(MarkSentence, Example3Pair) {
  auto ex = PostProcessingExamples()[2];
  EXPECT_EQ(MarkSentence(ex.sentence, {3, 10}, {15, 19}),
            "Hence we expect <ARG0>global supply chains switching to EVs to</ARG0> have a "
            "positive impact on <ARG1>the Indian EV industry</ARG1> .");
}

TEST(MarkSentence, EffectFirstAndSingleTokens) {
  SentenceAnalysis s = MakeSentence("s", "floods after rain");
  EXPECT_EQ(MarkSentence(s, {2, 3}, {0, 1}), "<ARG1>floods</ARG1> after <ARG0>rain</ARG0>");
}

TEST(VerdictFile, RoundTripAndLookup) {
  std::vector<CpcVerdict> verdicts = {{"s", {0, 1}, {2, 3}, true}, {"s", {2, 3}, {0, 1}, false}};
  std::ostringstream out;
  WriteCpcVerdicts(verdicts, out);
  std::istringstream in(out.str());
  VerdictFileClient client(ReadCpcVerdicts(in));
  SentenceAnalysis s = MakeSentence("s", "a b c");
  EXPECT_EQ(client.size(), 2u);
  EXPECT_TRUE(client.IsCausal(s, {0, 1}, {2, 3}));
  EXPECT_FALSE(client.IsCausal(s, {2, 3}, {0, 1}));
  try {
    client.IsCausal(s, {0, 2}, {2, 3});
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("[0,2)"), std::string::npos);
  }
}

TEST(VerdictFile, ConflictingDuplicatesRejected) {
  EXPECT_THROW(VerdictFileClient({{"s", {0, 1}, {2, 3}, true}, {"s", {0, 1}, {2, 3}, false}}),
               Error);
  EXPECT_NO_THROW(VerdictFileClient({{"s", {0, 1}, {2, 3}, true}, {"s", {0, 1}, {2, 3}, true}}));
}

// In-process stand-in for the model sidecar.
class StubSidecar {
 public:
  StubSidecar() {
    server_.Post("/cpc", [this](const httplib::Request &req, httplib::Response &res) {
      ++requests_;
      auto body = nlohmann::json::parse(req.body, nullptr, false);
      if (body.is_discarded() || !body.contains("marked_text")) {
        res.status = 400;
        res.set_content("missing marked_text", "text/plain");
        return;
      }
      const std::string text = body["marked_text"];
      if (text.find("<ARG0>") == std::string::npos || text.find("<ARG1>") == std::string::npos) {
        res.status = 400;
        res.set_content("unmarked text", "text/plain");
        return;
      }
      last_ = text;
      res.set_content(nlohmann::json{{"causal", Verdict(text)}}.dump(), "application/json");
    });
    server_.Post("/batch", [](const httplib::Request &req, httplib::Response &res) {
      auto body = nlohmann::json::parse(req.body);
      nlohmann::json out = nlohmann::json::array();
      for (const auto &t : body["marked_texts"]) out.push_back(Verdict(t.get<std::string>()));
      res.set_content(nlohmann::json{{"causal", out}}.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~StubSidecar() {
    server_.stop();
    thread_.join();
  }

  // Causal iff the cause is marked before the effect.
  static bool Verdict(const std::string &t) { return t.find("<ARG0>") < t.find("<ARG1>"); }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  int requests() const { return requests_; }
  const std::string &last() const { return last_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> requests_{0};
  std::string last_;
};

TEST(HttpCpcClient, AnswersMarkedPairs) {
  StubSidecar sidecar;
  HttpCpcClient client(sidecar.url() + "/", 5);
  auto ex = PostProcessingExamples()[2];
  EXPECT_TRUE(client.IsCausal(ex.sentence, {3, 10}, {15, 19}));
  EXPECT_EQ(sidecar.last(), MarkSentence(ex.sentence, {3, 10}, {15, 19}));
  EXPECT_FALSE(client.IsCausal(ex.sentence, {12, 15}, {4, 5}));
  EXPECT_EQ(sidecar.requests(), 2);
}

TEST(HttpCpcClient, BatchKeepsOrder) {
  StubSidecar sidecar;
  HttpCpcClient client(sidecar.url(), 5);
  std::vector<std::string> texts = {"<ARG0>a</ARG0> <ARG1>b</ARG1>",
                                    "<ARG1>a</ARG1> <ARG0>b</ARG0>",
                                    "<ARG0>c</ARG0> x <ARG1>d</ARG1>"};
  EXPECT_EQ(client.ClassifyBatch(texts), (std::vector<bool>{true, false, true}));
  EXPECT_TRUE(client.ClassifyBatch({}).empty());
}

TEST(HttpCpcClient, ErrorsAreExternal) {
  StubSidecar sidecar;
  HttpCpcClient client(sidecar.url(), 5);
  try {
    client.ClassifyMarked("no markers here");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.category(), ErrorCategory::kExternal);
    EXPECT_NE(std::string(e.what()).find("400"), std::string::npos);
  }
  HttpCpcClient nowhere("http://127.0.0.1:1", 1);
  try {
    nowhere.ClassifyMarked("<ARG0>a</ARG0> <ARG1>b</ARG1>");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.category(), ErrorCategory::kExternal);
  }
}

}  // namespace
}  // namespace causalkg
