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

#include <random>
#include <sstream>

#include "causalkg/corpus.h"
#include "causalkg/error.h"
#include "causalkg/relation.h"
#include "support/fixtures.h"

namespace causalkg {
namespace {

using testing::MakeSentence;
using testing::RandomSentence;

std::string ErrorText(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.what();
  }
  return "";
}

TEST(ValidateSentence, AcceptsFixtures) {
  EXPECT_NO_THROW(ValidateSentence(testing::FurloughSentence()));
  EXPECT_NO_THROW(ValidateSentence(testing::DisplaySystemsSentence()));
}

TEST(ValidateSentence, RejectsBrokenInvariants) {
  SentenceAnalysis s = MakeSentence("s1", "a/NN b/VBD c/NN", {{1, 0, "nsubj"}, {1, 2, "dobj"}});

  SentenceAnalysis gap = s;
  gap.tokens[2].index = 3;
  EXPECT_NE(ErrorText([&] { ValidateSentence(gap); }).find("s1"), std::string::npos);

  SentenceAnalysis loop = s;
  loop.dep_edges.push_back({2, 2, "dep"});
  EXPECT_THROW(ValidateSentence(loop), Error);

  SentenceAnalysis out_of_range = s;
  out_of_range.dep_edges.push_back({1, 7, "dep"});
  EXPECT_THROW(ValidateSentence(out_of_range), Error);

  SentenceAnalysis dup = s;
  dup.dep_edges.push_back({1, 0, "nsubj"});
  EXPECT_THROW(ValidateSentence(dup), Error);

  SentenceAnalysis ner = s;
  ner.ner_spans.push_back({2, 4, NerLabel::kPerson});
  EXPECT_THROW(ValidateSentence(ner), Error);

  SentenceAnalysis empty_text = s;
  empty_text.tokens[0].text.clear();
  EXPECT_THROW(ValidateSentence(empty_text), Error);
}

TEST(ValidateSentence, RejectsDisconnectedParse) {
  SentenceAnalysis s = MakeSentence("s", "a b c d", {{0, 1, "dep"}});
  s.dep_edges.push_back({2, 3, "dep"});
  EXPECT_NE(ErrorText([&] { ValidateSentence(s); }).find("disconnected"), std::string::npos);
}

TEST(ReadCorpus, RoundTripsRandomSentences) {
  std::mt19937 rng(5);
  std::vector<DocumentMeta> docs = {{"d0", "2020-03-01", "IN", "t0"},
                                    {"d1", "2021-01-01", "", ""}};
  std::vector<SentenceAnalysis> sents;
  for (int i = 0; i < 40; ++i) {
    SentenceAnalysis s = RandomSentence(rng, 3 + i % 9, i % 3, "s" + std::to_string(i));
    s.doc_id = docs[i % 2].doc_id;
    if (i % 4 == 0) s.ner_spans.push_back({0, 1, NerLabel::kOrganization});
    sents.push_back(s);
  }
  Corpus corpus(docs, sents);
  std::ostringstream so, dout;
  WriteCorpus(corpus, so, dout);
  std::istringstream si(so.str()), di(dout.str());
  Corpus back = ReadCorpus(si, di);
  EXPECT_EQ(back, corpus);
  ASSERT_NE(back.FindSentence("s7"), nullptr);
  EXPECT_EQ(back.FindSentence("s7")->sentence_id, "s7");
  EXPECT_EQ(back.FindSentence("nope"), nullptr);
  EXPECT_EQ(back.FindDocument("d1")->published, "2021-01-01");
}

TEST(ReadCorpus, ErrorsCarryLineNumbers) {
  std::istringstream docs(R"({"doc_id":"d0","published":"2020-01-01"}
{"doc_id":"d1"}
)");
  std::istringstream sents(
      R"({"sentence_id":"a","doc_id":"d0","tokens":[{"index":0,"text":"x","pos":"NN"}]}

{"sentence_id":"b","doc_id":"d9","tokens":[{"index":0,"text":"x","pos":"NN"}]}
)");
  std::string msg = ErrorText([&] { ReadCorpus(sents, docs); });
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("d9"), std::string::npos) << msg;

  std::istringstream bad_docs("{\"doc_id\":\"d0\"}\nnot json\n");
  std::istringstream none("");
  msg = ErrorText([&] { ReadCorpus(none, bad_docs); });
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
}

TEST(ReadCorpus, DuplicateIdsRejected) {
  std::istringstream docs("{\"doc_id\":\"d0\"}\n");
  std::istringstream sents(
      R"({"sentence_id":"a","doc_id":"d0","tokens":[{"index":0,"text":"x","pos":"NN"}]}
{"sentence_id":"a","doc_id":"d0","tokens":[{"index":0,"text":"y","pos":"NN"}]}
)");
  EXPECT_NE(ErrorText([&] { ReadCorpus(sents, docs); }).find("duplicate"), std::string::npos);
  std::istringstream dup_docs("{\"doc_id\":\"d0\"}\n{\"doc_id\":\"d0\"}\n");
  std::istringstream none("");
  EXPECT_THROW(ReadCorpus(none, dup_docs), Error);
}

TEST(LoadCorpus, MissingFileIsMissingInput) {
  try {
    LoadCorpus("/nonexistent/s.jsonl", "/nonexistent/d.jsonl");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.category(), ErrorCategory::kMissingInput);
  }
}

TEST(Dates, StrictIso) {
  ASSERT_TRUE(ParseIsoDate("2020-02-29"));
  EXPECT_EQ(FormatIsoDate(*ParseIsoDate("2020-02-29")), "2020-02-29");
  EXPECT_FALSE(ParseIsoDate("2021-02-29"));
  EXPECT_FALSE(ParseIsoDate("2020-2-1"));
  EXPECT_FALSE(ParseIsoDate("2020-01-01T00:00"));
  EXPECT_FALSE(ParseIsoDate(""));
}

TEST(BucketByTime, PartitionsDocuments) {
  std::vector<DocumentMeta> docs = {{"a", "2019-12-31", "", ""}, {"b", "2020-01-01", "", ""},
                                    {"c", "2020-07-04", "", ""}, {"d", "2021-01-01", "", ""},
                                    {"e", "sometime", "", ""},   {"f", "2022-05-05", "", ""}};
  Corpus corpus(docs, {});
  std::vector<Date> bounds = {*ParseIsoDate("2020-01-01"), *ParseIsoDate("2021-01-01")};
  TimeBuckets b = BucketByTime(corpus, bounds);
  EXPECT_EQ(b.labels, (std::vector<std::string>{"before 2020", "2020", "after 2020"}));
  EXPECT_EQ(b.doc_ids[0], (std::vector<std::string>{"a"}));
  EXPECT_EQ(b.doc_ids[1], (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(b.doc_ids[2], (std::vector<std::string>{"d", "f"}));
  EXPECT_EQ(b.rejected, (std::vector<std::string>{"e"}));
  EXPECT_EQ(b.BucketOf("c"), 1);
  EXPECT_EQ(b.BucketOf("e"), -1);

  // Every parseable document lands in exactly one bucket.
  std::size_t total = b.rejected.size();
  for (const auto &ids : b.doc_ids) total += ids.size();
  EXPECT_EQ(total, docs.size());

  EXPECT_THROW(BucketByTime(corpus, {bounds[1], bounds[0]}), Error);
  EXPECT_EQ(BucketByTime(corpus, {}).labels, (std::vector<std::string>{"all"}));
}

TEST(BucketLabels, MultiYearAndExplicitDates) {
  EXPECT_EQ(BucketLabels({*ParseIsoDate("2018-01-01"), *ParseIsoDate("2020-01-01")}),
            (std::vector<std::string>{"before 2018", "2018 to 2019", "after 2019"}));
  EXPECT_EQ(BucketLabels({*ParseIsoDate("2020-03-15")}),
            (std::vector<std::string>{"before 2020-03-15", "from 2020-03-15"}));
}

TEST(Relations, RoundTrip) {
  std::vector<CausalRelation> rels = {
      {"s#p0", "s", ExtractionMethod::kPattern, Provenance::kPattern, {0, 2}, {4, 6},
       "[[cause]]/N -nsubj caused/VBD +dobj [[effect]]", {2}},
      {"s#b0", "s", ExtractionMethod::kBert, Provenance::kCpcMulti, {3, 5}, {0, 2}, "", {}}};
  std::ostringstream out;
  WriteRelations(rels, out);
  std::istringstream in(out.str());
  EXPECT_EQ(ReadRelations(in), rels);
  std::istringstream bad(R"({"relation_id":"x","sentence_id":"s","method":"magic"})");
  EXPECT_THROW(ReadRelations(bad), Error);
}

}  // namespace
}  // namespace causalkg
