#include <doctest.h>

#include <set>

#include "locustra/harness.hpp"
#include "locustra/textio.hpp"

using namespace locustra;

TEST_CASE("property names round-trip") {
  for (Property p : all_properties()) {
    CHECK(parse_property(to_string(p)) == p);
  }
  CHECK(parse_property("p7") == Property::p7);
  CHECK(!parse_property("P13").has_value());
  CHECK(!parse_property("Q1").has_value());
  CHECK(!parse_property("P").has_value());
}

TEST_CASE("corpus construction") {
  CorpusParams params;
  params.space_n = 2;
  params.poset_max = 2;
  const InstanceCorpus corpus = build_corpus(params);
  CHECK(corpus.spaces.size() == 4);
  CHECK(corpus.frames.size() == 13);
  CHECK(corpus.skipped_oversize == 0);
  std::set<std::uint64_t> hashes;
  for (const auto& s : corpus.spaces) CHECK(hashes.insert(s.hash).second);
  for (const auto& f : corpus.frames) CHECK(hashes.insert(f.hash).second);
  // canonical text reproduces the hash
  CHECK(corpus.spaces[0].hash == fnv1a64("space\n" + corpus.spaces[0].canonical));
}

TEST_CASE("oversized frames are dropped and counted") {
  CorpusParams params;
  params.poset_max = 3;
  params.max_scott_opens = 16;  // the 2^3 cube alone has 20 upper sets
  const InstanceCorpus corpus = build_corpus(params);
  CHECK(corpus.skipped_oversize > 0);
  for (const auto& f : corpus.frames)
    CHECK_NOTHROW(count_upper_sets(f.frame.order(), params.max_scott_opens));
}

TEST_CASE("the suite finds no counterexamples at desk scale") {
  CorpusParams params;
  params.space_n = 3;
  params.poset_max = 2;
  const InstanceCorpus corpus = build_corpus(params);
  SuiteOptions options;
  const SuiteReport report = run_suite(corpus, options);
  CHECK(report.counterexamples() == 0);
  // every property covers its applicable instances exactly
  const int spaces = static_cast<int>(corpus.spaces.size());
  const int frames = static_cast<int>(corpus.frames.size());
  CHECK(spaces == 29);
  for (Property p : all_properties()) {
    const PropertyStats& st = report.stats[static_cast<int>(p)];
    CHECK(st.fail == 0);
    CHECK(st.pass == (is_space_property(p) ? spaces : spaces + frames));
  }
  // records are sorted by instance, then property
  for (std::size_t i = 1; i < report.records.size(); ++i) {
    const auto& a = report.records[i - 1];
    const auto& b = report.records[i];
    CHECK((a.instance < b.instance ||
           (a.instance == b.instance && a.property < b.property)));
  }
}

TEST_CASE("reports are byte-identical across worker counts") {
  CorpusParams params;
  params.space_n = 3;
  params.poset_max = 2;
  const InstanceCorpus corpus = build_corpus(params);
  SuiteOptions one;
  one.workers = 1;
  SuiteOptions four;
  four.workers = 4;
  const std::string a = run_suite(corpus, one).serialize();
  const std::string b = run_suite(corpus, four).serialize();
  CHECK(a == b);
  CHECK(a.find("# counterexamples: 0") != std::string::npos);
  CHECK(a.find("# summary: P4 pass=29 fail=0") != std::string::npos);
}

TEST_CASE("property selection narrows the records") {
  CorpusParams params;
  params.space_n = 2;
  const InstanceCorpus corpus = build_corpus(params);
  SuiteOptions options;
  options.properties = {Property::p6, Property::p7};
  const SuiteReport report = run_suite(corpus, options);
  CHECK(report.records.size() == corpus.spaces.size() * 2);
  const std::string text = report.serialize();
  CHECK(text.find("# props: P6,P7") != std::string::npos);
  CHECK(text.find("property=P1") == std::string::npos);
}

TEST_CASE("failing records embed the instance after the witness") {
  SuiteReport report;
  report.properties = {Property::p5};
  PropertyRecord rec;
  rec.property = Property::p5;
  rec.instance = 0xdeadbeef;
  rec.pass = false;
  rec.witness = "point 1|space n=1;open -;open 0";
  report.records.push_back(rec);
  report.stats[static_cast<int>(Property::p5)].fail = 1;
  const std::string text = report.serialize();
  CHECK(text.find("property=P5 instance=00000000deadbeef verdict=fail "
                  "witness=point 1|space n=1;open -;open 0") != std::string::npos);
  CHECK(report.counterexamples() == 1);
}

TEST_CASE("interesting instances are listed in the report") {
  SuiteReport report;
  report.properties = {Property::p9};
  report.interesting = {0x1234};
  CHECK(report.serialize().find("# interesting: scott-not-preregular "
                                "instance=0000000000001234") != std::string::npos);
  // no frame at desk scale separates the two notions; the suite merely
  // leaves the hook armed
  CorpusParams params;
  params.poset_max = 3;
  SuiteOptions options;
  options.properties = {Property::p9};
  CHECK(run_suite(build_corpus(params), options).interesting.empty());
}

TEST_CASE("timing lines appear only on request") {
  CorpusParams params;
  params.space_n = 1;
  const InstanceCorpus corpus = build_corpus(params);
  const SuiteReport report = run_suite(corpus, {});
  CHECK(report.serialize().find("# timing:") == std::string::npos);
  CHECK(report.serialize(true).find("# timing: P1 ms=") != std::string::npos);
}

TEST_CASE("the scott cap propagates as an error for undersized caps on spaces") {
  CorpusParams params;
  params.space_n = 2;
  const InstanceCorpus corpus = build_corpus(params);
  SuiteOptions options;
  options.max_scott_opens = 2;  // even the Sierpinski opens-frame has 4 upper sets
  CHECK_THROWS_AS(run_suite(corpus, options), InstanceTooLarge);
}

TEST_CASE("the r1 experiment scope is recorded in the header") {
  CorpusParams params;
  params.space_n = 1;
  const InstanceCorpus corpus = build_corpus(params);
  SuiteOptions options;
  options.r1_scope = R1Scope::all_elements;
  const std::string text = run_suite(corpus, options).serialize();
  CHECK(text.find("# r1-scope: all-elements") != std::string::npos);
}
