#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locustra/enumerate.hpp"
#include "locustra/spectrum.hpp"

namespace locustra {

// The twelve instance-level properties the suite verifies. P4..P7, P10
// and P11 quantify over spaces; the rest quantify over frames and, for a
// space instance, run against its frame of opens.
enum class Property {
  p1,   // phi is a frame homomorphism
  p2,   // d-set characterization, downward closure, filter => ideal
  p3,   // the three definitions of phi agree on every Scott open
  p4,   // the preimage under f of every Scott open is phi of it
  p5,   // f(x) is contained in p(x)
  p6,   // preregular iff f = p
  p7,   // T0 => (Hausdorff iff f = p)
  p8,   // Scott locale => T1 spectrum
  p9,   // preregular locale => Scott locale
  p10,  // sober => (Hausdorff iff T1 and every f(x) prime)
  p11,  // preregular space => preregular frame of opens
  p12,  // preregular locale => Hausdorff spectrum
};

inline constexpr int kPropertyCount = 12;
std::string to_string(Property p);
std::optional<Property> parse_property(std::string_view name);
bool is_space_property(Property p);
std::vector<Property> all_properties();

struct SpaceInstance {
  FiniteSpace space;
  std::string provenance;
  std::string canonical;  // multi-line text form
  std::uint64_t hash;
};

struct FrameInstanceEntry {
  FiniteFrame frame;
  std::string provenance;
  std::string canonical;
  std::uint64_t hash;
};

struct CorpusParams {
  int space_n = -1;         // exact point count; -1 for no spaces
  int space_samples = 0;    // used when space_n needs sampling
  int poset_max = 0;        // frames from posets of size <= poset_max; 0 for none
  int frame_samples = 0;    // used when poset_max reaches the sampled size
  std::uint64_t seed = 0;
  std::size_t max_scott_opens = kDefaultMaxScottOpens;
};

struct InstanceCorpus {
  CorpusParams params;
  std::vector<SpaceInstance> spaces;
  std::vector<FrameInstanceEntry> frames;
  // Sampled frames whose Scott topology would exceed the cap are dropped
  // here so that every report record can carry a pass/fail verdict.
  int skipped_oversize = 0;
};

InstanceCorpus build_corpus(const CorpusParams& params);

struct SuiteOptions {
  std::vector<Property> properties;  // empty selects all
  int workers = 1;
  R1Scope r1_scope = R1Scope::primes;
  std::size_t max_scott_opens = kDefaultMaxScottOpens;
};

struct PropertyRecord {
  Property property;
  std::uint64_t instance;
  bool pass;
  std::string witness;  // failing records embed the instance after '|'
  double millis = 0.0;
};

struct PropertyStats {
  int pass = 0;
  int fail = 0;
  double millis = 0.0;
};

struct SuiteReport {
  CorpusParams params;
  std::vector<Property> properties;
  R1Scope r1_scope = R1Scope::primes;
  int skipped_oversize = 0;
  std::vector<PropertyRecord> records;  // sorted by (instance hash, property)
  std::array<PropertyStats, kPropertyCount> stats{};
  // Frames that are Scott locales without being preregular, noticed while
  // evaluating P9. No instance of either kind is asserted to exist; these
  // are flagged for a human to look at.
  std::vector<std::uint64_t> interesting;

  int counterexamples() const;
  // Identical corpus and selection give byte-identical output regardless
  // of the worker count; timing lines are opt-in because they vary.
  std::string serialize(bool timings = false) const;
};

SuiteReport run_suite(const InstanceCorpus& corpus, const SuiteOptions& options);

}  // namespace locustra
