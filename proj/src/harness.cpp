#include "locustra/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "locustra/textio.hpp"

namespace locustra {

std::string to_string(Property p) { return "P" + std::to_string(static_cast<int>(p) + 1); }

std::optional<Property> parse_property(std::string_view name) {
  if (name.size() < 2 || (name[0] != 'P' && name[0] != 'p')) return std::nullopt;
  int value = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
    if (value > kPropertyCount) return std::nullopt;
  }
  if (value < 1) return std::nullopt;
  return static_cast<Property>(value - 1);
}

bool is_space_property(Property p) {
  switch (p) {
    case Property::p4:
    case Property::p5:
    case Property::p6:
    case Property::p7:
    case Property::p10:
    case Property::p11:
      return true;
    default:
      return false;
  }
}

std::vector<Property> all_properties() {
  std::vector<Property> out;
  for (int i = 0; i < kPropertyCount; ++i) out.push_back(static_cast<Property>(i));
  return out;
}

namespace {

// Structures shared by the frame-side properties of one instance: the
// Scott-opens frame with its phi table, the spectrum, and the two locale
// verdicts, each built once on first use.
struct FrameChecks {
  const FiniteFrame& f;
  std::size_t max_opens;
  R1Scope scope;
  std::optional<FrameHom<SetFamilyFrame, FiniteFrame>> hom_;
  std::optional<Booleanization> boolz_;
  std::optional<SpectrumSpace> spec_;
  std::optional<Verdict> scott_, prereg_;

  FrameChecks(const FiniteFrame& frame, std::size_t cap, R1Scope r1)
      : f(frame), max_opens(cap), scope(r1) {}

  const FrameHom<SetFamilyFrame, FiniteFrame>& hom() {
    if (!hom_) hom_ = phi_as_hom(f, max_opens);
    return *hom_;
  }
  const Booleanization& boolz() {
    if (!boolz_) boolz_ = booleanization(f);
    return *boolz_;
  }
  const SpectrumSpace& spec() {
    if (!spec_) spec_ = spectrum(f);
    return *spec_;
  }
  const Verdict& scott() {
    if (!scott_) scott_ = scott_locale_check(f, hom().source.sets(), spec());
    return *scott_;
  }
  const Verdict& prereg() {
    if (!prereg_) prereg_ = is_preregular_locale(f, scope);
    return *prereg_;
  }

  std::string open_name(Mask u) const {
    return "scott-open min=" + mask_to_csv(minimal_members(f.order(), u));
  }

  // The converse of P9 is not a theorem; a frame exhibiting the gap is
  // worth a look.
  bool scott_not_preregular() { return scott().ok && !prereg().ok; }

  Verdict check_d_sets() {
    for (int i = 0; i < hom().source.size(); ++i) {
      const Mask u = hom().source.set_of(i);
      const Mask d = d_set(f, UpperFamily::over(f, u));
      Mask via_neg = 0;
      for (int a = 0; a < f.size(); ++a)
        if (mask_test(u, f.neg(a))) via_neg |= mask_bit(a);
      if (d != via_neg)
        return Verdict::fail("d-set differs from its neg characterization at " + open_name(u));
      bool down = true;
      mask_for_each(d, [&](int a) {
        if (!mask_subset(f.down(a), d)) down = false;
      });
      if (!down) return Verdict::fail("d-set not downward closed at " + open_name(u));
      if (is_filter(f, u) && !is_ideal(f, d))
        return Verdict::fail("filter whose d-set is not an ideal at " + open_name(u));
    }
    return Verdict::pass();
  }

  Verdict check_phi_forms() {
    const Mask fix = boolz().fixpoints;
    for (int i = 0; i < hom().source.size(); ++i) {
      const Mask u = hom().source.set_of(i);
      const int via_d = hom().map[i];
      const int via_b = big_join(f, b_set(f, UpperFamily::over(f, u)));
      Mask in_quotient = 0;
      mask_for_each(fix, [&](int a) {
        if (mask_test(u, f.neg(a))) in_quotient |= mask_bit(a);
      });
      const int via_fix = big_join(f, in_quotient);
      if (via_d != via_b || via_d != via_fix)
        return Verdict::fail("phi definitions disagree at " + open_name(u));
    }
    return Verdict::pass();
  }

  Verdict run(Property p) {
    switch (p) {
      case Property::p1:
        return verify_frame_hom(hom());
      case Property::p2:
        return check_d_sets();
      case Property::p3:
        return check_phi_forms();
      case Property::p8: {
        if (!scott().ok) return Verdict::pass();
        const Verdict t1 = is_t1(spec().space);
        return t1.ok ? Verdict::pass()
                     : Verdict::fail("scott locale with non-T1 spectrum: " + t1.witness);
      }
      case Property::p9:
        if (!prereg().ok) return Verdict::pass();
        return scott().ok
                   ? Verdict::pass()
                   : Verdict::fail("preregular locale that is not scott: " + scott().witness);
      case Property::p12: {
        if (!prereg().ok) return Verdict::pass();
        const Verdict h = is_hausdorff(spec().space);
        return h.ok ? Verdict::pass()
                    : Verdict::fail("preregular locale with non-hausdorff spectrum: " + h.witness);
      }
      default:
        throw Error("not a frame property: " + to_string(p));
    }
  }
};

struct SpaceChecks {
  const FiniteSpace& s;
  OpenSetFrame osf;
  FrameChecks frame_checks;
  std::vector<Mask> f, p;
  std::vector<int> f_elem;
  Verdict t0, t1, prereg, haus, sober;

  SpaceChecks(const FiniteSpace& space, std::size_t cap, R1Scope r1)
      : s(space),
        osf(open_set_frame(space)),
        frame_checks(osf.frame, cap, r1),
        f(f_map(space)),
        p(points_to_primes(space)),
        t0(is_t0(space)),
        t1(is_t1(space)),
        prereg(is_preregular(space)),
        haus(is_hausdorff(space)),
        sober(is_sober(space)) {
    f_elem.resize(s.points());
    for (int x = 0; x < s.points(); ++x) f_elem[x] = osf.element_of(f[x]);
  }
  SpaceChecks(const SpaceChecks&) = delete;

  int first_f_neq_p() const {
    for (int x = 0; x < s.points(); ++x)
      if (f[x] != p[x]) return x;
    return -1;
  }

  Verdict check_preimages() {
    const auto& hom = frame_checks.hom();
    for (int i = 0; i < hom.source.size(); ++i) {
      const Mask scott_open = hom.source.set_of(i);
      Mask preimage = 0;
      for (int x = 0; x < s.points(); ++x)
        if (mask_test(scott_open, f_elem[x])) preimage |= mask_bit(x);
      if (preimage != osf.open_of[hom.map[i]])
        return Verdict::fail("f-preimage differs from phi at " +
                             frame_checks.open_name(scott_open));
    }
    return Verdict::pass();
  }

  Verdict run(Property prop) {
    switch (prop) {
      case Property::p4:
        return check_preimages();
      case Property::p5:
        for (int x = 0; x < s.points(); ++x)
          if (!mask_subset(f[x], p[x])) return Verdict::fail("point " + std::to_string(x));
        return Verdict::pass();
      case Property::p6: {
        const int bad = first_f_neq_p();
        if (prereg.ok && bad >= 0)
          return Verdict::fail("preregular but f differs from p at point " + std::to_string(bad));
        if (!prereg.ok && bad < 0)
          return Verdict::fail("f equals p but not preregular at " + prereg.witness);
        return Verdict::pass();
      }
      case Property::p7: {
        if (!t0.ok) return Verdict::pass();
        const int bad = first_f_neq_p();
        if (haus.ok && bad >= 0)
          return Verdict::fail("hausdorff but f differs from p at point " + std::to_string(bad));
        if (!haus.ok && bad < 0)
          return Verdict::fail("f equals p but not hausdorff at " + haus.witness);
        return Verdict::pass();
      }
      case Property::p10: {
        if (!sober.ok) return Verdict::pass();
        const std::vector<int> ps = primes(osf.frame);
        Mask prime_mask = 0;
        for (int e : ps) prime_mask |= mask_bit(e);
        int not_prime = -1;
        for (int x = 0; x < s.points(); ++x)
          if (!mask_test(prime_mask, f_elem[x])) {
            not_prime = x;
            break;
          }
        const bool rhs = t1.ok && not_prime < 0;
        if (haus.ok && !rhs)
          return Verdict::fail(t1.ok ? "hausdorff but f not prime at point " +
                                           std::to_string(not_prime)
                                     : "hausdorff but not T1 at " + t1.witness);
        if (!haus.ok && rhs)
          return Verdict::fail("T1 with prime f-images but not hausdorff at " + haus.witness);
        return Verdict::pass();
      }
      case Property::p11: {
        if (!prereg.ok) return Verdict::pass();
        const Verdict pl = is_preregular_locale(osf.frame, frame_checks.scope);
        return pl.ok ? Verdict::pass()
                     : Verdict::fail("preregular space with non-preregular frame of opens: " +
                                     pl.witness);
      }
      default:
        return frame_checks.run(prop);
    }
  }
};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

struct InstanceResult {
  std::vector<PropertyRecord> records;
  bool interesting = false;
};

template <typename Checks>
void append_records(Checks& checks, FrameChecks& frame_checks, std::uint64_t hash,
                    const std::string& canonical, const std::vector<Property>& props,
                    bool frame_only, InstanceResult& out) {
  for (Property prop : props) {
    if (frame_only && is_space_property(prop)) continue;
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = checks.run(prop);
    PropertyRecord rec;
    rec.property = prop;
    rec.instance = hash;
    rec.pass = v.ok;
    if (!v.ok) rec.witness = v.witness + "|" + one_line(canonical);
    rec.millis = elapsed_ms(start);
    out.records.push_back(std::move(rec));
    if (prop == Property::p9 && frame_checks.scott_not_preregular()) out.interesting = true;
  }
}

}  // namespace

InstanceCorpus build_corpus(const CorpusParams& params) {
  InstanceCorpus corpus;
  corpus.params = params;

  if (params.space_n >= 0) {
    std::vector<FiniteSpace> spaces;
    std::string tag;
    if (params.space_n <= kMaxEnumeratedSpacePoints) {
      spaces = enumerate_topologies(params.space_n);
      tag = "topology";
    } else if (params.space_n == kMaxSampledSpacePoints) {
      spaces = sample_topologies(params.space_n, params.space_samples, params.seed);
      tag = "sample-topology";
    } else {
      enumerate_topologies(params.space_n);  // throws CapExceeded
    }
    int idx = 0;
    for (FiniteSpace& s : spaces) {
      SpaceInstance inst{std::move(s),
                         tag + ":n=" + std::to_string(params.space_n) +
                             ":idx=" + std::to_string(idx++),
                         {},
                         0};
      inst.canonical = write_space(inst.space);
      inst.hash = fnv1a64("space\n" + inst.canonical);
      corpus.spaces.push_back(std::move(inst));
    }
  }

  if (params.poset_max > 0) {
    std::vector<FrameInstance> frames;
    if (params.poset_max <= kMaxEnumeratedPosetSize) {
      frames = enumerate_frames(params.poset_max);
    } else if (params.poset_max == kMaxSampledPosetSize) {
      frames = enumerate_frames(kMaxEnumeratedPosetSize);
      for (FrameInstance& fi : sample_frames(kMaxSampledPosetSize, params.frame_samples,
                                             params.seed))
        frames.push_back(std::move(fi));
    } else {
      enumerate_frames(params.poset_max);  // throws CapExceeded
    }
    std::set<std::string> seen;
    for (FrameInstance& fi : frames) {
      std::string canonical = write_lattice(fi.frame);
      if (!seen.insert(canonical).second) continue;  // equal as built objects
      try {
        count_upper_sets(fi.frame.order(), params.max_scott_opens);
      } catch (const InstanceTooLarge&) {
        ++corpus.skipped_oversize;
        continue;
      }
      FrameInstanceEntry entry{std::move(fi.frame), std::move(fi.provenance),
                               std::move(canonical), 0};
      entry.hash = fnv1a64("frame\n" + entry.canonical);
      corpus.frames.push_back(std::move(entry));
    }
  }

  std::vector<std::uint64_t> hashes;
  hashes.reserve(corpus.spaces.size() + corpus.frames.size());
  for (const auto& s : corpus.spaces) hashes.push_back(s.hash);
  for (const auto& f : corpus.frames) hashes.push_back(f.hash);
  std::sort(hashes.begin(), hashes.end());
  if (std::adjacent_find(hashes.begin(), hashes.end()) != hashes.end())
    throw Error("canonical hash collision in corpus");
  return corpus;
}

SuiteReport run_suite(const InstanceCorpus& corpus, const SuiteOptions& options) {
  std::vector<Property> props =
      options.properties.empty() ? all_properties() : options.properties;
  std::sort(props.begin(), props.end());
  props.erase(std::unique(props.begin(), props.end()), props.end());

  const std::size_t jobs = corpus.spaces.size() + corpus.frames.size();
  std::vector<InstanceResult> results(jobs);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  const auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs) break;
      try {
        if (i < corpus.spaces.size()) {
          const SpaceInstance& inst = corpus.spaces[i];
          SpaceChecks checks(inst.space, options.max_scott_opens, options.r1_scope);
          append_records(checks, checks.frame_checks, inst.hash, inst.canonical, props, false,
                         results[i]);
        } else {
          const FrameInstanceEntry& inst = corpus.frames[i - corpus.spaces.size()];
          FrameChecks checks(inst.frame, options.max_scott_opens, options.r1_scope);
          append_records(checks, checks, inst.hash, inst.canonical, props, true, results[i]);
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  SuiteReport report;
  report.params = corpus.params;
  report.properties = props;
  report.r1_scope = options.r1_scope;
  report.skipped_oversize = corpus.skipped_oversize;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (PropertyRecord& rec : results[i].records) report.records.push_back(std::move(rec));
    if (results[i].interesting)
      report.interesting.push_back(i < corpus.spaces.size()
                                       ? corpus.spaces[i].hash
                                       : corpus.frames[i - corpus.spaces.size()].hash);
  }
  std::sort(report.interesting.begin(), report.interesting.end());
  std::sort(report.records.begin(), report.records.end(),
            [](const PropertyRecord& a, const PropertyRecord& b) {
              if (a.instance != b.instance) return a.instance < b.instance;
              return a.property < b.property;
            });
  for (const PropertyRecord& rec : report.records) {
    PropertyStats& st = report.stats[static_cast<int>(rec.property)];
    (rec.pass ? st.pass : st.fail) += 1;
    st.millis += rec.millis;
  }
  return report;
}

int SuiteReport::counterexamples() const {
  int total = 0;
  for (const PropertyStats& st : stats) total += st.fail;
  return total;
}

std::string SuiteReport::serialize(bool timings) const {
  std::string out = "# locustra suite report\n";
  out += "# corpus: space-n=" +
         (params.space_n < 0 ? std::string("-") : std::to_string(params.space_n)) +
         " space-samples=" + std::to_string(params.space_samples) +
         " poset-max=" + std::to_string(params.poset_max) +
         " frame-samples=" + std::to_string(params.frame_samples) +
         " seed=" + std::to_string(params.seed) +
         " scott-cap=" + std::to_string(params.max_scott_opens) + "\n";
  std::string names;
  for (Property p : properties) {
    if (!names.empty()) names += ',';
    names += to_string(p);
  }
  out += "# props: " + names + "\n";
  out += std::string("# r1-scope: ") +
         (r1_scope == R1Scope::primes ? "primes" : "all-elements") + "\n";
  out += "# skipped-oversize: " + std::to_string(skipped_oversize) + "\n";
  for (const PropertyRecord& rec : records)
    out += "property=" + to_string(rec.property) + " instance=" + hash_hex(rec.instance) +
           " verdict=" + (rec.pass ? "pass" : "fail") +
           " witness=" + (rec.pass ? "-" : rec.witness) + "\n";
  for (Property p : properties) {
    const PropertyStats& st = stats[static_cast<int>(p)];
    out += "# summary: " + to_string(p) + " pass=" + std::to_string(st.pass) +
           " fail=" + std::to_string(st.fail) + "\n";
  }
  for (std::uint64_t h : interesting)
    out += "# interesting: scott-not-preregular instance=" + hash_hex(h) + "\n";
  out += "# counterexamples: " + std::to_string(counterexamples()) + "\n";
  if (timings) {
    char buffer[64];
    for (Property p : properties) {
      std::snprintf(buffer, sizeof buffer, "%.3f", stats[static_cast<int>(p)].millis);
      out += "# timing: " + to_string(p) + " ms=" + buffer + "\n";
    }
  }
  return out;
}

}  // namespace locustra
