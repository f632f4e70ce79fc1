#include "locustra/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include "locustra/harness.hpp"
#include "locustra/textio.hpp"

// TODO: optional --dot export of Hasse diagrams for check-frame.

namespace locustra {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t scott_cap_from_env() {
  const char* raw = std::getenv("LOCUSTRA_MAX_OPENS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxScottOpens;
  const std::string text(raw);
  if (text.size() > 15 || text.find_first_not_of("0123456789") != std::string::npos)
    throw Error("LOCUSTRA_MAX_OPENS must be a positive integer, got '" + text + "'");
  const unsigned long long value = std::stoull(text);
  if (value == 0) throw Error("LOCUSTRA_MAX_OPENS must be positive");
  return static_cast<std::size_t>(value);
}

// Either a frame file or a space file; spaces contribute their frame of
// opens, with the element <-> open table reported.
struct LoadedFrame {
  FiniteFrame frame;
  std::vector<Mask> open_of;  // empty for plain lattice files
};

LoadedFrame load_frame(const std::string& path) {
  const std::string text = read_file(path);
  const std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text.compare(start, 5, "space") == 0) {
    OpenSetFrame osf = open_set_frame(parse_space(text));
    return LoadedFrame{std::move(osf.frame), std::move(osf.open_of)};
  }
  return LoadedFrame{parse_lattice(text), {}};
}

Mask parse_element_csv(const std::string& text, int n) {
  if (text == "-") return 0;
  Mask out = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw UnknownElement("bad element '" + token + "'");
    const long value = std::stol(token);
    if (value >= n)
      throw UnknownElement("unknown element " + token + " (carrier has " + std::to_string(n) +
                           " elements)");
    out |= mask_bit(static_cast<int>(value));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int cmd_check_space(const std::string& path, bool strict, bool complete_family,
                    std::ostream& out) {
  const FiniteSpace s = parse_space(read_file(path), complete_family);
  const Verdict t0 = is_t0(s), t1 = is_t1(s), prereg = is_preregular(s), haus = is_hausdorff(s),
                sober = is_sober(s);
  out << "space n=" << s.points() << " opens=" << s.opens().size() << "\n";
  const Specialization sp = specialization(s);
  std::string pairs;
  for (int x = 0; x < s.points(); ++x)
    for (int y = 0; y < s.points(); ++y)
      if (x != y && sp.leq(x, y)) {
        if (!pairs.empty()) pairs += ' ';
        pairs += std::to_string(x) + "<=" + std::to_string(y);
      }
  out << "specialization (x<=y iff x in closure{y}): " << (pairs.empty() ? "-" : pairs) << "\n";
  out << "T0=" << to_string(t0) << " T1=" << to_string(t1) << " preregular=" << to_string(prereg)
      << " hausdorff=" << to_string(haus) << " sober=" << to_string(sober) << "\n";
  const bool all_ok = t0.ok && t1.ok && prereg.ok && haus.ok && sober.ok;
  return (strict && !all_ok) ? kExitCheckFailed : kExitOk;
}

int cmd_check_frame(const std::string& path, bool strict, std::size_t cap, std::ostream& out) {
  const std::string text = read_file(path);
  // Format errors exit 2; a well-formed file that is not a frame is a
  // reportable verdict, not an input error.
  std::optional<FiniteFrame> frame;
  try {
    frame = parse_lattice(text);
  } catch (const CycleDetected& e) {
    out << "frame=fail(witness " << e.what() << ")\n";
    return strict ? kExitCheckFailed : kExitOk;
  } catch (const NotALattice& e) {
    out << "frame=fail(witness " << e.what() << ")\n";
    return strict ? kExitCheckFailed : kExitOk;
  } catch (const NotDistributive& e) {
    out << "frame=fail(witness " << e.what() << ")\n";
    return strict ? kExitCheckFailed : kExitOk;
  }
  out << "frame n=" << frame->size() << " bottom=" << frame->bottom() << " top=" << frame->top()
      << " distributive=yes\n";
  Mask prime_mask = 0;
  for (int p : primes(*frame)) prime_mask |= mask_bit(p);
  out << "primes=" << mask_to_csv(prime_mask) << "\n";
  const Verdict scott = is_scott_locale(*frame, cap);
  const Verdict prereg = is_preregular_locale(*frame);
  out << "scott-locale=" << to_string(scott) << "\n";
  out << "preregular-locale=" << to_string(prereg) << "\n";
  return (strict && !(scott.ok && prereg.ok)) ? kExitCheckFailed : kExitOk;
}

int cmd_phi(const std::string& path, const std::string& open_spec, std::ostream& out) {
  const LoadedFrame loaded = load_frame(path);
  const FiniteFrame& f = loaded.frame;
  out << "frame n=" << f.size() << " bottom=" << f.bottom() << " top=" << f.top() << "\n";
  for (std::size_t i = 0; i < loaded.open_of.size(); ++i)
    out << "element " << i << " = open {" << mask_to_csv(loaded.open_of[i]) << "}\n";

  const Mask generators = parse_element_csv(open_spec, f.size());
  const Mask members = upward_closure(f.order(), generators);
  const UpperFamily u = UpperFamily::over(f, members);
  out << "U: min=" << mask_to_csv(minimal_members(f.order(), members))
      << " members=" << mask_to_csv(members) << "\n";

  const Mask d = d_set(f, u);
  const Mask b = b_set(f, u);
  const int via_d = phi(f, u);
  const int via_b = big_join(f, b);
  const Booleanization bz = booleanization(f);
  Mask in_quotient = 0;
  mask_for_each(bz.fixpoints, [&](int a) {
    if (mask_test(members, f.neg(a))) in_quotient |= mask_bit(a);
  });
  const int via_fix = big_join(f, in_quotient);

  out << "D=" << mask_to_csv(d) << "\n";
  out << "B=" << mask_to_csv(b) << "\n";
  out << "phi=" << via_d << "\n";
  out << "phi-via-B=" << via_b << "\n";
  out << "phi-via-booleanization=" << via_fix << "\n";
  const bool agree = via_d == via_b && via_d == via_fix;
  out << "agree=" << (agree ? "yes" : "no") << "\n";
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_f_map(const std::string& path, std::ostream& out) {
  const FiniteSpace s = parse_space(read_file(path));
  const std::vector<Mask> f = f_map(s);
  const std::vector<Mask> p = points_to_primes(s);
  out << "space n=" << s.points() << " opens=" << s.opens().size() << "\n";
  bool equal = true;
  for (int x = 0; x < s.points(); ++x) {
    out << "x=" << x << " f=" << mask_to_csv(f[x]) << " p=" << mask_to_csv(p[x]) << "\n";
    equal = equal && f[x] == p[x];
  }
  out << "f=p: " << (equal ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_spectrum(const std::string& path, std::size_t cap, std::ostream& out) {
  const LoadedFrame loaded = load_frame(path);
  const FiniteFrame& f = loaded.frame;
  const SpectrumSpace sp = spectrum(f);
  out << "frame n=" << f.size() << " bottom=" << f.bottom() << " top=" << f.top() << "\n";
  Mask prime_mask = 0;
  for (int p : sp.primes) prime_mask |= mask_bit(p);
  out << "primes=" << mask_to_csv(prime_mask) << "\n";
  for (int a = 0; a < f.size(); ++a)
    out << "U_" << a << "=" << mask_to_csv(sp.open_of_element[a]) << "\n";
  out << "space: " << one_line(write_space(sp.space)) << "\n";
  out << "scott-locale=" << to_string(is_scott_locale(f, cap)) << "\n";
  out << "preregular-locale=" << to_string(is_preregular_locale(f)) << "\n";
  return kExitOk;
}

int cmd_enumerate(int n, int poset_max, bool t0_only, bool print, int samples,
                  std::uint64_t seed, std::ostream& out) {
  if (n >= 0) {
    std::vector<FiniteSpace> spaces = n <= kMaxEnumeratedSpacePoints
                                          ? enumerate_topologies(n, t0_only)
                                          : sample_topologies(n, samples, seed, t0_only);
    out << "topologies n=" << n << " t0=" << (t0_only ? "yes" : "no")
        << " count=" << spaces.size() << "\n";
    if (print)
      for (const FiniteSpace& s : spaces) out << one_line(write_space(s)) << "\n";
  } else {
    std::vector<FrameInstance> frames;
    if (poset_max <= kMaxEnumeratedPosetSize) {
      frames = enumerate_frames(poset_max);
    } else if (poset_max == kMaxSampledPosetSize) {
      frames = enumerate_frames(kMaxEnumeratedPosetSize);
      for (FrameInstance& fi : sample_frames(poset_max, samples, seed))
        frames.push_back(std::move(fi));
    } else {
      enumerate_frames(poset_max);  // throws CapExceeded
    }
    out << "frames poset-max=" << poset_max << " count=" << frames.size() << "\n";
    if (print)
      for (const FrameInstance& fi : frames) out << one_line(write_lattice(fi.frame)) << "\n";
  }
  return kExitOk;
}

int cmd_suite(int n, int poset_max, std::uint64_t seed, int samples,
              const std::string& props_text, bool r1_all, int workers, bool timings,
              const std::string& out_path, std::size_t cap, std::ostream& out) {
  CorpusParams params;
  params.space_n = n;
  params.space_samples = (n == kMaxSampledSpacePoints) ? samples : 0;
  params.poset_max = poset_max;
  params.frame_samples = (poset_max == kMaxSampledPosetSize) ? samples : 0;
  params.seed = seed;
  params.max_scott_opens = cap;

  SuiteOptions options;
  options.workers = workers;
  options.r1_scope = r1_all ? R1Scope::all_elements : R1Scope::primes;
  options.max_scott_opens = cap;
  if (props_text != "all") {
    std::size_t pos = 0;
    while (pos <= props_text.size()) {
      const std::size_t comma = props_text.find(',', pos);
      const std::string token = comma == std::string::npos ? props_text.substr(pos)
                                                           : props_text.substr(pos, comma - pos);
      const auto prop = parse_property(token);
      if (!prop) throw Error("unknown property '" + token + "'");
      options.properties.push_back(*prop);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }

  const InstanceCorpus corpus = build_corpus(params);
  const SuiteReport report = run_suite(corpus, options);
  const std::string text = report.serialize(timings);
  out << text;
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw Error("cannot write '" + out_path + "'");
    file << text;
  }
  return report.counterexamples() == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite frames, finite spaces, and the canonical map from Scott opens"};
  app.require_subcommand(1);
  std::function<int()> action;

  {
    auto* cmd = app.add_subcommand("check-space", "separation verdicts for a space file");
    auto path = std::make_shared<std::string>();
    auto strict = std::make_shared<bool>(false);
    auto complete = std::make_shared<bool>(false);
    cmd->add_option("path", *path, "space file")->required();
    cmd->add_flag("--strict", *strict, "exit 1 when a predicate fails");
    cmd->add_flag("--complete-family", *complete,
                  "close the family under finite unions and intersections");
    cmd->callback([&action, path, strict, complete, &out]() {
      action = [path, strict, complete, &out]() {
        return cmd_check_space(*path, *strict, *complete, out);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("check-frame", "validate a lattice file as a frame");
    auto path = std::make_shared<std::string>();
    auto strict = std::make_shared<bool>(false);
    cmd->add_option("path", *path, "lattice file")->required();
    cmd->add_flag("--strict", *strict, "exit 1 when a locale predicate fails");
    cmd->callback([&action, path, strict, &out]() {
      action = [path, strict, &out]() {
        return cmd_check_frame(*path, *strict, scott_cap_from_env(), out);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("phi", "evaluate the canonical map on one Scott open");
    auto path = std::make_shared<std::string>();
    auto open_spec = std::make_shared<std::string>();
    cmd->add_option("path", *path, "frame or space file")->required();
    cmd->add_option("--open", *open_spec,
                    "minimal elements of the Scott open, e.g. '1,3' or '-' for empty")
        ->required();
    cmd->callback([&action, path, open_spec, &out]() {
      action = [path, open_spec, &out]() { return cmd_phi(*path, *open_spec, out); };
    });
  }
  {
    auto* cmd = app.add_subcommand("f-map", "the maps f and p of a space, point by point");
    auto path = std::make_shared<std::string>();
    cmd->add_option("path", *path, "space file")->required();
    cmd->callback([&action, path, &out]() {
      action = [path, &out]() { return cmd_f_map(*path, out); };
    });
  }
  {
    auto* cmd = app.add_subcommand("spectrum", "prime spectrum of a frame");
    auto path = std::make_shared<std::string>();
    cmd->add_option("path", *path, "frame or space file")->required();
    cmd->callback([&action, path, &out]() {
      action = [path, &out]() { return cmd_spectrum(*path, scott_cap_from_env(), out); };
    });
  }
  {
    auto* cmd = app.add_subcommand("enumerate", "count or list instances");
    auto n = std::make_shared<int>(-1);
    auto poset_max = std::make_shared<int>(-1);
    auto t0 = std::make_shared<bool>(false);
    auto print = std::make_shared<bool>(false);
    auto samples = std::make_shared<int>(1000);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto* n_opt = cmd->add_option("--n", *n, "topologies on exactly n labeled points");
    auto* p_opt = cmd->add_option("--poset-size", *poset_max, "frames from posets of size <= this");
    n_opt->excludes(p_opt);
    cmd->add_flag("--t0", *t0, "restrict to T0 topologies");
    cmd->add_flag("--print", *print, "print one canonical line per instance");
    cmd->add_option("--samples", *samples, "sample count at the sampled size");
    cmd->add_option("--seed", *seed, "sampling seed");
    cmd->callback([&action, n, poset_max, t0, print, samples, seed, &out]() {
      action = [n, poset_max, t0, print, samples, seed, &out]() {
        if (*n < 0 && *poset_max < 0) throw Error("one of --n or --poset-size is required");
        return cmd_enumerate(*n, *poset_max, *t0, *print, *samples, *seed, out);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("suite", "run the theorem suite and write its report");
    auto n = std::make_shared<int>(-1);
    auto poset_max = std::make_shared<int>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto samples = std::make_shared<int>(1000);
    auto props = std::make_shared<std::string>("all");
    auto r1_all = std::make_shared<bool>(false);
    auto workers = std::make_shared<int>(1);
    auto timings = std::make_shared<bool>(false);
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("--n", *n, "topologies on exactly n labeled points");
    cmd->add_option("--poset-size", *poset_max, "frames from posets of size <= this");
    cmd->add_option("--seed", *seed, "sampling seed");
    cmd->add_option("--samples", *samples, "sample count at the sampled sizes");
    cmd->add_option("--props", *props, "comma-separated P1..P12, or 'all'");
    cmd->add_flag("--r1-all", *r1_all, "quantify Eq. (R1) over all elements, not just primes");
    cmd->add_option("--workers", *workers, "evaluation threads");
    cmd->add_flag("--timings", *timings, "append per-property timing lines (non-deterministic)");
    cmd->add_option("--out", *out_path, "also write the report to this file");
    cmd->callback([&action, n, poset_max, seed, samples, props, r1_all, workers, timings,
                   out_path, &out]() {
      action = [n, poset_max, seed, samples, props, r1_all, workers, timings, out_path, &out]() {
        return cmd_suite(*n, *poset_max, *seed, *samples, *props, *r1_all, *workers, *timings,
                         *out_path, scott_cap_from_env(), out);
      };
    });
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    return action();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace locustra
