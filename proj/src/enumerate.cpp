#include "locustra/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "locustra/errors.hpp"

namespace locustra {

namespace {

// Backtracking over minimal-neighborhood assignments: rows[x] is the
// least open set around point x (x itself always inside), and y in
// rows[x] forces rows[y] inside rows[x]. These assignments are exactly
// the preorders on the points; with the antisymmetry cut they are the
// posets.
void enumerate_min_neighborhoods(int n, bool antisymmetric,
                                 const std::function<void(const std::vector<Mask>&)>& emit) {
  std::vector<Mask> rows(n);
  if (n == 0) {
    emit(rows);
    return;
  }
  const auto rec = [&](auto&& self, int x) -> void {
    const Mask others = mask_all(n) & ~mask_bit(x);
    for (Mask sub = 0;; sub = (sub - others) & others) {
      const Mask cand = sub | mask_bit(x);
      bool ok = true;
      for (int j = 0; j < x && ok; ++j) {
        if (mask_test(cand, j) && !mask_subset(rows[j], cand)) ok = false;
        if (ok && mask_test(rows[j], x) && !mask_subset(cand, rows[j])) ok = false;
        if (ok && antisymmetric && mask_test(cand, j) && mask_test(rows[j], x)) ok = false;
      }
      if (ok) {
        rows[x] = cand;
        if (x + 1 == n)
          emit(rows);
        else
          self(self, x + 1);
      }
      if (sub == others) break;
    }
  };
  rec(rec, 0);
}

bool rows_consistent(const std::vector<Mask>& rows, bool antisymmetric) {
  const int n = static_cast<int>(rows.size());
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    mask_for_each(rows[x] & ~mask_bit(x), [&](int y) {
      if (!mask_subset(rows[y], rows[x])) ok = false;
      if (antisymmetric && mask_test(rows[y], x)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

FiniteSpace space_from_min_neighborhoods(const std::vector<Mask>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Mask> opens;
  const Mask full = mask_all(n);
  for (Mask u = 0;; ++u) {
    bool open = true;
    mask_for_each(u, [&](int x) {
      if (!mask_subset(rows[x], u)) open = false;
    });
    if (open) opens.push_back(u);
    if (u == full) break;
  }
  return FiniteSpace::from_opens(n, std::move(opens));
}

std::vector<Mask> downset_family(const FinitePoset& p) {
  std::vector<Mask> family;
  const Mask full = mask_all(p.size());
  for (Mask u = 0;; ++u) {
    bool down = true;
    mask_for_each(u, [&](int x) {
      if (!mask_subset(p.down(x), u)) down = false;
    });
    if (down) family.push_back(u);
    if (u == full) break;
  }
  std::sort(family.begin(), family.end(), mask_less);
  return family;
}

FiniteFrame frame_from_family(const std::vector<Mask>& family) {
  return frame_from_lattice(lattice_from_set_family(family));
}

// Built frames are compared by their order rows: distinct labeled posets
// can produce byte-identical frames once the down-set family is put in
// canonical order, and such copies are one instance, not two.
std::vector<Mask> structure_key(const FiniteFrame& f) {
  std::vector<Mask> key(f.size());
  for (int i = 0; i < f.size(); ++i) key[i] = f.up(i);
  return key;
}

// Hand-rolled bounded draw; keeps sampled corpora identical across
// standard libraries.
Mask random_bits(std::mt19937_64& rng) { return rng(); }

constexpr int kSampleAttemptFactor = 200000;

}  // namespace

std::vector<FiniteSpace> enumerate_topologies(int n, bool t0_only) {
  if (n < 0) throw Error("negative point count");
  if (n > kMaxEnumeratedSpacePoints)
    throw CapExceeded(n <= kMaxSampledSpacePoints
                          ? "topologies on 5 points are sampled, not enumerated"
                          : "topology enumeration is capped at 4 points");
  std::vector<FiniteSpace> out;
  enumerate_min_neighborhoods(n, t0_only, [&](const std::vector<Mask>& rows) {
    out.push_back(space_from_min_neighborhoods(rows));
  });
  return out;
}

std::vector<FiniteSpace> sample_topologies(int n, int count, std::uint64_t seed, bool t0_only) {
  if (n < 0) throw Error("negative point count");
  if (n > kMaxSampledSpacePoints) throw CapExceeded("topology sampling is capped at 5 points");
  if (count < 0) throw Error("negative sample count");
  std::mt19937_64 rng(seed);
  std::vector<FiniteSpace> out;
  std::set<std::vector<Mask>> seen;
  std::vector<Mask> rows(n);
  long long attempts = 0;
  const long long limit =
      static_cast<long long>(kSampleAttemptFactor) * std::max(count, 1);
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > limit)
      throw Error("sampling did not reach " + std::to_string(count) + " distinct topologies");
    for (int x = 0; x < n; ++x)
      rows[x] = (random_bits(rng) & mask_all(n) & ~mask_bit(x)) | mask_bit(x);
    if (!rows_consistent(rows, t0_only)) continue;
    if (!seen.insert(rows).second) continue;
    out.push_back(space_from_min_neighborhoods(rows));
  }
  return out;
}

std::vector<FinitePoset> enumerate_posets(int n) {
  if (n < 0) throw Error("negative element count");
  if (n > kMaxEnumeratedPosetSize)
    throw CapExceeded("poset enumeration is capped at " +
                      std::to_string(kMaxEnumeratedPosetSize) + " elements");
  std::vector<FinitePoset> out;
  enumerate_min_neighborhoods(n, true, [&](const std::vector<Mask>& rows) {
    out.push_back(FinitePoset::from_up_rows(rows));
  });
  return out;
}

std::vector<FrameInstance> enumerate_frames(int max_poset_size) {
  if (max_poset_size < 0) throw Error("negative poset size");
  if (max_poset_size > kMaxEnumeratedPosetSize)
    throw CapExceeded(max_poset_size <= kMaxSampledPosetSize
                          ? "size-6 posets are sampled, not enumerated"
                          : "poset enumeration is capped at 5 elements");
  std::vector<FrameInstance> out;
  std::set<std::vector<Mask>> seen;
  const auto add = [&](const std::vector<Mask>& family, std::string provenance) {
    FiniteFrame frame = frame_from_family(family);
    if (!seen.insert(structure_key(frame)).second) return;
    out.push_back(FrameInstance{std::move(frame), std::move(provenance)});
  };

  for (int size = 0; size <= max_poset_size; ++size) {
    int idx = 0;
    for (const FinitePoset& p : enumerate_posets(size))
      add(downset_family(p), "poset:n=" + std::to_string(size) + ":idx=" + std::to_string(idx++));
  }

  // Hand-registered shapes past the generated sizes; duplicates of
  // generated frames are dropped by the family key.
  for (int len = 2; len <= 9; ++len) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 2 < len; ++i) covers.emplace_back(i, i + 1);
    add(downset_family(poset_from_covers(len - 1, covers)), "chain:len=" + std::to_string(len));
  }
  for (int dim = 0; dim <= 5; ++dim)
    add(downset_family(poset_from_covers(dim, {})), "cube:dim=" + std::to_string(dim));
  return out;
}

std::vector<FrameInstance> sample_frames(int poset_size, int count, std::uint64_t seed) {
  if (poset_size < 0) throw Error("negative poset size");
  if (poset_size > kMaxSampledPosetSize)
    throw CapExceeded("poset sampling is capped at " + std::to_string(kMaxSampledPosetSize) +
                      " elements");
  if (count < 0) throw Error("negative sample count");
  std::mt19937_64 rng(seed);
  std::vector<FrameInstance> out;
  std::set<std::vector<Mask>> seen;
  std::vector<Mask> rows(poset_size);
  long long attempts = 0;
  const long long limit =
      static_cast<long long>(kSampleAttemptFactor) * std::max(count, 1);
  int idx = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > limit)
      throw Error("sampling did not reach " + std::to_string(count) + " distinct posets");
    for (int x = 0; x < poset_size; ++x)
      rows[x] = (random_bits(rng) & mask_all(poset_size) & ~mask_bit(x)) | mask_bit(x);
    if (!rows_consistent(rows, true)) continue;
    FiniteFrame frame = frame_from_family(downset_family(FinitePoset::from_up_rows(rows)));
    if (!seen.insert(structure_key(frame)).second) continue;
    out.push_back(FrameInstance{std::move(frame),
                                "sample:poset-n=" + std::to_string(poset_size) +
                                    ":seed=" + std::to_string(seed) +
                                    ":idx=" + std::to_string(idx++)});
  }
  return out;
}

}  // namespace locustra
