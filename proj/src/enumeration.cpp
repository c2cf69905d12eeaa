#include "topobim/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

#include "topobim/error.hpp"
#include "topobim/fault_injection.hpp"

namespace topobim {
namespace {

constexpr int kDefaultLimit = 5;
constexpr int kHardLimit = 7;
// Above this size the plain filter over every bit pattern is too slow.
constexpr int kFilterLimit = 4;

int limit_from_env() {
  const char* raw = std::getenv("TOPOBIM_MAX_N");
  if (raw == nullptr) return kDefaultLimit;
  try {
    return std::clamp(std::stoi(raw), 0, kHardLimit);
  } catch (const std::exception&) {
    return kDefaultLimit;
  }
}

std::atomic<int>& limit_slot() {
  static std::atomic<int> limit{limit_from_env()};
  return limit;
}

void require_enumerable(int n) {
  if (n < 0 || n > enumeration_limit()) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "exhaustive enumeration is limited to " + std::to_string(enumeration_limit()) +
                    " labels, got " + std::to_string(n));
  }
}

std::vector<std::pair<int, int>> off_diagonal_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

std::vector<BoolMatrix> filter_all_patterns(int n) {
  const auto pairs = off_diagonal_pairs(n);
  const int p = static_cast<int>(pairs.size());
  std::vector<BoolMatrix> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << p); ++code) {
    BoolMatrix m = BoolMatrix::identity(n);
    for (int k = 0; k < p; ++k) {
      if ((code >> (p - 1 - k)) & 1U) m.set(pairs[static_cast<std::size_t>(k)].first,
                                             pairs[static_cast<std::size_t>(k)].second);
    }
    if (m.is_transitive()) out.push_back(m);
  }
  return out;
}

// Depth-first fill of the off-diagonal entries in row-major order, trying 0
// before 1. Each transitivity triangle is tested when its last entry is set.
class PrunedSearch {
 public:
  explicit PrunedSearch(int n) : n_(n), pairs_(off_diagonal_pairs(n)) {}

  void run(BoolMatrix m, std::array<Mask, kMaxLabels> decided, std::size_t k,
           std::vector<BoolMatrix>& out) const {
    if (k == pairs_.size()) {
      out.push_back(m);
      return;
    }
    const auto [i, j] = pairs_[k];
    decided[static_cast<std::size_t>(i)] |= bit(j);
    for (bool v : {false, true}) {
      m.set(i, j, v);
      if (consistent(m, decided, i, j)) run(m, decided, k + 1, out);
    }
  }

  std::array<Mask, kMaxLabels> initial_decided() const {
    std::array<Mask, kMaxLabels> d{};
    for (int i = 0; i < n_; ++i) d[static_cast<std::size_t>(i)] = bit(i);
    return d;
  }

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

 private:
  bool consistent(const BoolMatrix& m, const std::array<Mask, kMaxLabels>& d, int i, int j) const {
    auto known = [&d](int a, int b) { return (d[static_cast<std::size_t>(a)] >> b) & 1U; };
    if (m.get(i, j)) {
      for (int c = 0; c < n_; ++c) {
        // i <= j <= c forces i <= c; c <= i <= j forces c <= j.
        if (known(j, c) && m.get(j, c) && known(i, c) && !m.get(i, c)) return false;
        if (known(c, i) && m.get(c, i) && known(c, j) && !m.get(c, j)) return false;
      }
    } else {
      for (int b = 0; b < n_; ++b) {
        if (known(i, b) && m.get(i, b) && known(b, j) && m.get(b, j)) return false;
      }
    }
    return true;
  }

  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

std::vector<BoolMatrix> generate(int n) {
  if (n <= kFilterLimit) return filter_all_patterns(n);
  PrunedSearch search(n);
  std::vector<BoolMatrix> out;
  search.run(BoolMatrix::identity(n), search.initial_decided(), 0, out);
  return out;
}

struct RefinementKey {
  Fault fault;
  BoolMatrix relation;
  auto operator<=>(const RefinementKey&) const = default;
};

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Row-major code of the relation read through `perm`: entry (a, b) of the
// relabelled matrix is leq(perm[a], perm[b]).
std::uint64_t permuted_code(const BoolMatrix& m, const std::vector<int>& perm) {
  const int n = m.size();
  std::uint64_t code = 0;
  for (int a = 0; a < n; ++a) {
    const Mask row = m.row(perm[static_cast<std::size_t>(a)]);
    for (int b = 0; b < n; ++b) code = (code << 1) | ((row >> perm[static_cast<std::size_t>(b)]) & 1U);
  }
  return code;
}

BoolMatrix matrix_from_code(int n, std::uint64_t code) {
  BoolMatrix m(n);
  int shift = n * n;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      --shift;
      if ((code >> shift) & 1U) m.set(a, b);
    }
  }
  return m;
}

std::pair<std::uint64_t, std::uint64_t> min_code_and_stabiliser(const BoolMatrix& m) {
  const int n = m.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const std::uint64_t own = permuted_code(m, perm);
  std::uint64_t best = own;
  std::uint64_t stabiliser = 0;
  do {
    const std::uint64_t c = permuted_code(m, perm);
    best = std::min(best, c);
    if (c == own) ++stabiliser;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, stabiliser};
}

}  // namespace

int enumeration_limit() { return limit_slot().load(std::memory_order_relaxed); }

void set_enumeration_limit(int n) {
  limit_slot().store(std::clamp(n, 0, kHardLimit), std::memory_order_relaxed);
}

const std::vector<BoolMatrix>& all_relations(int n) {
  require_enumerable(n);
  static std::array<std::once_flag, kHardLimit + 1> once;
  static std::array<std::vector<BoolMatrix>, kHardLimit + 1> cache;
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(once[slot], [&] { cache[slot] = generate(n); });
  return cache[slot];
}

std::vector<BoolMatrix> all_relations_parallel(int n, int jobs) {
  require_enumerable(n);
  if (n <= 1) return all_relations(n);
  jobs = std::max(1, jobs);
  const PrunedSearch search(n);
  const std::size_t row_bits = static_cast<std::size_t>(n - 1);
  const std::size_t patterns = std::size_t{1} << row_bits;
  std::vector<std::vector<BoolMatrix>> chunks(patterns);

  auto work = [&](std::size_t first) {
    for (std::size_t p = first; p < patterns; p += static_cast<std::size_t>(jobs)) {
      BoolMatrix m = BoolMatrix::identity(n);
      auto decided = search.initial_decided();
      decided[0] = full_mask(n);
      for (std::size_t k = 0; k < row_bits; ++k) {
        if ((p >> (row_bits - 1 - k)) & 1U) m.set(0, search.pairs()[k].second);
      }
      // Row 0 alone cannot violate transitivity, so no check is needed here.
      search.run(m, decided, row_bits, chunks[p]);
    }
  };
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(work, static_cast<std::size_t>(t));
  work(0);
  for (auto& th : threads) th.join();

  std::vector<BoolMatrix> out;
  for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
  return out;
}

TopologyIterator::TopologyIterator(const LabelSet& labels)
    : labels_(labels), relations_(&all_relations(labels.size())) {}

std::optional<Topology> TopologyIterator::next() {
  if (pos_ >= relations_->size()) return std::nullopt;
  return Topology::trusted(labels_, (*relations_)[pos_++]);
}

Topology TopologyIterator::Cursor::operator*() const {
  return Topology::trusted(owner_->labels_, (*owner_->relations_)[pos_]);
}

TopologyIterator all_topologies(const LabelSet& labels) { return TopologyIterator(labels); }

std::vector<Topology> topologies_on(const LabelSet& labels) {
  std::vector<Topology> out;
  for (const BoolMatrix& m : all_relations(labels.size())) out.push_back(Topology::trusted(labels, m));
  return out;
}

std::vector<Topology> admissible_refinements(const Topology& t) {
  static std::mutex mu;
  static std::map<RefinementKey, std::vector<BoolMatrix>> cache;
  const RefinementKey key{active_fault(), t.relation()};
  std::vector<BoolMatrix> relations;
  bool cached = false;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) {
      relations = it->second;
      cached = true;
    }
  }
  if (!cached) {
    for (const BoolMatrix& m : all_relations(t.size())) {
      if (!m.is_contained_in(t.relation())) continue;
      if (is_admissible(Topology::trusted(t.labels(), m), t)) relations.push_back(m);
    }
    std::lock_guard lock(mu);
    cache.emplace(key, relations);
  }
  std::vector<Topology> out;
  out.reserve(relations.size());
  for (const BoolMatrix& m : relations) out.push_back(Topology::trusted(t.labels(), m));
  return out;
}

std::vector<Topology> topologies_between(const Topology& lower, const Topology& upper) {
  if (lower.labels() != upper.labels()) {
    throw Error(ErrorCode::kGroundSetMismatch, "bounds live on different label sets");
  }
  std::vector<Topology> out;
  for (const BoolMatrix& m : all_relations(upper.size())) {
    if (lower.relation().is_contained_in(m) && m.is_contained_in(upper.relation())) {
      out.push_back(Topology::trusted(upper.labels(), m));
    }
  }
  return out;
}

CanonicalClass canonical_form(const Topology& t) {
  const int n = t.size();
  if (n > kCanonicalLimit) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "canonical forms are limited to " + std::to_string(kCanonicalLimit) + " labels");
  }
  const auto [code, stabiliser] = min_code_and_stabiliser(t.relation());
  return CanonicalClass{Topology::trusted(LabelSet::first_n(n), matrix_from_code(n, code)),
                        factorial(n) / stabiliser};
}

std::vector<CanonicalClass> canonical_classes(int n) {
  std::map<std::uint64_t, CanonicalClass> classes;
  for (const BoolMatrix& m : all_relations(n)) {
    const auto [code, stabiliser] = min_code_and_stabiliser(m);
    if (classes.contains(code)) continue;
    classes.emplace(code, CanonicalClass{Topology::trusted(LabelSet::first_n(n), matrix_from_code(n, code)),
                                         factorial(n) / stabiliser});
  }
  std::vector<CanonicalClass> out;
  for (auto& [code, c] : classes) out.push_back(std::move(c));
  return out;
}

std::map<int, std::uint64_t> count_by_grading(int n) {
  std::map<int, std::uint64_t> histogram;
  const LabelSet labels = LabelSet::first_n(n);
  for (const BoolMatrix& m : all_relations(n)) ++histogram[grading_d(Topology::trusted(labels, m))];
  return histogram;
}

}  // namespace topobim
