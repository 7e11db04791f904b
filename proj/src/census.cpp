#include "hexcensus/census.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "hexcensus/errors.hpp"

namespace hexcensus {

namespace {

struct Tally {
  std::uint64_t total = 0;
  std::uint64_t vsym = 0;
  std::uint64_t hsym = 0;
  std::uint64_t centered = 0;
  std::uint64_t centered_vsym = 0;
  std::uint64_t centered_hsym = 0;

  Tally& operator+=(const Tally& o) {
    total += o.total;
    vsym += o.vsym;
    hsym += o.hsym;
    centered += o.centered;
    centered_vsym += o.centered_vsym;
    centered_hsym += o.centered_hsym;
    return *this;
  }
};

// Partial tiling: partner[i] is the cell matched with cell i, or -1.
struct SearchState {
  std::vector<int> partner;
  int next = 0;  // every cell before `next` is covered
  int placed = 0;
};

class Search {
 public:
  explicit Search(const HexRegion& region)
      : region_(region), size_(static_cast<int>(region.size())) {
    if (const auto& c = region.central_lozenge()) central_ = *c;
    if (const auto& m = region.vertical_mirror()) vmirror_ = &*m;
    if (const auto& m = region.horizontal_mirror()) hmirror_ = &*m;
  }

  SearchState root() const {
    SearchState s;
    s.partner.assign(static_cast<std::size_t>(size_), -1);
    advance(s);
    return s;
  }

  bool complete(const SearchState& s) const { return s.next >= size_; }

  // Children of a non-complete state, appended to `out`.
  void expand(const SearchState& s, std::vector<SearchState>& out) const {
    for (int nb : region_.neighbors(s.next)) {
      if (nb == kNoNeighbor || s.partner[static_cast<std::size_t>(nb)] != -1) continue;
      SearchState child = s;
      place(child, s.next, nb);
      out.push_back(std::move(child));
    }
  }

  void run(SearchState& s, Tally& tally) const {
    if (complete(s)) {
      record(s.partner, tally);
      return;
    }
    const int cell = s.next;
    for (int nb : region_.neighbors(cell)) {
      if (nb == kNoNeighbor || s.partner[static_cast<std::size_t>(nb)] != -1) continue;
      place(s, cell, nb);
      run(s, tally);
      s.partner[static_cast<std::size_t>(cell)] = -1;
      s.partner[static_cast<std::size_t>(nb)] = -1;
      s.next = cell;
      --s.placed;
    }
  }

  template <typename Visit>
  void walk(SearchState& s, Visit&& visit) const {
    if (complete(s)) {
      visit(s.partner);
      return;
    }
    const int cell = s.next;
    for (int nb : region_.neighbors(cell)) {
      if (nb == kNoNeighbor || s.partner[static_cast<std::size_t>(nb)] != -1) continue;
      place(s, cell, nb);
      walk(s, visit);
      s.partner[static_cast<std::size_t>(cell)] = -1;
      s.partner[static_cast<std::size_t>(nb)] = -1;
      s.next = cell;
      --s.placed;
    }
  }

 private:
  void advance(SearchState& s) const {
    while (s.next < size_ && s.partner[static_cast<std::size_t>(s.next)] != -1) ++s.next;
  }

  void place(SearchState& s, int cell, int nb) const {
    s.partner[static_cast<std::size_t>(cell)] = nb;
    s.partner[static_cast<std::size_t>(nb)] = cell;
    ++s.placed;
    advance(s);
  }

  static bool symmetric(const std::vector<int>& partner, const std::vector<int>& m) {
    for (std::size_t i = 0; i < partner.size(); ++i) {
      if (partner[static_cast<std::size_t>(m[i])] !=
          m[static_cast<std::size_t>(partner[i])]) {
        return false;
      }
    }
    return true;
  }

  void record(const std::vector<int>& partner, Tally& t) const {
    ++t.total;
    const bool centered =
        central_.right >= 0 &&
        partner[static_cast<std::size_t>(central_.right)] == central_.left;
    t.centered += centered;
    if (vmirror_ != nullptr && symmetric(partner, *vmirror_)) {
      ++t.vsym;
      t.centered_vsym += centered;
    }
    if (hmirror_ != nullptr && symmetric(partner, *hmirror_)) {
      ++t.hsym;
      t.centered_hsym += centered;
    }
  }

  const HexRegion& region_;
  int size_;
  Lozenge central_;
  const std::vector<int>* vmirror_ = nullptr;
  const std::vector<int>* hmirror_ = nullptr;
};

void check_budget(const HexSpec& spec, std::uint64_t budget) {
  const ExactInt expected = count_T(spec.a, spec.b, spec.c);
  if (expected > ExactInt(std::to_string(budget))) {
    throw ResourceError("(" + std::to_string(spec.a) + "," +
                        std::to_string(spec.b) + "," + std::to_string(spec.c) +
                        ") hexagon has " + to_string(expected) +
                        " tilings, above the enumeration budget of " +
                        std::to_string(budget));
  }
}

ExactInt to_exact(std::uint64_t v) { return ExactInt(std::to_string(v)); }

}  // namespace

unsigned default_worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("HEXCENSUS_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0 && static_cast<unsigned long>(cap) < n) {
      n = static_cast<unsigned>(cap);
    }
  }
  return n;
}

TilingCensus census(const HexSpec& spec, const CensusOptions& options) {
  check_budget(spec, options.budget);
  TilingCensus out;
  const bool has_cells = spec.a * spec.b + spec.b * spec.c + spec.c * spec.a > 0;
  if (!has_cells) {
    // Zero-area hexagon: only the empty tiling.
    out.total = 1;
    if (spec.a == spec.c) out.vsym = out.hsym = ExactInt(1);
    return out;
  }
  const HexRegion region(spec);
  const Search search(region);
  const unsigned workers = options.workers == 0 ? default_worker_count() : options.workers;

  // Shard breadth-first until there is enough independent work.
  Tally tally;
  std::vector<SearchState> frontier{search.root()};
  const std::size_t target = workers <= 1 ? 1 : 16 * static_cast<std::size_t>(workers);
  while (frontier.size() < target) {
    std::vector<SearchState> next;
    bool grew = false;
    for (SearchState& s : frontier) {
      if (search.complete(s)) {
        search.run(s, tally);
        continue;
      }
      search.expand(s, next);
      grew = true;
    }
    frontier = std::move(next);
    if (!grew || frontier.empty()) break;
  }

  std::vector<Tally> partial(workers);
  std::atomic<std::size_t> cursor{0};
  auto work = [&](unsigned w) {
    for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
      search.run(frontier[i], partial[w]);
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const Tally& p : partial) tally += p;

  out.total = to_exact(tally.total);
  if (region.vertical_mirror()) {
    out.vsym = to_exact(tally.vsym);
    out.hsym = to_exact(tally.hsym);
  }
  if (region.central_lozenge()) {
    out.centered = to_exact(tally.centered);
    if (region.vertical_mirror()) {
      out.centered_vsym = to_exact(tally.centered_vsym);
      out.centered_hsym = to_exact(tally.centered_hsym);
    }
  }
  return out;
}

void for_each_tiling(const HexRegion& region,
                     const std::function<void(const Tiling&)>& visit,
                     std::uint64_t budget) {
  check_budget(region.spec(), budget);
  const Search search(region);
  SearchState s = search.root();
  const auto& cells = region.cells();
  search.walk(s, [&](const std::vector<int>& partner) {
    Tiling t;
    for (std::size_t i = 0; i < partner.size(); ++i) {
      if (cells[i].kind == TriangleKind::kRight) {
        t.lozenges.push_back(Lozenge{static_cast<int>(i), partner[i]});
      }
    }
    visit(t);
  });
}

}  // namespace hexcensus
