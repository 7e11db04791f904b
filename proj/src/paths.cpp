#include "hexcensus/paths.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "hexcensus/errors.hpp"

namespace hexcensus {

namespace {

const ExactRational& lookup(const std::map<Edge, ExactRational>& m, const Edge& e) {
  static const ExactRational one = 1;
  const auto it = m.find(e);
  return it == m.end() ? one : it->second;
}

const ExactRational& lookup(const std::map<Point, ExactRational>& m, Point p) {
  static const ExactRational one = 1;
  const auto it = m.find(p);
  return it == m.end() ? one : it->second;
}

// Occupancy over the bounding box of a set of points.
class Grid {
 public:
  explicit Grid(const std::vector<Point>& pts) {
    lo_ = hi_ = pts.front();
    for (Point p : pts) {
      lo_.x = std::min(lo_.x, p.x);
      lo_.y = std::min(lo_.y, p.y);
      hi_.x = std::max(hi_.x, p.x);
      hi_.y = std::max(hi_.y, p.y);
    }
    width_ = hi_.x - lo_.x + 1;
    cells_.assign(static_cast<std::size_t>(width_ * (hi_.y - lo_.y + 1)), 0);
  }
  char& at(Point p) {
    return cells_[static_cast<std::size_t>((p.y - lo_.y) * width_ + (p.x - lo_.x))];
  }

 private:
  Point lo_, hi_;
  long width_ = 0;
  std::vector<char> cells_;
};

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : left_(limit) {}
  void spend() {
    if (left_ == 0) throw ResourceError("path search budget exceeded");
    --left_;
  }

 private:
  std::uint64_t left_;
};

int permutation_sign(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  return sign_power(inversions);
}

class FamilySearch {
 public:
  FamilySearch(const PathConfig& config, std::vector<Point> sources,
               std::vector<Point> targets, Grid& grid, Budget& budget)
      : config_(config), sources_(std::move(sources)), targets_(std::move(targets)),
        grid_(grid), budget_(budget) {}

  ExactRational families(std::size_t k) {
    if (k == sources_.size()) return 1;
    const Point s = sources_[k];
    const Point t = targets_[k];
    if (t.x < s.x || t.y < s.y || grid_.at(s)) return 0;
    grid_.at(s) = 1;
    ExactRational out = extend(k, s, ExactRational(1));
    grid_.at(s) = 0;
    return out;
  }

 private:
  ExactRational extend(std::size_t k, Point cur, const ExactRational& weight) {
    budget_.spend();
    const Point t = targets_[k];
    if (cur == t) {
      if (weight == 0) return 0;
      const ExactRational rest = families(k + 1);
      return rest == 0 ? ExactRational(0) : weight * lookup(config_.endpoint_weights, t) * rest;
    }
    ExactRational sum = 0;
    for (Step step : {Step::kRight, Step::kUp}) {
      const Point next = step == Step::kRight ? Point{cur.x + 1, cur.y}
                                              : Point{cur.x, cur.y + 1};
      if (next.x > t.x || next.y > t.y || grid_.at(next)) continue;
      grid_.at(next) = 1;
      sum += extend(k, next, weight * lookup(config_.edge_weights, Edge{cur, step}));
      grid_.at(next) = 0;
    }
    return sum;
  }

  const PathConfig& config_;
  std::vector<Point> sources_;
  std::vector<Point> targets_;
  Grid& grid_;
  Budget& budget_;
};

}  // namespace

ExactInt h_count(Point a, Point b) {
  const long dx = b.x - a.x;
  const long dy = b.y - a.y;
  if (dx < 0 || dy < 0) return 0;
  return binomial(dx + dy, dx);
}

ExactRational h_weighted(const PathConfig& config, Point a, Point b) {
  const long dx = b.x - a.x;
  const long dy = b.y - a.y;
  if (dx < 0 || dy < 0) return 0;
  // w[i][j]: weighted count of paths from a to a + (i, j).
  std::vector<std::vector<ExactRational>> w(
      static_cast<std::size_t>(dx + 1), std::vector<ExactRational>(static_cast<std::size_t>(dy + 1)));
  w[0][0] = 1;
  for (long i = 0; i <= dx; ++i) {
    for (long j = 0; j <= dy; ++j) {
      if (i == 0 && j == 0) continue;
      ExactRational v = 0;
      if (i > 0) {
        v += w[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] *
             lookup(config.edge_weights, Edge{{a.x + i - 1, a.y + j}, Step::kRight});
      }
      if (j > 0) {
        v += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] *
             lookup(config.edge_weights, Edge{{a.x + i, a.y + j - 1}, Step::kUp});
      }
      w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(v);
    }
  }
  return w[static_cast<std::size_t>(dx)][static_cast<std::size_t>(dy)] *
         lookup(config.endpoint_weights, b);
}

SkewMatrix path_matrix(const PathConfig& config) {
  const std::size_t p = config.starts.size();
  const std::size_t q = config.forced.size();
  const std::size_t r = config.free_ends.size();
  std::vector<std::vector<ExactRational>> h(p, std::vector<ExactRational>(r));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t s = 0; s < r; ++s)
      h[i][s] = h_weighted(config, config.starts[i], config.free_ends[s]);
  return SkewMatrix(p + q, [&](std::size_t i, std::size_t j) -> ExactRational {
    if (i >= p) return 0;
    if (j >= p) return h_weighted(config, config.starts[i], config.forced[j - p]);
    ExactRational sum = 0;
    for (std::size_t s = 0; s < r; ++s)
      for (std::size_t t = s + 1; t < r; ++t)
        sum += h[i][s] * h[j][t] - h[j][s] * h[i][t];
    return sum;
  });
}

ExactRational stembridge_pf(const PathConfig& config) {
  const std::size_t p = config.starts.size();
  const std::size_t q = config.forced.size();
  if ((p + q) % 2 != 0) {
    throw ArgumentError("p + q must be even; add a phantom vertex");
  }
  const long lq = static_cast<long>(q);
  const long pairs = lq * (lq - 1) / 2;
  return sign_power(pairs) * pf(path_matrix(config));
}

ExactRational signed_enumeration(const PathConfig& config, std::uint64_t budget) {
  const std::size_t p = config.starts.size();
  const std::size_t q = config.forced.size();
  const std::size_t r = config.free_ends.size();
  if (q > p || p - q > r) return 0;
  if (p == 0) return 1;

  std::vector<Point> all = config.starts;
  all.insert(all.end(), config.forced.begin(), config.forced.end());
  all.insert(all.end(), config.free_ends.begin(), config.free_ends.end());
  Grid grid(all);
  Budget spent(budget);

  // Increasing choices of p - q free endpoints, as a selection mask.
  std::vector<char> pick(r, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(p - q), 1);
  ExactRational total = 0;
  do {
    std::vector<Point> targets = config.forced;
    for (std::size_t s = 0; s < r; ++s)
      if (pick[s]) targets.push_back(config.free_ends[s]);
    std::vector<std::size_t> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<Point> sources(p);
      for (std::size_t k = 0; k < p; ++k) sources[k] = config.starts[perm[k]];
      FamilySearch search(config, sources, targets, grid, spent);
      const ExactRational gf = search.families(0);
      if (gf != 0) total += permutation_sign(perm) * gf;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

namespace {

class SymmetricPathCounter {
 public:
  SymmetricPathCounter(long paths, long top, long hit, std::uint64_t budget)
      : paths_(paths), top_(top), hit_(hit), budget_(budget),
        occupied_(static_cast<std::size_t>((paths + 1) * (top + 2)), 0) {}

  std::uint64_t count() { return place(1, false); }

 private:
  char& occ(long x, long y) {
    return occupied_[static_cast<std::size_t>((x + paths_) * (top_ + 2) + y)];
  }

  std::uint64_t place(long i, bool hit) {
    if (i > paths_) return hit ? 1 : 0;
    const long x = -i;
    const long y = i;
    if (y > top_ || occ(x, y)) return 0;
    occ(x, y) = 1;
    const std::uint64_t n = walk(i, x, y, hit);
    occ(x, y) = 0;
    return n;
  }

  std::uint64_t walk(long i, long x, long y, bool hit) {
    budget_.spend();
    std::uint64_t n = 0;
    if (x == -1) n += place(i + 1, hit || y == hit_);
    if (x < -1 && !occ(x + 1, y)) {
      occ(x + 1, y) = 1;
      n += walk(i, x + 1, y, hit);
      occ(x + 1, y) = 0;
    }
    if (y < top_ && !occ(x, y + 1)) {
      occ(x, y + 1) = 1;
      n += walk(i, x, y + 1, hit);
      occ(x, y + 1) = 0;
    }
    return n;
  }

  long paths_;
  long top_;
  long hit_;
  Budget budget_;
  std::vector<char> occupied_;
};

}  // namespace

ExactInt sym_path_census(long n, long x, Parity parity, std::uint64_t budget) {
  if (n < 0 || x < 0) throw DomainError("path census needs n, x >= 0");
  if (parity == Parity::kEven && n < 1) throw DomainError("even path census needs n >= 1");
  const long paths = parity == Parity::kOdd ? 2 * n + 1 : 2 * n;
  SymmetricPathCounter counter(paths, 2 * x + 2 * n + 1, x + n + 1, budget);
  return ExactInt(std::to_string(counter.count()));
}

PathConfig centered_sym_path_config(long n, long x, Parity parity, SignScheme scheme) {
  if (n < 0 || x < 0) throw DomainError("path configuration needs n, x >= 0");
  if (parity == Parity::kEven && n < 1) throw DomainError("even configuration needs n >= 1");
  const long paths = parity == Parity::kOdd ? 2 * n + 1 : 2 * n;
  const long hit = n + x + 1;
  const long top = 2 * x + 2 * n + 1;
  PathConfig c;
  // The bottom start is moved to (-1, 0) so that it never yields an empty
  // path; its paths still reach exactly the same endpoints.
  c.starts.push_back({-1, 0});
  for (long i = 2; i <= paths; ++i) c.starts.push_back({-i, i});
  c.forced.push_back({-1, hit});
  for (long j = 1; j <= top; ++j)
    if (j != hit) c.free_ends.push_back({-1, j});
  if (parity == Parity::kEven) {
    c.starts.push_back({0, -1});
    c.free_ends.push_back({0, -1});
  }
  if (scheme == SignScheme::kEndpoint) {
    for (long j = 1; j < hit; ++j) c.endpoint_weights[{-1, j}] = -1;
  } else {
    // Signs multiply: for hit == 1 the first and last edge coincide.
    auto negate = [&c](const Edge& e) {
      auto [it, inserted] = c.edge_weights.try_emplace(e, 1);
      it->second = -it->second;
    };
    negate(Edge{{-1, 0}, Step::kUp});
    for (long j = 2; j < hit; ++j) negate(Edge{{-2, j}, Step::kRight});
    negate(Edge{{-1, hit - 1}, Step::kUp});
  }
  return c;
}

PathConfig random_small_config(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, 2);
  std::uniform_int_distribution<int> starts_dist(1, 3);
  std::uniform_int_distribution<int> coin(0, 4);
  std::uniform_int_distribution<int> extra(0, 3);
  const int p = starts_dist(rng);
  std::uniform_int_distribution<int> forced_dist(0, p);
  int q = forced_dist(rng);
  if ((p + q) % 2 != 0) q = q > 0 ? q - 1 : q + 1;
  const int r = p - q + extra(rng);

  std::vector<Point> used;
  auto fresh = [&](long shift) {
    for (;;) {
      const Point pt{coord(rng) + shift, coord(rng) + shift};
      if (std::find(used.begin(), used.end(), pt) == used.end()) {
        used.push_back(pt);
        return pt;
      }
    }
  };
  PathConfig c;
  for (int i = 0; i < p; ++i) c.starts.push_back(fresh(0));
  for (int i = 0; i < q; ++i) c.forced.push_back(fresh(2));
  for (int i = 0; i < r; ++i) c.free_ends.push_back(fresh(2));
  std::sort(c.free_ends.begin(), c.free_ends.end());
  for (long x = 0; x <= 4; ++x)
    for (long y = 0; y <= 4; ++y)
      for (Step s : {Step::kRight, Step::kUp})
        if (coin(rng) == 0) c.edge_weights[Edge{{x, y}, s}] = -1;
  return c;
}

}  // namespace hexcensus
