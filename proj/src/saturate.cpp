#include "mcf/saturate.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

namespace mcf {

std::string to_string(CountingMode m) { return m == CountingMode::weighted ? "weighted" : "distinct"; }

CountingMode parse_counting_mode(const std::string& s) {
  if (s == "weighted") return CountingMode::weighted;
  if (s == "distinct") return CountingMode::distinct;
  throw std::invalid_argument("counting mode must be weighted or distinct");
}

std::string to_string(DensityRoute r) {
  switch (r) {
    case DensityRoute::geometric:
      return "geometric";
    case DensityRoute::formula:
      return "formula";
    case DensityRoute::coset:
      return "coset";
  }
  return "?";
}

std::size_t CoverageVector::external_count() const {
  return static_cast<std::size_t>(std::count_if(value.begin(), value.end(), [](std::int64_t v) { return v >= 0; }));
}

std::int64_t CoverageVector::min() const {
  std::int64_t m = std::numeric_limits<std::int64_t>::max();
  for (auto v : value)
    if (v >= 0) m = std::min(m, v);
  return m == std::numeric_limits<std::int64_t>::max() ? 0 : m;
}

std::int64_t CoverageVector::max() const {
  std::int64_t m = 0;
  for (auto v : value) m = std::max(m, v);
  return m;
}

std::int64_t CoverageVector::sum() const {
  std::int64_t s = 0;
  for (auto v : value)
    if (v > 0) s += v;
  return s;
}

std::vector<std::int64_t> CoverageVector::multiset() const {
  std::vector<std::int64_t> out;
  for (auto v : value)
    if (v >= 0) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
constexpr std::int64_t kParallelThreshold = 4096;

void check_universe(const Space& space, const PointSet& S) {
  if (S.universe() != space.num_points()) throw std::invalid_argument("point set is not over this space");
}
}  // namespace

std::vector<int> line_counts(const Space& space, const PointSet& S) {
  check_universe(space, S);
  const std::int64_t L = static_cast<std::int64_t>(space.num_lines());
  std::vector<int> k(L, 0);
#pragma omp parallel for schedule(static) if (L * space.q() > kParallelThreshold)
  for (std::int64_t l = 0; l < L; ++l) {
    int c = 0;
    for (PointIdx p : space.line_points(static_cast<LineIdx>(l))) c += S.contains(p);
    k[l] = c;
  }
  return k;
}

CoverageVector coverage(const Space& space, const PointSet& S, CountingMode mode) {
  check_universe(space, S);
  if (S.size() < 2) throw std::invalid_argument("coverage needs at least two points");
  auto k = line_counts(space, S);
  CoverageVector cv;
  cv.mode = mode;
  const std::int64_t n = static_cast<std::int64_t>(space.num_points());
  cv.value.assign(n, -1);
#pragma omp parallel for schedule(static) if (n * space.q() > kParallelThreshold)
  for (std::int64_t p = 0; p < n; ++p) {
    if (S.contains(static_cast<PointIdx>(p))) continue;
    std::int64_t c = 0;
    for (LineIdx l : space.lines_through(static_cast<PointIdx>(p))) {
      if (mode == CountingMode::weighted)
        c += choose2(k[l]);
      else
        c += k[l] >= 2;
    }
    cv.value[p] = c;
  }
  return cv;
}

std::int64_t b3_count(const Space& space, const PointSet& S) {
  std::int64_t b = 0;
  for (int k : line_counts(space, S)) b += choose3(k);
  return b;
}

std::pair<bool, std::int64_t> is_optimal(const Space& space, const PointSet& S) {
  if (S.size() < 2 || S.size() == space.num_points()) return {false, 0};
  auto cv = coverage(space, S, CountingMode::weighted);
  bool constant = cv.min() == cv.max() && cv.min() >= 1 && space.spans(S);
  return {constant, cv.min()};
}

bool is_minimal(const Space& space, const PointSet& S, std::int64_t mu, CountingMode mode) {
  check_universe(space, S);
  if (S.size() < 2 || !space.spans(S) || S.size() == space.num_points())
    throw std::invalid_argument("is_minimal needs a saturating set");
  auto cv = coverage(space, S, mode);
  if (cv.min() < mu) throw std::invalid_argument("is_minimal needs a saturating set");
  const auto pts = S.indices();
  const std::int64_t n = static_cast<std::int64_t>(pts.size());
  std::atomic<bool> removable{false};

  if (mode == CountingMode::weighted) {
    auto k = line_counts(space, S);
#pragma omp parallel for schedule(dynamic) if (n * static_cast<std::int64_t>(space.num_points()) > kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
      if (removable.load(std::memory_order_relaxed)) continue;
      PointIdx P = pts[i];
      PointSet rest = S;
      rest.erase(P);
      if (!space.spans(rest)) continue;
      // P becomes external; every other point sits on exactly one line through P
      std::int64_t covP = 0;
      bool ok = true;
      for (LineIdx l : space.lines_through(P)) {
        covP += choose2(k[l] - 1);
        for (PointIdx Q : space.line_points(l)) {
          if (S.contains(Q)) continue;
          if (cv.value[Q] - (k[l] - 1) < mu) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok && covP >= mu) removable.store(true, std::memory_order_relaxed);
    }
  } else {
#pragma omp parallel for schedule(dynamic) if (n * static_cast<std::int64_t>(space.num_points()) > kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
      if (removable.load(std::memory_order_relaxed)) continue;
      PointSet rest = S;
      rest.erase(pts[i]);
      if (rest.size() < 2 || !space.spans(rest)) continue;
      if (coverage(space, rest, mode).min() >= mu) removable.store(true, std::memory_order_relaxed);
    }
  }
  return !removable.load();
}

SaturationReport check_saturating(const Space& space, const PointSet& S, std::int64_t mu, CountingMode mode) {
  check_universe(space, S);
  if (mu < 1) throw std::invalid_argument("mu must be a positive integer");
  SaturationReport r;
  r.field = space.field().descriptor();
  r.q = space.q();
  r.N = space.dim();
  r.n = S.size();
  r.mu_required = mu;
  r.counting_mode = mode;
  r.m1 = space.spans(S);
  r.m2 = S.size() < space.num_points();
  if (S.size() >= 2) {
    auto cv = coverage(space, S, mode);
    r.coverage_min = cv.min();
    r.coverage_max = cv.max();
    r.coverage_sum = cv.sum();
    r.b3 = b3_count(space, S);
  }
  r.mu = r.coverage_min;
  r.m3 = !r.m2 || r.coverage_min >= mu;
  if (S.size() < 2) r.m3 = false;
  if (r.saturating()) {
    r.gamma = gamma_density(space, S, mu, DensityRoute::geometric);
    r.minimal = is_minimal(space, S, mu, mode);
  }
  // constant coverage in the requested counting mode
  if (r.m1 && r.m2 && S.size() >= 2) r.optimal = r.coverage_min == r.coverage_max && r.coverage_min >= 1;
  return r;
}

Rational gamma_formula(std::int64_t q, std::int64_t n, std::int64_t pg_points, std::int64_t b3, std::int64_t mu) {
  return Rational((q - 1) * choose2(n) - 3 * b3, mu * (pg_points - n));
}

namespace {

// syndromes of F^(N+1) coded base q, coordinate k weighted q^k
struct SyndromeSpace {
  const Field& F;
  int width;
  std::int64_t size;

  std::int64_t encode(const std::vector<Elem>& v) const {
    std::int64_t s = 0;
    for (int k = width - 1; k >= 0; --k) s = s * F.q() + v[k];
    return s;
  }
  void decode(std::int64_t s, std::vector<Elem>& v) const {
    for (int k = 0; k < width; ++k) {
      v[k] = static_cast<Elem>(s % F.q());
      s /= F.q();
    }
  }
  std::int64_t add(std::int64_t a, std::int64_t b, std::vector<Elem>& va, std::vector<Elem>& vb) const {
    decode(a, va);
    decode(b, vb);
    for (int k = 0; k < width; ++k) va[k] = F.add(va[k], vb[k]);
    return encode(va);
  }
};

// work is the number of syndrome additions the caller will perform
SyndromeSpace oracle_syndromes(const Space& space, std::int64_t work) {
  std::int64_t size = 1;
  for (int k = 0; k <= space.dim(); ++k) size *= space.q();
  if (size > (std::int64_t{1} << 24)) throw std::invalid_argument("syndrome enumeration limited to q^(N+1) <= 2^24");
  if (work > (std::int64_t{1} << 31)) throw std::invalid_argument("syndrome enumeration too large for this set");
  return {space.field(), space.dim() + 1, size};
}

// scaled[i][a-1] = syndrome of a * h_i
std::vector<std::vector<std::int64_t>> scaled_columns(const Space& space, const PointSet& S, const SyndromeSpace& sy) {
  const Field& F = space.field();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<Elem> v(sy.width);
  for (PointIdx p : S.indices()) {
    auto c = space.coords(p);
    std::vector<std::int64_t> row;
    for (Elem a = 1; a < static_cast<Elem>(F.q()); ++a) {
      for (int k = 0; k < sy.width; ++k) v[k] = F.mul(a, c[k]);
      row.push_back(sy.encode(v));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Rational gamma_coset(const Space& space, const PointSet& S, std::int64_t mu) {
  const std::int64_t m = static_cast<std::int64_t>(S.size()) * (space.q() - 1);
  auto sy = oracle_syndromes(space, m * m / 2);
  auto cols = scaled_columns(space, S, sy);
  std::vector<std::uint32_t> count(sy.size, 0);
  std::vector<char> weight1(sy.size, 0);
  for (auto& row : cols)
    for (auto s : row) weight1[s] = 1;
  std::vector<Elem> va(sy.width), vb(sy.width);
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j)
      for (auto a : cols[i])
        for (auto b : cols[j]) ++count[sy.add(a, b, va, vb)];
  std::int64_t holes = 0, total = 0;
  for (std::int64_t s = 1; s < sy.size; ++s) {
    if (weight1[s]) continue;
    if (count[s] == 0) throw std::invalid_argument("covering radius exceeds 2");
    if (count[s] < mu) throw std::invalid_argument("set is not (1,mu)-saturating");
    ++holes;
    total += count[s];
  }
  if (holes == 0) throw std::invalid_argument("code has no deep holes");
  return Rational(total, mu * holes);
}

}  // namespace

Rational gamma_density(const Space& space, const PointSet& S, std::int64_t mu, DensityRoute route) {
  check_universe(space, S);
  if (mu < 1) throw std::invalid_argument("mu must be a positive integer");
  if (S.size() < 2 || !space.spans(S) || S.size() == space.num_points())
    throw std::invalid_argument("gamma needs a (1,mu)-saturating set");
  switch (route) {
    case DensityRoute::geometric: {
      auto cv = coverage(space, S, CountingMode::weighted);
      if (cv.min() < mu) throw std::invalid_argument("set is not (1,mu)-saturating");
      return Rational(cv.sum(), mu * static_cast<std::int64_t>(cv.external_count()));
    }
    case DensityRoute::formula: {
      if (coverage(space, S, CountingMode::weighted).min() < mu)
        throw std::invalid_argument("set is not (1,mu)-saturating");
      return gamma_formula(space.q(), static_cast<std::int64_t>(S.size()),
                           static_cast<std::int64_t>(space.num_points()), b3_count(space, S), mu);
    }
    case DensityRoute::coset:
      return gamma_coset(space, S, mu);
  }
  throw std::logic_error("unknown density route");
}

std::optional<int> covering_radius(const Space& space, const PointSet& S) {
  check_universe(space, S);
  std::int64_t size = 1;
  for (int k = 0; k <= space.dim(); ++k) size *= space.q();
  auto sy = oracle_syndromes(space, size * static_cast<std::int64_t>(S.size()) * (space.q() - 1));
  auto cols = scaled_columns(space, S, sy);
  std::vector<int> dist(sy.size, -1);
  std::vector<std::int64_t> frontier{0}, next;
  dist[0] = 0;
  std::int64_t reached = 1;
  int radius = 0;
  std::vector<Elem> va(sy.width), vb(sy.width);
  while (!frontier.empty()) {
    next.clear();
    for (auto s : frontier)
      for (auto& row : cols)
        for (auto c : row) {
          auto t = sy.add(s, c, va, vb);
          if (dist[t] >= 0) continue;
          dist[t] = dist[s] + 1;
          next.push_back(t);
        }
    if (next.empty()) break;
    ++radius;
    reached += static_cast<std::int64_t>(next.size());
    frontier.swap(next);
  }
  if (reached < sy.size) return std::nullopt;
  return radius;
}

std::optional<int> minimum_distance(const Space& space, const PointSet& S) {
  check_universe(space, S);
  const auto pts = S.indices();
  const int n = static_cast<int>(pts.size());
  if (n >= 3 && b3_count(space, S) > 0) return 3;
  if (n >= 4 && space.dim() == 2) return 4;
  const Field& F = space.field();
  for (int w = 4; w <= std::min(n, space.dim() + 2); ++w) {
    std::vector<int> idx(w);
    for (int i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      std::vector<std::vector<Elem>> rows;
      for (int i : idx) rows.emplace_back(space.coords(pts[i]).begin(), space.coords(pts[i]).end());
      if (vector_rank(F, rows) < w) return w;
      int i = w - 1;
      while (i >= 0 && idx[i] == n - w + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace mcf
