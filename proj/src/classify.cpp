#include "mcf/classify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <climits>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <stdexcept>

#include "mcf/bounds.hpp"
#include "mcf/saturate.hpp"

namespace mcf::classify {

std::uint64_t collineation_group_order(int q) {
  const auto [p, h] = prime_power(q);
  const std::uint64_t Q = q;
  return static_cast<std::uint64_t>(h) * Q * Q * Q * (Q * Q - 1) * (Q * Q * Q - 1);
}

PointIdx apply_labeling(const PlaneKernel& K, const Labeling& L, PointIdx p) {
  const auto& x = K.coords(p);
  const auto& m = L.matrix;
  Elem y[3];
  for (int i = 0; i < 3; ++i)
    y[i] = K.add(K.add(K.mul(m[3 * i], x[0]), K.mul(m[3 * i + 1], x[1])), K.mul(m[3 * i + 2], x[2]));
  return K.frobenius(L.frob, K.raw_index(y[0], y[1], y[2]));
}

namespace {

using Vec3 = std::array<Elem, 3>;

Vec3 cross(const PlaneKernel& K, const Vec3& a, const Vec3& b) {
  auto d = [&](Elem x, Elem y, Elem z, Elem w) { return K.add(K.mul(x, y), K.neg(K.mul(z, w))); };
  return {d(a[1], b[2], a[2], b[1]), d(a[2], b[0], a[0], b[2]), d(a[0], b[1], a[1], b[0])};
}

Elem dot(const PlaneKernel& K, const Vec3& a, const Vec3& b) {
  return K.add(K.add(K.mul(a[0], b[0]), K.mul(a[1], b[1])), K.mul(a[2], b[2]));
}

// matrix sending f0, f1, f2, f3 to the points e0, e1, e2, (1,1,1)
std::array<Elem, 9> frame_matrix(const PlaneKernel& K, const PointIdx f[4]) {
  const Field& F = K.space().field();
  const Vec3 &a = K.coords(f[0]), &b = K.coords(f[1]), &c = K.coords(f[2]), &d = K.coords(f[3]);
  Vec3 rows[3] = {cross(K, b, c), cross(K, c, a), cross(K, a, b)};
  std::array<Elem, 9> M{};
  for (int i = 0; i < 3; ++i) {
    Elem li = F.inv(dot(K, rows[i], d));
    for (int j = 0; j < 3; ++j) M[3 * i + j] = K.mul(rows[i][j], li);
  }
  return M;
}

bool pick_frame_source(const PlaneKernel& K, Mask128 S, Mask128& X) {
  const Mask128 Sc = K.complement(S);
  const bool fs = K.has_frame(S), fc = K.has_frame(Sc);
  if (fs && (S.count() <= Sc.count() || !fc)) {
    X = S;
    return true;
  }
  if (fc) {
    X = Sc;
    return true;
  }
  return false;
}

// ordered frames of X whose invariant ranks are lexicographically least
void least_frames(const PlaneKernel& K, const std::vector<PointIdx>& order, const std::vector<int>& rank,
                  std::vector<std::array<PointIdx, 4>>& frames) {
  std::array<int, 4> best{INT_MAX, INT_MAX, INT_MAX, INT_MAX};
  PointIdx chosen[4];
  auto ok = [&](int d, PointIdx x) {
    for (int i = 0; i < d; ++i)
      if (chosen[i] == x) return false;
    if (d >= 2 && K.line(K.line_through(chosen[0], chosen[1])).test(x)) return false;
    if (d == 3 && (K.line(K.line_through(chosen[0], chosen[2])).test(x) ||
                   K.line(K.line_through(chosen[1], chosen[2])).test(x)))
      return false;
    return true;
  };
  std::function<void(int)> dfs = [&](int d) {
    for (PointIdx x : order) {
      bool tight = true;
      for (int i = 0; i < d && tight; ++i) tight = rank[chosen[i]] == best[i];
      const int r = rank[x];
      if (tight && r > best[d]) break;
      if (!ok(d, x)) continue;
      chosen[d] = x;
      if (d == 3) {
        if (!(tight && r == best[3])) {
          for (int i = 0; i < 4; ++i) best[i] = rank[chosen[i]];
          frames.clear();
        }
        frames.push_back({chosen[0], chosen[1], chosen[2], chosen[3]});
      } else {
        dfs(d + 1);
      }
    }
  };
  dfs(0);
}

}  // namespace

Canonical canonize(const PlaneKernel& K, Mask128 S, bool keep_labelings) {
  Mask128 X;
  if (!pick_frame_source(K, S, X)) throw std::invalid_argument("neither the set nor its complement contains a frame");
  const std::size_t n = K.num_points();
  const int q = K.q();

  // invariant of a point: how many lines through it meet S in k points, k = 0..q+1
  std::uint8_t k[PlaneKernel::kMaxPoints];
  K.line_counts(S, k);
  std::vector<std::uint64_t> key(n, 0);
  std::vector<PointIdx> pts;
  X.for_each([&](unsigned p) {
    std::uint64_t hist[16] = {};
    for (LineIdx l : K.lines_through(p)) ++hist[k[l]];
    std::uint64_t v = 0;
    for (int i = 0; i <= q + 1; ++i) v = v << 4 | hist[i];
    key[p] = v;
    pts.push_back(p);
  });
  std::vector<std::uint64_t> distinct;
  for (PointIdx p : pts) distinct.push_back(key[p]);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> rank(n, 0);
  for (PointIdx p : pts) rank[p] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), key[p]) - distinct.begin());
  std::stable_sort(pts.begin(), pts.end(), [&](PointIdx a, PointIdx b) { return rank[a] < rank[b]; });

  std::vector<std::array<PointIdx, 4>> frames;
  least_frames(K, pts, rank, frames);

  // map the smaller of S and its complement
  const Mask128 Sc = K.complement(S);
  const bool use_complement = Sc.count() < S.count();
  std::vector<PointIdx> src;
  (use_complement ? Sc : S).for_each([&](unsigned p) { src.push_back(p); });

  Canonical out;
  bool first = true;
  std::vector<PointIdx> img(src.size());
  for (const auto& f : frames) {
    Labeling L;
    L.matrix = frame_matrix(K, f.data());
    for (std::size_t i = 0; i < src.size(); ++i) img[i] = apply_labeling(K, L, src[i]);
    for (int e = 0; e < K.h(); ++e) {
      Mask128 m;
      for (PointIdx p : img) m.set(K.frobenius(e, p));
      if (use_complement) m = K.complement(m);
      if (first || m < out.form) {
        first = false;
        out.form = m;
        out.stabilizer = 0;
        out.labelings.clear();
      }
      if (m == out.form) {
        ++out.stabilizer;
        if (keep_labelings) {
          L.frob = e;
          out.labelings.push_back(L);
        }
      }
    }
  }
  return out;
}

PointSet canonical_form(const Space& plane, const PointSet& S) {
  PlaneKernel K(plane);
  return K.set_of(canonize(K, K.mask_of(S)).form);
}

std::uint64_t stabilizer_order(const Space& plane, const PointSet& S) {
  PlaneKernel K(plane);
  return canonize(K, K.mask_of(S)).stabilizer;
}

ClassRecord class_record(const PlaneKernel& K, Mask128 S, std::uint64_t stabilizer) {
  const std::size_t n = K.num_points();
  std::uint8_t k[PlaneKernel::kMaxPoints];
  K.line_counts(S, k);
  std::int64_t cov[PlaneKernel::kMaxPoints];
  ClassRecord r;
  r.form = S;
  r.n = S.count();
  r.stabilizer = stabilizer;
  r.cmin = LLONG_MAX;
  r.cmax = 0;
  for (std::size_t Q = 0; Q < n; ++Q) {
    if (S.test(Q)) continue;
    std::int64_t c = 0;
    for (LineIdx l : K.lines_through(Q)) c += choose2(k[l]);
    cov[Q] = c;
    r.cmin = std::min(r.cmin, c);
    r.cmax = std::max(r.cmax, c);
  }
  if (r.cmin == LLONG_MAX) r.cmin = 0;
  r.lo = 0;
  S.for_each([&](unsigned P) {
    Mask128 R = S;
    R.reset(P);
    if (!K.spans(R)) return;
    std::int64_t v = 0;
    for (LineIdx l : K.lines_through(P)) v += choose2(k[l] - 1);
    for (std::size_t Q = 0; Q < n; ++Q)
      if (!S.test(Q)) v = std::min<std::int64_t>(v, cov[Q] - (k[K.line_through(P, Q)] - 1));
    r.lo = std::max(r.lo, v);
  });
  return r;
}

bool deficit_prune(const PlaneKernel& K, Mask128 T, int r, std::int64_t mu) {
  const std::size_t n = K.num_points();
  std::uint8_t k[PlaneKernel::kMaxPoints];
  K.line_counts(T, k);
  const std::int64_t gain_pairs = static_cast<std::int64_t>(r) * (r - 1) / 2;
  int deficient = 0;
  for (std::size_t Q = 0; Q < n; ++Q) {
    if (T.test(Q)) continue;
    std::int64_t c = 0, kmax = 0;
    for (LineIdx l : K.lines_through(Q)) {
      c += choose2(k[l]);
      kmax = std::max<std::int64_t>(kmax, k[l]);
    }
    if (c + r * kmax + gain_pairs < mu && ++deficient > r) return true;
  }
  return false;
}

namespace {

Mask128 standard_frame(const PlaneKernel& K) {
  Mask128 m;
  m.set(K.raw_index(1, 0, 0));
  m.set(K.raw_index(0, 1, 0));
  m.set(K.raw_index(0, 0, 1));
  m.set(K.raw_index(1, 1, 1));
  return m;
}

// a line plus a point: the only spanning saturating set without a frame
Mask128 line_plus_point(const PlaneKernel& K) {
  Mask128 m = K.line(0);
  m.set(K.raw_index(1, 0, 0));
  return m;
}

int deletion_point(const PlaneKernel& K, Mask128 C) {
  for (int x = C.top(); x >= 0; --x) {
    if (!C.test(x)) continue;
    Mask128 R = C;
    R.reset(x);
    if (K.has_frame(R)) return x;
  }
  return -1;
}

bool record_order(const ClassRecord& a, const ClassRecord& b) {
  if (a.n != b.n) return a.n < b.n;
  return a.form < b.form;
}

}  // namespace

SearchState search(const PlaneKernel& K, const SearchOptions& opt, const SearchState* resume) {
  const int n_pts = static_cast<int>(K.num_points());
  if (K.q() < 3) throw std::invalid_argument("classification needs q >= 3");
  if (opt.max_size < 4 || opt.max_size > n_pts - 1) throw std::invalid_argument("max_size must lie in 4..q^2+q");
  if (opt.min_size > opt.max_size) throw std::invalid_argument("min_size exceeds max_size");
  const auto t0 = std::chrono::steady_clock::now();

  SearchState st;
  if (resume) {
    st = *resume;
    if (st.q != K.q() || st.mu_min != opt.mu_min || st.min_size != opt.min_size || st.max_size != opt.max_size)
      throw std::invalid_argument("checkpoint parameters differ from the requested search");
    if (st.complete) return st;
  } else {
    st.q = K.q();
    st.mu_min = opt.mu_min;
    st.min_size = opt.min_size;
    st.max_size = opt.max_size;
    st.level = 4;
    st.frontier = {canonize(K, standard_frame(K)).form};
  }

  while (st.level <= st.max_size) {
    const std::size_t F = st.frontier.size();
    std::vector<std::vector<Mask128>> kids(F);
    std::vector<std::optional<ClassRecord>> recs(F);
    std::uint64_t canon_count = 0;
    const int level = st.level;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : canon_count)
    for (std::size_t i = 0; i < F; ++i) {
      const Mask128 T = st.frontier[i];
      if (level >= st.min_size) {
        ClassRecord r = class_record(K, T, 0);
        if (r.cmin >= st.mu_min) {
          r.stabilizer = canonize(K, T).stabilizer;
          ++canon_count;
          recs[i] = r;
        }
      }
      if (level == st.max_size) continue;
      if (opt.prune && deficit_prune(K, T, st.max_size - level, st.mu_min)) continue;
      for (int p = 0; p < n_pts; ++p) {
        if (T.test(p)) continue;
        Mask128 C = T;
        C.set(p);
        Canonical cc = canonize(K, C, true);
        ++canon_count;
        const int x = deletion_point(K, cc.form);
        bool accept = false;
        for (const auto& L : cc.labelings)
          if (apply_labeling(K, L, p) == static_cast<PointIdx>(x)) {
            accept = true;
            break;
          }
        if (accept && std::find(kids[i].begin(), kids[i].end(), cc.form) == kids[i].end()) kids[i].push_back(cc.form);
      }
    }
    st.canonizations += canon_count;
    std::vector<Mask128> next;
    for (auto& v : kids) next.insert(next.end(), v.begin(), v.end());
    std::sort(next.begin(), next.end());
    if (std::adjacent_find(next.begin(), next.end()) != next.end())
      throw std::logic_error("canonical augmentation produced a class twice");
    for (auto& r : recs)
      if (r) st.records.push_back(*r);
    st.frontier = std::move(next);
    ++st.level;
    if (st.frontier.empty()) st.level = st.max_size + 1;

    if (st.level > st.max_size) break;
    if (!opt.checkpoint_path.empty()) save_checkpoint(opt.checkpoint_path, st);
    if (opt.time_budget_seconds) {
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      if (dt.count() > *opt.time_budget_seconds) return st;
    }
  }

  const int lp = K.q() + 2;
  if (lp >= st.min_size && lp <= st.max_size) {
    Mask128 m = line_plus_point(K);
    Canonical c = canonize(K, m);
    ClassRecord r = class_record(K, c.form, c.stabilizer);
    if (r.cmin >= st.mu_min) st.records.push_back(r);
  }
  std::sort(st.records.begin(), st.records.end(), record_order);
  st.frontier.clear();
  st.complete = true;
  if (!opt.checkpoint_path.empty()) save_checkpoint(opt.checkpoint_path, st);
  return st;
}

void save_checkpoint(const std::string& path, const SearchState& st) {
  nlohmann::json j;
  j["format"] = "mcf-classify-checkpoint";
  j["version"] = 1;
  j["q"] = st.q;
  j["mu_min"] = st.mu_min;
  j["min_size"] = st.min_size;
  j["max_size"] = st.max_size;
  j["level"] = st.level;
  j["complete"] = st.complete;
  j["canonizations"] = st.canonizations;
  auto& fr = j["frontier"] = nlohmann::json::array();
  for (const auto& m : st.frontier) fr.push_back(m.hex());
  auto& rs = j["records"] = nlohmann::json::array();
  for (const auto& r : st.records) rs.push_back({r.form.hex(), r.n, r.stabilizer, r.cmin, r.cmax, r.lo});
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << j.dump() << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot move checkpoint into " + path);
}

SearchState load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed checkpoint " + path + ": " + e.what());
  }
  if (j.value("format", "") != "mcf-classify-checkpoint" || j.value("version", 0) != 1)
    throw std::runtime_error("not a classify checkpoint: " + path);
  SearchState st;
  st.q = j.at("q");
  st.mu_min = j.at("mu_min");
  st.min_size = j.at("min_size");
  st.max_size = j.at("max_size");
  st.level = j.at("level");
  st.complete = j.at("complete");
  st.canonizations = j.value("canonizations", std::uint64_t{0});
  for (const auto& h : j.at("frontier")) st.frontier.push_back(Mask128::from_hex(h.get<std::string>()));
  for (const auto& r : j.at("records")) {
    ClassRecord c;
    c.form = Mask128::from_hex(r.at(0).get<std::string>());
    c.n = r.at(1);
    c.stabilizer = r.at(2);
    c.cmin = r.at(3);
    c.cmax = r.at(4);
    c.lo = r.at(5);
    st.records.push_back(c);
  }
  return st;
}

std::string to_string(Predicate p) { return p == Predicate::minimal ? "minimal" : "optimal"; }

Predicate parse_predicate(const std::string& s) {
  if (s == "minimal") return Predicate::minimal;
  if (s == "optimal") return Predicate::optimal;
  throw std::invalid_argument("predicate must be minimal or optimal");
}

Spectrum spectrum_from(const PlaneKernel& K, const SearchState& st, std::int64_t mu, Predicate pred, int min_size,
                       int max_size) {
  if (mu < st.mu_min) throw std::invalid_argument("search did not keep classes for this mu");
  if (min_size < st.min_size || max_size > st.max_size)
    throw std::invalid_argument("size range outside the searched range");
  Spectrum sp;
  sp.q = K.q();
  sp.mu = mu;
  sp.predicate = pred;
  sp.min_size = min_size;
  sp.max_size = max_size;
  sp.complete = st.complete;
  const std::uint64_t G = collineation_group_order(K.q());
  for (const auto& r : st.records) {
    if (r.n < min_size || r.n > max_size) continue;
    const bool hit = pred == Predicate::minimal ? r.minimal_for(mu) : r.optimal_for(mu);
    if (!hit) continue;
    ++sp.counts[r.n];
    EquivClass e;
    e.mask = r.form;
    e.canonical = K.set_of(r.form);
    e.n = r.n;
    e.mu = mu;
    e.stabilizer_order = r.stabilizer;
    e.orbit_size = G / r.stabilizer;
    e.minimal = r.minimal_for(mu);
    e.optimal = r.optimal_for(mu);
    e.coverage_min = r.cmin;
    e.coverage_max = r.cmax;
    sp.classes.push_back(std::move(e));
  }
  return sp;
}

std::pair<int, int> default_size_range(int q, std::int64_t mu) {
  const int lo = static_cast<int>(std::max<std::int64_t>(4, bounds::length_lower_trivial(q, mu)));
  const int hi = static_cast<int>(std::min<std::int64_t>(q + mu + 1, static_cast<std::int64_t>(q) * q + q));
  return {lo, hi};
}

Spectrum enumerate_classes(const Space& plane, std::int64_t mu, Predicate pred, std::optional<int> min_size,
                           std::optional<int> max_size, const SearchOptions& extra) {
  if (mu < 1) throw std::invalid_argument("mu must be positive");
  PlaneKernel K(plane);
  auto [dlo, dhi] = default_size_range(K.q(), mu);
  SearchOptions opt = extra;
  opt.mu_min = mu;
  opt.min_size = std::max(4, min_size.value_or(dlo));
  opt.max_size = max_size.value_or(dhi);
  SearchState resume;
  const bool have_resume = !extra.checkpoint_path.empty() && std::ifstream(extra.checkpoint_path).good();
  if (have_resume) resume = load_checkpoint(extra.checkpoint_path);
  SearchState st = search(K, opt, have_resume ? &resume : nullptr);
  return spectrum_from(K, st, mu, pred, opt.min_size, opt.max_size);
}

namespace {

bool matches(const PlaneKernel& K, Mask128 S, std::int64_t mu, Predicate pred) {
  if (!K.spans(S)) return false;
  ClassRecord r = class_record(K, S, 0);
  return pred == Predicate::minimal ? r.minimal_for(mu) : r.optimal_for(mu);
}

void check_scan(const PlaneKernel& K, int min_size, int max_size) {
  if (K.num_points() > 63) throw std::invalid_argument("subset scan supports at most 63 points");
  if (min_size < 1 || max_size >= static_cast<int>(K.num_points())) throw std::invalid_argument("bad size range");
}

Mask128 to_mask(std::uint64_t bits) { return {bits, 0}; }

// next k-subset of the same size in increasing numeric order
std::uint64_t next_subset(std::uint64_t v) {
  std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

std::map<int, std::uint64_t> count_labelled(const PlaneKernel& K, std::int64_t mu, Predicate pred, int min_size,
                                            int max_size) {
  check_scan(K, min_size, max_size);
  const int n = static_cast<int>(K.num_points());
  std::map<int, std::uint64_t> out;
  for (int k = min_size; k <= max_size; ++k) {
    // split by the lowest member; the rest is a (k-1)-subset of the higher points
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (int low = 0; low <= n - k; ++low) {
      const int rest = n - low - 1;
      if (k - 1 == 0) {
        total += matches(K, to_mask(std::uint64_t{1} << low), mu, pred);
        continue;
      }
      const std::uint64_t end = std::uint64_t{1} << rest;
      for (std::uint64_t v = (std::uint64_t{1} << (k - 1)) - 1; v < end; v = next_subset(v))
        total += matches(K, to_mask((v << (low + 1)) | (std::uint64_t{1} << low)), mu, pred);
    }
    if (total) out[k] = total;
  }
  return out;
}

namespace reference {

std::map<int, std::uint64_t> count_labelled(const PlaneKernel& K, std::int64_t mu, Predicate pred, int min_size,
                                            int max_size) {
  check_scan(K, min_size, max_size);
  const int n = static_cast<int>(K.num_points());
  std::map<int, std::uint64_t> out;
  std::vector<int> pick;
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (static_cast<int>(pick.size()) == k) {
      Mask128 m;
      for (int p : pick) m.set(p);
      if (matches(K, m, mu, pred)) ++out[k];
      return;
    }
    for (int p = start; p < n; ++p) {
      pick.push_back(p);
      rec(p + 1, k);
      pick.pop_back();
    }
  };
  for (int k = min_size; k <= max_size; ++k) rec(0, k);
  return out;
}

}  // namespace reference

}  // namespace mcf::classify
