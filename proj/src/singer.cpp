#include "mcf/singer.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcf/saturate.hpp"

namespace mcf::singer {

namespace {

std::int64_t plane_points(int q) { return static_cast<std::int64_t>(q) * q + q + 1; }

void check_t(int q, int t) {
  if (t < 1 || plane_points(q) % t != 0) throw std::invalid_argument("t must divide q^2+q+1");
}

// y = C x for the companion matrix of the Singer cycle
void step(const Field& F, const Collineation& C, Elem x[3]) {
  Elem y[3];
  for (int i = 0; i < 3; ++i) {
    Elem s = 0;
    for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(C.matrix[i * 3 + k], x[k]));
    y[i] = s;
  }
  std::copy(y, y + 3, x);
}

}  // namespace

SingerPartition singer_partition(const Space& plane, int t) {
  if (plane.dim() != 2) throw std::invalid_argument("Singer partitions are defined on planes");
  const int q = plane.q();
  check_t(q, t);
  const Field& F = plane.field();
  const auto C = singer_generator(F);
  const std::int64_t n = plane_points(q);

  SingerPartition part;
  part.q = q;
  part.t = t;
  part.d = n / t;
  part.point_orbits.assign(t, {});
  part.line_orbits.assign(t, {});
  part.point_label.assign(n, -1);
  part.line_label.assign(n, -1);

  // walk the point 0 and two points of line 0 around the cycle together
  auto l0 = plane.line_points(0);
  Elem x[3], a[3], b[3];
  for (int i = 0; i < 3; ++i) {
    x[i] = plane.coords(0)[i];
    a[i] = plane.coords(l0[0])[i];
    b[i] = plane.coords(l0[1])[i];
  }
  for (std::int64_t k = 0; k < n; ++k) {
    const int label = static_cast<int>(k % t);
    PointIdx p = plane.index_of(std::span<const Elem>(x, 3));
    LineIdx l = plane.line_through(plane.index_of(std::span<const Elem>(a, 3)), plane.index_of(std::span<const Elem>(b, 3)));
    if (part.point_label[p] != -1 || part.line_label[l] != -1) throw std::logic_error("Singer walk revisited an element");
    part.point_label[p] = label;
    part.line_label[l] = label;
    step(F, C, x);
    step(F, C, a);
    step(F, C, b);
  }
  for (std::size_t p = 0; p < part.point_label.size(); ++p) part.point_orbits[part.point_label[p]].push_back(p);
  for (std::size_t l = 0; l < part.line_label.size(); ++l) part.line_orbits[part.line_label[l]].push_back(l);

  part.weights.assign(t, 0);
  for (PointIdx p : l0) ++part.weights[part.point_label[p]];
  return part;
}

std::vector<int> singer_weights(const Field& F, int t) {
  const int q = F.q();
  check_t(q, t);
  const auto C = singer_generator(F);
  const std::int64_t n = plane_points(q);
  std::vector<int> w(t, 0);
  Elem x[3] = {0, 0, 1};  // point 0
  for (std::int64_t k = 0; k < n; ++k) {
    if (x[0] == 0) ++w[k % t];  // line 0 is x0 = 0
    step(F, C, x);
  }
  return w;
}

BdcEvaluation bdc_evaluate(std::span<const int> w, int m) {
  const int t = static_cast<int>(w.size());
  if (m < 1 || m > t - 1) throw std::invalid_argument("m must satisfy 1 <= m <= t-1");
  auto at = [&](std::int64_t i) { return static_cast<std::int64_t>(w[((i % t) + t) % t]); };

  BdcEvaluation ev;
  ev.t = t;
  ev.m = m;
  std::int64_t total = 0;
  for (int x : w) total += x;
  ev.q = static_cast<int>(total - 1);
  if (ev.q >= 1 && plane_points(ev.q) % t == 0) {
    ev.d = plane_points(ev.q) / t;
    ev.set_size = m * ev.d;
  }

  // wm[u]: points of P_0..P_{m-1} on a line of orbit u
  std::vector<std::int64_t> wm(t, 0);
  for (int u = 0; u < t; ++u)
    for (int j = 0; j < m; ++j) wm[u] += at(j - u);

  std::int64_t sum = 0;
  for (int v = m; v < t; ++v) {
    std::int64_t Nv = 0;
    for (int u = 0; u < t; ++u) Nv += at(v - u) * choose2(wm[u]);
    ev.N_values.push_back(Nv);
    sum += Nv;
  }
  ev.mu = *std::min_element(ev.N_values.begin(), ev.N_values.end());
  if (ev.mu > 0) ev.gamma = Rational(sum, static_cast<std::int64_t>(t - m) * ev.mu);
  return ev;
}

PointSet orbit_union_set(const Space& plane, const SingerPartition& part, int m) {
  if (m < 1 || m > part.t - 1) throw std::invalid_argument("m must satisfy 1 <= m <= t-1");
  PointSet S = plane.empty_set();
  for (int j = 0; j < m; ++j)
    for (PointIdx p : part.point_orbits[j]) S.insert(p);
  return S;
}

std::vector<int> weight_class(std::span<const int> w) {
  const std::int64_t t = static_cast<std::int64_t>(w.size());
  std::vector<int> best(w.begin(), w.end()), cand(t);
  for (int dir : {1, -1})
    for (std::int64_t s = 0; s < t; ++s) {
      for (std::int64_t i = 0; i < t; ++i) cand[i] = w[(((s + dir * i) % t) + t) % t];
      best = std::min(best, cand);
    }
  return best;
}

std::vector<int> orbit_counts(int q) {
  const std::int64_t n = plane_points(q);
  std::vector<int> out;
  for (std::int64_t t = 2; t < n; ++t)
    if (n % t == 0) out.push_back(static_cast<int>(t));
  return out;
}

std::optional<std::int64_t> density_margin(const Rational& gamma, int q) {
  // gamma - 1 = e / f; c <= f / (e q)
  std::int64_t e = gamma.num() - gamma.den(), f = gamma.den();
  if (e <= 0) return std::nullopt;
  std::int64_t c = f / (e * q);
  if (c < 1) return std::nullopt;
  return c;
}

}  // namespace mcf::singer
