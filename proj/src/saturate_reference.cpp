// Serial pair/triple enumeration; deliberately shares nothing with the
// line-count kernels in saturate.cpp.
#include <set>
#include <stdexcept>

#include "mcf/saturate.hpp"

namespace mcf::reference {

CoverageVector coverage(const Space& space, const PointSet& S, CountingMode mode) {
  if (S.size() < 2) throw std::invalid_argument("coverage needs at least two points");
  const auto pts = S.indices();
  CoverageVector cv;
  cv.mode = mode;
  cv.value.assign(space.num_points(), 0);
  for (PointIdx p : pts) cv.value[p] = -1;
  // each pair {P,R} adds one to every external point of its line
  std::set<std::pair<PointIdx, LineIdx>> seen;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      LineIdx l = space.line_through(pts[i], pts[j]);
      for (PointIdx Q : space.line_points(l)) {
        if (S.contains(Q)) continue;
        if (mode == CountingMode::weighted)
          ++cv.value[Q];
        else if (seen.emplace(Q, l).second)
          ++cv.value[Q];
      }
    }
  return cv;
}

std::int64_t b3_count(const Space& space, const PointSet& S) {
  const auto pts = S.indices();
  const Field& F = space.field();
  std::int64_t b = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        std::vector<std::vector<Elem>> rows;
        for (auto p : {pts[i], pts[j], pts[k]}) rows.emplace_back(space.coords(p).begin(), space.coords(p).end());
        if (vector_rank(F, rows) < 3) ++b;
      }
  return b;
}

std::int64_t a3_codewords(const Space& space, const PointSet& S) {
  const auto pts = S.indices();
  const Field& F = space.field();
  const int w = space.dim() + 1;
  const Elem q = static_cast<Elem>(F.q());
  std::int64_t count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        auto hi = space.coords(pts[i]), hj = space.coords(pts[j]), hk = space.coords(pts[k]);
        for (Elem a = 1; a < q; ++a)
          for (Elem b = 1; b < q; ++b)
            for (Elem c = 1; c < q; ++c) {
              bool zero = true;
              for (int t = 0; t < w && zero; ++t)
                zero = F.add(F.add(F.mul(a, hi[t]), F.mul(b, hj[t])), F.mul(c, hk[t])) == 0;
              count += zero;
            }
      }
  return count;
}

bool is_saturating(const Space& space, const PointSet& S, std::int64_t mu, CountingMode mode) {
  if (S.size() < 2 || S.size() == space.num_points()) return false;
  if (!space.spans(S)) return false;
  auto cv = reference::coverage(space, S, mode);
  for (auto v : cv.value)
    if (v >= 0 && v < mu) return false;
  return true;
}

bool is_minimal(const Space& space, const PointSet& S, std::int64_t mu, CountingMode mode) {
  if (!reference::is_saturating(space, S, mu, mode)) throw std::invalid_argument("is_minimal needs a saturating set");
  for (PointIdx p : S.indices()) {
    PointSet rest = S;
    rest.erase(p);
    if (reference::is_saturating(space, rest, mu, mode)) return false;
  }
  return true;
}

}  // namespace mcf::reference
