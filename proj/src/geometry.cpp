#include "mcf/geometry.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace mcf {

std::uint64_t pg_size(int N, std::uint64_t q) {
  std::uint64_t s = 0, pw = 1;
  for (int i = 0; i <= N; ++i) {
    s += pw;
    pw *= q;
  }
  return s;
}

std::vector<Elem> point_coordinates(int N, int q, PointIdx idx) {
  std::vector<Elem> x(N + 1, 0);
  int pos = 0;
  // skip leading zero coordinates: the first pg_size(N-pos-1) indices have x_pos = 0
  while (pos < N && idx < pg_size(N - pos - 1, q)) ++pos;
  idx -= static_cast<PointIdx>(pg_size(N - pos - 1, q));
  x[pos] = 1;
  for (int k = N; k > pos; --k) {
    x[k] = idx % q;
    idx /= q;
  }
  return x;
}

PointIdx point_index(int N, int q, std::span<const Elem> v) {
  int pos = 0;
  while (pos <= N && v[pos] == 0) ++pos;
  if (pos > N || v[pos] != 1) throw std::invalid_argument("coordinates are not normalized");
  std::uint64_t tail = 0;
  for (int k = pos + 1; k <= N; ++k) tail = tail * q + v[k];
  return static_cast<PointIdx>(pg_size(N - pos - 1, q) + tail);
}

bool normalize(const Field& F, std::span<Elem> v) {
  std::size_t pos = 0;
  while (pos < v.size() && v[pos] == 0) ++pos;
  if (pos == v.size()) return false;
  if (v[pos] != 1) {
    Elem s = F.inv(v[pos]);
    for (std::size_t k = pos; k < v.size(); ++k) v[k] = F.mul(v[k], s);
  }
  return true;
}

int vector_rank(const Field& F, std::vector<std::vector<Elem>> rows) {
  if (rows.empty()) return 0;
  std::size_t width = rows[0].size();
  int r = 0;
  for (std::size_t c = 0; c < width && r < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Elem s = F.inv(rows[r][c]);
    for (std::size_t k = c; k < width; ++k) rows[r][k] = F.mul(rows[r][k], s);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      Elem f = rows[i][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < width; ++k) rows[i][k] = F.sub(rows[i][k], F.mul(f, rows[r][k]));
    }
    ++r;
  }
  return r;
}

namespace {

// reduced row echelon form of two independent vectors; both rows come out normalized
void rref2(const Field& F, std::vector<Elem>& a, std::vector<Elem>& b) {
  std::size_t n = a.size();
  std::size_t i = 0;
  while (i < n && a[i] == 0 && b[i] == 0) ++i;
  if (a[i] == 0) std::swap(a, b);
  normalize(F, a);
  Elem f = b[i];
  if (f != 0)
    for (std::size_t k = i; k < n; ++k) b[k] = F.sub(b[k], F.mul(f, a[k]));
  if (!normalize(F, b)) throw std::invalid_argument("line through a point and itself");
  std::size_t j = i + 1;
  while (b[j] == 0) ++j;
  Elem g = a[j];
  if (g != 0)
    for (std::size_t k = j; k < n; ++k) a[k] = F.sub(a[k], F.mul(g, b[k]));
}

}  // namespace

Space::Space(int N, FieldPtr F) : N_(N), F_(std::move(F)) {
  if (N < 2) throw std::invalid_argument("projective dimension must be >= 2");
  const int q = F_->q();
  std::uint64_t np = pg_size(N, q);
  std::uint64_t lpp = pg_size(N - 1, q);
  if (np * lpp > kMaxIncidences) throw std::invalid_argument("space exceeds the supported scale");
  n_points_ = np;
  lines_per_point_ = lpp;
  n_lines_ = np * lpp / (q + 1);

  coords_.resize(n_points_ * (N + 1));
  for (PointIdx i = 0; i < n_points_; ++i) {
    auto c = point_coordinates(N, q, i);
    std::copy(c.begin(), c.end(), coords_.begin() + static_cast<std::size_t>(i) * (N + 1));
  }

  // lines from their RREF generator pairs: pivots i < j, free entries to the right
  std::vector<std::vector<PointIdx>> lines;
  std::vector<std::uint64_t> keys;
  lines.reserve(n_lines_);
  keys.reserve(n_lines_);
  std::vector<Elem> r1(N + 1), r2(N + 1), v(N + 1);
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      std::vector<int> free_pos;
      for (int k = i + 1; k <= N; ++k)
        if (k != j) free_pos.push_back(k);
      for (int k = j + 1; k <= N; ++k) free_pos.push_back(N + 1 + k);
      std::vector<Elem> digits(free_pos.size(), 0);
      while (true) {
        std::fill(r1.begin(), r1.end(), 0);
        std::fill(r2.begin(), r2.end(), 0);
        r1[i] = 1;
        r2[j] = 1;
        for (std::size_t f = 0; f < free_pos.size(); ++f) {
          if (free_pos[f] <= N)
            r1[free_pos[f]] = digits[f];
          else
            r2[free_pos[f] - N - 1] = digits[f];
        }
        std::vector<PointIdx> pts;
        pts.reserve(q + 1);
        pts.push_back(point_index(N, q, r2));
        for (Elem lam = 0; lam < static_cast<Elem>(q); ++lam) {
          for (int k = 0; k <= N; ++k) v[k] = F_->add(r1[k], F_->mul(lam, r2[k]));
          pts.push_back(point_index(N, q, v));
        }
        std::sort(pts.begin(), pts.end());
        lines.push_back(std::move(pts));
        keys.push_back(line_key(r1, r2));
        std::size_t f = 0;
        while (f < digits.size() && ++digits[f] == static_cast<Elem>(q)) digits[f++] = 0;
        if (f == digits.size()) break;
      }
    }
  }
  if (lines.size() != n_lines_) throw std::logic_error("line enumeration count mismatch");

  std::vector<LineIdx> order(n_lines_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](LineIdx a, LineIdx b) { return lines[a] < lines[b]; });
  line_pts_.resize(n_lines_ * (q + 1));
  key_to_line_.reserve(n_lines_);
  for (LineIdx l = 0; l < n_lines_; ++l) {
    std::copy(lines[order[l]].begin(), lines[order[l]].end(), line_pts_.begin() + static_cast<std::size_t>(l) * (q + 1));
    key_to_line_.emplace(keys[order[l]], l);
  }

  through_.resize(n_points_ * lines_per_point_);
  std::vector<std::size_t> fill(n_points_, 0);
  for (LineIdx l = 0; l < n_lines_; ++l)
    for (PointIdx p : line_points(l)) through_[static_cast<std::size_t>(p) * lines_per_point_ + fill[p]++] = l;

  if (N == 2 && n_points_ <= 2048) {
    pair_table_.assign(n_points_ * n_points_, 0);
    for (LineIdx l = 0; l < n_lines_; ++l) {
      auto pts = line_points(l);
      for (PointIdx a : pts)
        for (PointIdx b : pts) pair_table_[static_cast<std::size_t>(a) * n_points_ + b] = l;
    }
  }
}

std::uint64_t Space::line_key(std::span<const Elem> a, std::span<const Elem> b) const {
  return (static_cast<std::uint64_t>(point_index(N_, q(), a)) << 32) | point_index(N_, q(), b);
}

PointIdx Space::index_of(std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != N_ + 1) throw std::invalid_argument("coordinate vector has the wrong length");
  std::vector<Elem> w(v.begin(), v.end());
  for (Elem x : w)
    if (x >= static_cast<Elem>(q())) throw std::invalid_argument("coordinate outside the field");
  if (!normalize(*F_, w)) throw std::invalid_argument("zero vector is not a point");
  return point_index(N_, q(), w);
}

LineIdx Space::line_through(PointIdx a, PointIdx b) const {
  if (a == b) throw std::invalid_argument("line_through needs two distinct points");
  if (a >= n_points_ || b >= n_points_) throw std::out_of_range("point index outside the space");
  if (!pair_table_.empty()) return pair_table_[static_cast<std::size_t>(a) * n_points_ + b];
  std::vector<Elem> va(coords(a).begin(), coords(a).end()), vb(coords(b).begin(), coords(b).end());
  rref2(*F_, va, vb);
  return key_to_line_.at(line_key(va, vb));
}

std::vector<PointIdx> Space::affine_piece(int i) const {
  if (i < 0 || i > N_) throw std::out_of_range("affine piece index");
  auto lo = static_cast<PointIdx>(pg_size(N_ - i - 1, q()));
  auto hi = static_cast<PointIdx>(pg_size(N_ - i, q()));
  std::vector<PointIdx> out(hi - lo);
  std::iota(out.begin(), out.end(), lo);
  return out;
}

int Space::rank(const PointSet& S) const {
  // incremental echelon basis, stops once full rank is reached
  std::vector<std::vector<Elem>> basis;
  std::vector<int> pivots;
  for (PointIdx p : S.indices()) {
    std::vector<Elem> v(coords(p).begin(), coords(p).end());
    for (std::size_t r = 0; r < basis.size(); ++r) {
      Elem f = v[pivots[r]];
      if (f == 0) continue;
      for (int k = 0; k <= N_; ++k) v[k] = F_->sub(v[k], F_->mul(f, basis[r][k]));
    }
    if (!normalize(*F_, v)) continue;
    int piv = 0;
    while (v[piv] == 0) ++piv;
    basis.push_back(std::move(v));
    pivots.push_back(piv);
    if (static_cast<int>(basis.size()) == N_ + 1) break;
  }
  return static_cast<int>(basis.size());
}

namespace {

std::vector<Elem> mat_mul(const Field& F, int n, const std::vector<Elem>& A, const std::vector<Elem>& B) {
  std::vector<Elem> C(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Elem a = A[i * n + k];
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) C[i * n + j] = F.add(C[i * n + j], F.mul(a, B[k * n + j]));
    }
  return C;
}

// Gauss-Jordan; empty result when singular
std::vector<Elem> mat_inverse(const Field& F, int n, std::vector<Elem> A) {
  std::vector<Elem> I(n * n, 0);
  for (int i = 0; i < n; ++i) I[i * n + i] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && A[piv * n + c] == 0) ++piv;
    if (piv == n) return {};
    for (int k = 0; k < n; ++k) {
      std::swap(A[c * n + k], A[piv * n + k]);
      std::swap(I[c * n + k], I[piv * n + k]);
    }
    Elem s = F.inv(A[c * n + c]);
    for (int k = 0; k < n; ++k) {
      A[c * n + k] = F.mul(A[c * n + k], s);
      I[c * n + k] = F.mul(I[c * n + k], s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || A[r * n + c] == 0) continue;
      Elem f = A[r * n + c];
      for (int k = 0; k < n; ++k) {
        A[r * n + k] = F.sub(A[r * n + k], F.mul(f, A[c * n + k]));
        I[r * n + k] = F.sub(I[r * n + k], F.mul(f, I[c * n + k]));
      }
    }
  }
  return I;
}

}  // namespace

Collineation identity_collineation(int dim) {
  Collineation g;
  g.dim = dim;
  g.matrix.assign(dim * dim, 0);
  for (int i = 0; i < dim; ++i) g.matrix[i * dim + i] = 1;
  return g;
}

Collineation compose(const Field& F, const Collineation& a, const Collineation& b) {
  if (a.dim != b.dim) throw std::invalid_argument("collineation dimension mismatch");
  std::vector<Elem> Bs(b.matrix.size());
  for (std::size_t i = 0; i < Bs.size(); ++i) Bs[i] = F.frobenius(b.matrix[i], a.frob);
  Collineation c;
  c.dim = a.dim;
  c.matrix = mat_mul(F, a.dim, a.matrix, Bs);
  c.frob = (a.frob + b.frob) % F.h();
  return c;
}

Collineation inverse(const Field& F, const Collineation& g) {
  auto Ai = mat_inverse(F, g.dim, g.matrix);
  if (Ai.empty()) throw std::invalid_argument("singular collineation matrix");
  Collineation r;
  r.dim = g.dim;
  r.frob = (F.h() - g.frob % F.h()) % F.h();
  r.matrix.resize(Ai.size());
  for (std::size_t i = 0; i < Ai.size(); ++i) r.matrix[i] = F.frobenius(Ai[i], r.frob);
  return r;
}

bool is_invertible(const Field& F, const Collineation& g) { return !mat_inverse(F, g.dim, g.matrix).empty(); }

std::vector<Elem> apply(const Field& F, const Collineation& g, std::span<const Elem> v) {
  if (static_cast<int>(v.size()) != g.dim) throw std::invalid_argument("collineation dimension mismatch");
  std::vector<Elem> x(g.dim), y(g.dim, 0);
  for (int i = 0; i < g.dim; ++i) x[i] = F.frobenius(v[i], g.frob);
  for (int i = 0; i < g.dim; ++i)
    for (int k = 0; k < g.dim; ++k) y[i] = F.add(y[i], F.mul(g.matrix[i * g.dim + k], x[k]));
  return y;
}

PointIdx apply_point(const Space& space, const Collineation& g, PointIdx p) {
  if (g.dim != space.dim() + 1) throw std::invalid_argument("collineation dimension mismatch");
  return space.index_of(apply(space.field(), g, space.coords(p)));
}

PointSet apply_collineation(const Space& space, const Collineation& g, const PointSet& S) {
  if (g.dim != space.dim() + 1) throw std::invalid_argument("collineation dimension mismatch");
  if (S.universe() != space.num_points()) throw std::invalid_argument("point set is not over this space");
  PointSet out = space.empty_set();
  for (PointIdx p : S.indices()) out.insert(apply_point(space, g, p));
  return out;
}

Collineation random_collineation(const Space& space, std::mt19937_64& rng) {
  const Field& F = space.field();
  int dim = space.dim() + 1;
  std::uniform_int_distribution<Elem> coef(0, F.q() - 1);
  std::uniform_int_distribution<int> fr(0, F.h() - 1);
  Collineation g;
  g.dim = dim;
  g.matrix.resize(dim * dim);
  do {
    for (auto& x : g.matrix) x = coef(rng);
  } while (!is_invertible(F, g));
  g.frob = fr(rng);
  return g;
}

bool acts_trivially(const Space& space, const Collineation& g) {
  for (PointIdx p = 0; p < space.num_points(); ++p)
    if (apply_point(space, g, p) != p) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Cubic = std::array<Elem, 3>;

// a*b mod x^3 + c2 x^2 + c1 x + c0
Cubic cubic_mul(const Field& F, const Cubic& a, const Cubic& b, const std::vector<Elem>& c) {
  Elem t[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i + j] = F.add(t[i + j], F.mul(a[i], b[j]));
  for (int d = 4; d >= 3; --d) {
    Elem top = t[d];
    if (top == 0) continue;
    t[d] = 0;
    for (int k = 0; k < 3; ++k) t[d - 3 + k] = F.sub(t[d - 3 + k], F.mul(top, c[k]));
  }
  return {t[0], t[1], t[2]};
}

Cubic cubic_pow_x(const Field& F, std::uint64_t e, const std::vector<Elem>& c) {
  Cubic r{1, 0, 0}, b{0, 1, 0};
  while (e) {
    if (e & 1) r = cubic_mul(F, r, b, c);
    b = cubic_mul(F, b, b, c);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::vector<Elem> least_primitive_cubic(const Field& F) {
  const std::uint64_t q = F.q();
  const std::uint64_t order = q * q * q - 1;
  const auto primes = prime_factors(order);
  const Cubic one{1, 0, 0};
  for (std::uint64_t code = 0; code < q * q * q; ++code) {
    std::vector<Elem> c{static_cast<Elem>(code % q), static_cast<Elem>(code / q % q), static_cast<Elem>(code / q / q)};
    if (c[0] == 0) continue;
    if (cubic_pow_x(F, order, c) != one) continue;
    bool prim = true;
    for (auto r : primes)
      if (cubic_pow_x(F, order / r, c) == one) {
        prim = false;
        break;
      }
    if (prim) return c;
  }
  throw std::logic_error("no primitive cubic found");
}

Collineation singer_generator(const Field& F) {
  auto c = least_primitive_cubic(F);
  // multiplication by x on the basis 1, x, x^2
  Collineation g = identity_collineation(3);
  g.matrix = {0, 0, F.neg(c[0]), 1, 0, F.neg(c[1]), 0, 1, F.neg(c[2])};
  return g;
}

}  // namespace mcf
