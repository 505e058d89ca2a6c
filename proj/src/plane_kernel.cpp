#include "mcf/plane_kernel.hpp"

#include <cstdio>
#include <stdexcept>

namespace mcf {

std::string Mask128::hex() const {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return buf;
}

Mask128 Mask128::from_hex(const std::string& s) {
  if (s.size() != 32) throw std::invalid_argument("mask must have 32 hex digits");
  auto word = [&](std::size_t off) {
    std::uint64_t w = 0;
    for (std::size_t i = off; i < off + 16; ++i) {
      char c = s[i];
      int d;
      if (c >= '0' && c <= '9')
        d = c - '0';
      else if (c >= 'a' && c <= 'f')
        d = c - 'a' + 10;
      else
        throw std::invalid_argument("bad hex digit in mask");
      w = w << 4 | static_cast<std::uint64_t>(d);
    }
    return w;
  };
  return {word(16), word(0)};
}

PlaneKernel::PlaneKernel(const Space& plane) : space_(&plane), q_(plane.q()), h_(plane.field().h()), n_(plane.num_points()) {
  if (plane.dim() != 2) throw std::invalid_argument("plane kernel needs N = 2");
  if (n_ > kMaxPoints) throw std::invalid_argument("plane kernel supports at most 128 points (q <= 9)");
  const Field& F = plane.field();
  for (std::size_t p = 0; p < n_; ++p) full_.set(p);
  lines_.resize(n_);
  for (std::size_t l = 0; l < n_; ++l)
    for (PointIdx p : plane.line_points(l)) lines_[l].set(p);
  pair_.assign(n_ * n_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (a != b) pair_[a * n_ + b] = plane.line_through(a, b);
  coords_.resize(n_);
  for (std::size_t p = 0; p < n_; ++p)
    for (int i = 0; i < 3; ++i) coords_[p][i] = plane.coords(p)[i];
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    neg_[a] = F.neg(a);
    for (int b = 0; b < q_; ++b) {
      add_[a * q_ + b] = F.add(a, b);
      mul_[a * q_ + b] = F.mul(a, b);
    }
  }
  raw_.assign(static_cast<std::size_t>(q_) * q_ * q_, 0);
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b)
      for (int c = 0; c < q_; ++c)
        if (a || b || c) {
          Elem v[3] = {static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)};
          raw_[(a * q_ + b) * q_ + c] = plane.index_of(std::span<const Elem>(v, 3));
        }
  frob_.assign(h_, std::vector<PointIdx>(n_));
  for (int e = 0; e < h_; ++e)
    for (std::size_t p = 0; p < n_; ++p) {
      auto x = coords_[p];
      frob_[e][p] = raw_index(F.frobenius(x[0], e), F.frobenius(x[1], e), F.frobenius(x[2], e));
    }
}

Mask128 PlaneKernel::mask_of(const PointSet& S) const {
  if (S.universe() != n_) throw std::invalid_argument("point set belongs to another space");
  Mask128 m;
  for (PointIdx p : S.indices()) m.set(p);
  return m;
}

PointSet PlaneKernel::set_of(Mask128 m) const {
  PointSet S(n_);
  m.for_each([&](unsigned p) { S.insert(p); });
  return S;
}

void PlaneKernel::line_counts(Mask128 S, std::uint8_t* out) const {
  for (std::size_t l = 0; l < n_; ++l) out[l] = static_cast<std::uint8_t>((S & lines_[l]).count());
}

bool PlaneKernel::has_frame(Mask128 S) const {
  // a set has no frame exactly when all but at most one of its points lie on a line
  if (S.count() < 4) return false;
  for (const auto& l : lines_)
    if ((S & (l ^ full_)).count() <= 1) return false;
  return true;
}

bool PlaneKernel::spans(Mask128 S) const {
  if (S.count() < 3) return false;
  for (const auto& l : lines_)
    if ((S & (l ^ full_)).count() == 0) return false;
  return true;
}

}  // namespace mcf
