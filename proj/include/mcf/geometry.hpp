#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <unordered_map>
#include <vector>

#include "mcf/galois.hpp"
#include "mcf/point_set.hpp"

namespace mcf {

// (q^(N+1) - 1) / (q - 1); N = -1 gives 0
std::uint64_t pg_size(int N, std::uint64_t q);

// Normalized coordinates are those whose first nonzero entry is 1. Points are
// indexed in lexicographic order of their normalized coordinate tuples.
std::vector<Elem> point_coordinates(int N, int q, PointIdx idx);
PointIdx point_index(int N, int q, std::span<const Elem> normalized);
// scales v in place so its first nonzero entry is 1; returns false for the zero vector
bool normalize(const Field& F, std::span<Elem> v);

// rank of a list of vectors of length `width`
int vector_rank(const Field& F, std::vector<std::vector<Elem>> rows);

class Space {
 public:
  // throws std::invalid_argument when N < 2 or the incidence count exceeds kMaxIncidences
  Space(int N, FieldPtr F);

  static constexpr std::uint64_t kMaxIncidences = 64'000'000;

  int dim() const { return N_; }
  int q() const { return F_->q(); }
  const Field& field() const { return *F_; }
  const FieldPtr& field_ptr() const { return F_; }

  std::size_t num_points() const { return n_points_; }
  std::size_t num_lines() const { return n_lines_; }
  std::size_t points_per_line() const { return static_cast<std::size_t>(q()) + 1; }

  std::span<const Elem> coords(PointIdx i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * (N_ + 1), static_cast<std::size_t>(N_ + 1)};
  }
  // normalizes a copy of v; throws on the zero vector
  PointIdx index_of(std::span<const Elem> v) const;

  std::span<const PointIdx> line_points(LineIdx l) const {
    return {line_pts_.data() + static_cast<std::size_t>(l) * (q() + 1), points_per_line()};
  }
  std::span<const LineIdx> lines_through(PointIdx p) const {
    return {through_.data() + static_cast<std::size_t>(p) * lines_per_point_, lines_per_point_};
  }
  std::size_t lines_per_point() const { return lines_per_point_; }

  // throws std::invalid_argument when a == b
  LineIdx line_through(PointIdx a, PointIdx b) const;

  // points whose first nonzero coordinate sits at position i; |pi_i| = q^(N-i)
  std::vector<PointIdx> affine_piece(int i) const;

  int rank(const PointSet& S) const;
  bool spans(const PointSet& S) const { return rank(S) == N_ + 1; }

  PointSet empty_set() const { return PointSet(n_points_); }
  PointSet set_of(const std::vector<PointIdx>& pts) const { return PointSet(n_points_, pts); }

 private:
  std::uint64_t line_key(std::span<const Elem> a, std::span<const Elem> b) const;

  int N_;
  FieldPtr F_;
  std::size_t n_points_ = 0, n_lines_ = 0, lines_per_point_ = 0;
  std::vector<Elem> coords_;
  std::vector<PointIdx> line_pts_;
  std::vector<LineIdx> through_;
  std::vector<LineIdx> pair_table_;  // n*n, only for small planes
  std::unordered_map<std::uint64_t, LineIdx> key_to_line_;
};

// x -> A * x^(p^e)
struct Collineation {
  int dim = 0;  // N + 1
  std::vector<Elem> matrix;  // row-major dim x dim
  int frob = 0;
};

Collineation identity_collineation(int dim);
// (a * b)(x) = a(b(x))
Collineation compose(const Field& F, const Collineation& a, const Collineation& b);
Collineation inverse(const Field& F, const Collineation& g);
bool is_invertible(const Field& F, const Collineation& g);
std::vector<Elem> apply(const Field& F, const Collineation& g, std::span<const Elem> v);
PointIdx apply_point(const Space& space, const Collineation& g, PointIdx p);
PointSet apply_collineation(const Space& space, const Collineation& g, const PointSet& S);
// uniform over invertible matrices and automorphisms
Collineation random_collineation(const Space& space, std::mt19937_64& rng);
// true when g fixes every point
bool acts_trivially(const Space& space, const Collineation& g);

// Companion matrix of the least primitive cubic over GF(q); acts on PG(2,q)
// as a Singer cycle.
Collineation singer_generator(const Field& F);
// monic cubic x^3 + c2 x^2 + c1 x + c0 as {c0, c1, c2}
std::vector<Elem> least_primitive_cubic(const Field& F);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace mcf
