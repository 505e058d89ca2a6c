#include "mcf/point_set.hpp"

namespace mcf {

PointSet::PointSet(std::size_t universe, const std::vector<PointIdx>& members) : PointSet(universe) {
  for (PointIdx i : members)
    if (!insert(i)) throw std::invalid_argument("repeated point in point set");
}

bool PointSet::insert(PointIdx i) {
  check(i);
  std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (words_[i >> 6] & bit) return false;
  words_[i >> 6] |= bit;
  ++count_;
  return true;
}

bool PointSet::erase(PointIdx i) {
  check(i);
  std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (!(words_[i >> 6] & bit)) return false;
  words_[i >> 6] &= ~bit;
  --count_;
  return true;
}

std::vector<PointIdx> PointSet::indices() const {
  std::vector<PointIdx> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t x = words_[w];
    while (x) {
      out.push_back(static_cast<PointIdx>(w * 64 + std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

PointSet PointSet::complement() const {
  PointSet r(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = ~words_[w];
  if (universe_ % 64) r.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  r.count_ = universe_ - count_;
  return r;
}

PointSet PointSet::united(const PointSet& o) const {
  if (o.universe_ != universe_) throw std::invalid_argument("point sets over different spaces");
  PointSet r(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    r.words_[w] = words_[w] | o.words_[w];
    r.count_ += std::popcount(r.words_[w]);
  }
  return r;
}

PointSet PointSet::intersected(const PointSet& o) const {
  if (o.universe_ != universe_) throw std::invalid_argument("point sets over different spaces");
  PointSet r(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    r.words_[w] = words_[w] & o.words_[w];
    r.count_ += std::popcount(r.words_[w]);
  }
  return r;
}

std::size_t PointSet::intersection_size(const PointSet& o) const {
  if (o.universe_ != universe_) throw std::invalid_argument("point sets over different spaces");
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) c += std::popcount(words_[w] & o.words_[w]);
  return c;
}

bool PointSet::disjoint(const PointSet& o) const { return intersection_size(o) == 0; }

bool PointSet::operator<(const PointSet& o) const {
  if (universe_ != o.universe_) return universe_ < o.universe_;
  // deterministic total order: decided by the lowest differing element
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t a = words_[w], b = o.words_[w];
    if (a == b) continue;
    std::uint64_t low = (a ^ b) & -(a ^ b);
    return (a & low) != 0;
  }
  return false;
}

}  // namespace mcf
