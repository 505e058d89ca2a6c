#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mcf {

using PointIdx = std::uint32_t;
using LineIdx = std::uint32_t;

// Subset of a space's points as a fixed-width bit vector.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  PointSet(std::size_t universe, const std::vector<PointIdx>& members);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(PointIdx i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  // returns false if already present
  bool insert(PointIdx i);
  bool erase(PointIdx i);

  std::vector<PointIdx> indices() const;
  PointSet complement() const;
  PointSet united(const PointSet& o) const;
  PointSet intersected(const PointSet& o) const;
  bool disjoint(const PointSet& o) const;
  std::size_t intersection_size(const PointSet& o) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const PointSet& o) const { return universe_ == o.universe_ && words_ == o.words_; }
  bool operator<(const PointSet& o) const;

 private:
  void check(PointIdx i) const {
    if (i >= universe_) throw std::out_of_range("point index outside the space");
  }
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

}  // namespace mcf
