#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mcf/geometry.hpp"
#include "oracles.hpp"

using namespace mcf;

TEST(Geometry, Counts) {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    Space P2(2, make_field(q));
    EXPECT_EQ(P2.num_points(), pg_size(2, q));
    EXPECT_EQ(P2.num_lines(), pg_size(2, q));
    EXPECT_EQ(P2.lines_per_point(), static_cast<std::size_t>(q + 1));
  }
  for (int q : {2, 3, 4}) {
    Space P3(3, make_field(q));
    EXPECT_EQ(P3.num_points(), pg_size(3, q));
    EXPECT_EQ(P3.num_lines(), static_cast<std::size_t>((q * q + 1) * (q * q + q + 1)));
    EXPECT_EQ(P3.lines_per_point(), pg_size(2, q));
  }
  EXPECT_EQ(pg_size(-1, 5), 0u);
  EXPECT_THROW(Space(1, make_field(3)), std::invalid_argument);
}

TEST(Geometry, IndexingIsLexicographicOnNormalizedTuples) {
  for (int q : {3, 4, 5}) {
    Space sp(3, make_field(q));
    std::vector<Elem> prev;
    for (PointIdx i = 0; i < sp.num_points(); ++i) {
      auto c = sp.coords(i);
      std::vector<Elem> v(c.begin(), c.end());
      auto first = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
      ASSERT_NE(first, v.end());
      EXPECT_EQ(*first, 1u);
      if (i) EXPECT_LT(prev, v);
      prev = v;
      EXPECT_EQ(point_index(3, q, v), i);
      EXPECT_EQ(point_coordinates(3, q, i), v);
      // scalar multiples map back to the same index
      for (Elem a = 1; a < static_cast<Elem>(q); ++a) {
        auto w = v;
        for (auto& x : w) x = sp.field().mul(x, a);
        EXPECT_EQ(sp.index_of(w), i);
      }
    }
  }
}

TEST(Geometry, IncidenceMatchesRankOracle) {
  for (int q : {2, 3, 4, 5}) {
    for (int N : {2, 3}) {
      Space sp(N, make_field(q));
      std::set<std::vector<PointIdx>> lines;
      for (LineIdx l = 0; l < sp.num_lines(); ++l) {
        auto pts = sp.line_points(l);
        ASSERT_EQ(pts.size(), static_cast<std::size_t>(q + 1));
        for (std::size_t k = 2; k < pts.size(); ++k) EXPECT_TRUE(oracle::collinear(sp, pts[0], pts[1], pts[k]));
        lines.insert({pts.begin(), pts.end()});
      }
      EXPECT_EQ(lines.size(), sp.num_lines());
      for (PointIdx a = 0; a < sp.num_points(); a += 3)
        for (PointIdx b = a + 1; b < sp.num_points(); b += 2) {
          LineIdx l = sp.line_through(a, b);
          auto pts = sp.line_points(l);
          EXPECT_NE(std::find(pts.begin(), pts.end(), a), pts.end());
          EXPECT_NE(std::find(pts.begin(), pts.end(), b), pts.end());
          auto through = sp.lines_through(a);
          EXPECT_NE(std::find(through.begin(), through.end(), l), through.end());
        }
      EXPECT_THROW(sp.line_through(1, 1), std::invalid_argument);
    }
  }
}

TEST(Geometry, FirstLineIsHyperplaneX0) {
  for (int q : {3, 4, 7}) {
    Space sp(2, make_field(q));
    auto l0 = sp.line_points(0);
    for (PointIdx i = 0; i <= static_cast<PointIdx>(q); ++i) {
      EXPECT_EQ(l0[i], i);
      EXPECT_EQ(sp.coords(i)[0], 0u);
    }
    EXPECT_EQ(sp.affine_piece(0).size(), static_cast<std::size_t>(q * q));
    EXPECT_EQ(sp.affine_piece(2).size(), 1u);
  }
}

TEST(Geometry, RankMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int q : {3, 4, 5}) {
    Space sp(3, make_field(q));
    std::uniform_int_distribution<PointIdx> pick(0, sp.num_points() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      PointSet S(sp.num_points());
      std::vector<std::vector<Elem>> rows;
      int k = 1 + trial % 5;
      while (static_cast<int>(S.size()) < k) S.insert(pick(rng));
      for (PointIdx p : S.indices()) rows.emplace_back(sp.coords(p).begin(), sp.coords(p).end());
      EXPECT_EQ(sp.rank(S), oracle::rank(sp.field(), rows));
    }
  }
}

TEST(Geometry, CollineationsPreserveIncidence) {
  std::mt19937_64 rng(11);
  for (int q : {4, 5, 8, 9}) {
    Space sp(2, make_field(q));
    for (int trial = 0; trial < 10; ++trial) {
      auto g = random_collineation(sp, rng);
      ASSERT_TRUE(is_invertible(sp.field(), g));
      auto gi = inverse(sp.field(), g);
      EXPECT_TRUE(acts_trivially(sp, compose(sp.field(), g, gi)));
      for (LineIdx l = 0; l < sp.num_lines(); l += 5) {
        auto pts = sp.line_points(l);
        PointIdx a = apply_point(sp, g, pts[0]), b = apply_point(sp, g, pts[1]);
        LineIdx m = sp.line_through(a, b);
        for (PointIdx p : pts) {
          auto img = sp.line_points(m);
          EXPECT_NE(std::find(img.begin(), img.end(), apply_point(sp, g, p)), img.end());
        }
      }
    }
  }
}

TEST(Geometry, SingerGeneratorIsRegularOnPoints) {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 16}) {
    Space sp(2, make_field(q));
    auto C = singer_generator(sp.field());
    std::vector<bool> seen(sp.num_points(), false);
    PointIdx p = 0;
    for (std::size_t k = 0; k < sp.num_points(); ++k) {
      ASSERT_FALSE(seen[p]) << "q=" << q << " k=" << k;
      seen[p] = true;
      p = apply_point(sp, C, p);
    }
    EXPECT_EQ(p, 0u);
    auto c = least_primitive_cubic(sp.field());
    EXPECT_EQ(c.size(), 3u);
  }
}
