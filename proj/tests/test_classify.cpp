#include <gtest/gtest.h>
#include <omp.h>

#include <filesystem>
#include <functional>
#include <random>

#include "mcf/classify.hpp"
#include "mcf/constructions.hpp"
#include "oracles.hpp"

using namespace mcf;
using namespace mcf::classify;

namespace {

PointSet random_frame_set(const PlaneKernel& K, std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(K.num_points()) - 1);
  for (;;) {
    Mask128 m;
    while (m.count() < n) m.set(pick(rng));
    if (K.has_frame(m)) return K.set_of(m);
  }
}

std::map<int, std::uint64_t> orbit_totals(const Spectrum& sp) {
  std::map<int, std::uint64_t> t;
  for (const auto& c : sp.classes) t[static_cast<int>(c.n)] += c.orbit_size;
  return t;
}

}  // namespace

TEST(Classify, GroupOrderMatchesEnumeration) {
  for (int q : {2, 3, 4}) {
    Space sp(2, make_field(q));
    EXPECT_EQ(collineation_group_order(q), oracle::all_collineations(sp).size()) << q;
  }
  EXPECT_EQ(collineation_group_order(9), 2ull * 729 * 80 * 728);
}

TEST(Classify, StabilizerMatchesGroupScan) {
  std::mt19937_64 rng(21);
  for (int q : {3, 4}) {
    Space sp(2, make_field(q));
    PlaneKernel K(sp);
    auto G = oracle::all_collineations(sp);
    for (int trial = 0; trial < 12; ++trial) {
      auto S = random_frame_set(K, rng, 4 + trial % 6);
      EXPECT_EQ(stabilizer_order(sp, S), oracle::stabilizer(sp, G, S));
    }
    auto t = constructions::line_plus_two_points(sp).point_set;
    EXPECT_EQ(stabilizer_order(sp, t), oracle::stabilizer(sp, G, t));
  }
}

TEST(Classify, CanonicalFormIsInvariant) {
  std::mt19937_64 rng(22);
  for (int q : {4, 5, 7, 8, 9}) {
    Space sp(2, make_field(q));
    PlaneKernel K(sp);
    for (int trial = 0; trial < 8; ++trial) {
      auto S = random_frame_set(K, rng, 5 + trial);
      auto f = canonical_form(sp, S);
      auto g = random_collineation(sp, rng);
      auto T = apply_collineation(sp, g, S);
      EXPECT_EQ(canonical_form(sp, T), f);
      EXPECT_EQ(stabilizer_order(sp, T), stabilizer_order(sp, S));
      // the form is itself an image of S
      EXPECT_EQ(canonical_form(sp, f), f);
    }
  }
}

TEST(Classify, CanonicalFormSeparatesOrbits) {
  Space sp(2, make_field(3));
  PlaneKernel K(sp);
  auto G = oracle::all_collineations(sp);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto A = random_frame_set(K, rng, 6), B = random_frame_set(K, rng, 6);
    bool same = canonical_form(sp, A) == canonical_form(sp, B);
    bool equivalent = false;
    for (const auto& g : G)
      if (apply_collineation(sp, g, A) == B) {
        equivalent = true;
        break;
      }
    EXPECT_EQ(same, equivalent);
  }
}

TEST(Classify, FramelessSetsUseComplement) {
  Space sp(2, make_field(4));
  PlaneKernel K(sp);
  Mask128 line = K.line(0);
  EXPECT_FALSE(K.has_frame(line));
  auto c = canonize(K, line);
  EXPECT_EQ(c.form.count(), 5);
  EXPECT_EQ(c.stabilizer, collineation_group_order(4) / 21);
  // in PG(2,2) a line plus a point and its three-point complement both lack a frame
  Space p2(2, make_field(2));
  PlaneKernel K2(p2);
  Mask128 S = K2.line(0);
  for (int p = 0; p < 7; ++p)
    if (!S.test(p)) {
      S.set(p);
      break;
    }
  EXPECT_THROW(canonize(K2, S), std::invalid_argument);
}

TEST(Classify, OrbitStabilizerDoubleCount) {
  struct Case {
    int q;
    std::int64_t mu;
    Predicate pred;
  };
  for (auto c : {Case{3, 1, Predicate::minimal}, Case{3, 2, Predicate::minimal}, Case{3, 3, Predicate::minimal},
                 Case{3, 6, Predicate::optimal}, Case{4, 2, Predicate::minimal}, Case{4, 3, Predicate::optimal}}) {
    Space sp(2, make_field(c.q));
    PlaneKernel K(sp);
    auto [lo, hi] = default_size_range(c.q, c.mu);
    auto found = enumerate_classes(sp, c.mu, c.pred, lo, hi);
    auto labelled = count_labelled(K, c.mu, c.pred, lo, hi);
    auto totals = orbit_totals(found);
    for (auto [n, k] : labelled) EXPECT_EQ(totals[n], k) << "q=" << c.q << " mu=" << c.mu << " n=" << n;
    for (auto [n, k] : totals) EXPECT_EQ(labelled[n], k);
    if (c.q == 3) EXPECT_EQ(classify::reference::count_labelled(K, c.mu, c.pred, lo, hi), labelled);
  }
}

TEST(Classify, RecordsAgreeWithPairOracle) {
  Space sp(2, make_field(3));
  PlaneKernel K(sp);
  SearchOptions o;
  o.mu_min = 1;
  o.max_size = 12;
  auto st = search(K, o);
  ASSERT_TRUE(st.complete);
  for (const auto& r : st.records) {
    auto S = K.set_of(r.form);
    auto cov = oracle::coverage(sp, S);
    EXPECT_EQ(r.cmin, oracle::min_external(cov));
    for (std::int64_t mu = 1; mu <= 8; ++mu) {
      EXPECT_EQ(r.minimal_for(mu), oracle::minimal(sp, S, mu)) << r.form.hex() << " mu=" << mu;
      bool opt = oracle::saturating(sp, S, mu);
      for (auto c : cov) opt = opt && (c < 0 || c == mu);
      EXPECT_EQ(r.optimal_for(mu), opt);
    }
  }
}

TEST(Classify, DeficitPruneIsAdmissible) {
  // exhaustive at q = 3: a pruned (T, r) has no saturating superset with at most r extra points
  Space sp(2, make_field(3));
  PlaneKernel K(sp);
  const int n = static_cast<int>(K.num_points());
  auto sat = [&](Mask128 S, std::int64_t mu) {
    if (!K.spans(S) || S == K.full()) return false;
    std::uint8_t k[13];
    K.line_counts(S, k);
    for (int Q = 0; Q < n; ++Q) {
      if (S.test(Q)) continue;
      std::int64_t c = 0;
      for (auto l : K.lines_through(Q)) c += k[l] * (k[l] - 1) / 2;
      if (c < mu) return false;
    }
    return true;
  };
  std::uint64_t pruned = 0;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    Mask128 T{bits, 0};
    if (T.count() < 3 || T.count() > 8) continue;
    for (int r = 1; r <= 3; ++r)
      for (std::int64_t mu : {1, 2, 3, 5}) {
        if (!deficit_prune(K, T, r, mu)) continue;
        ++pruned;
        std::vector<int> out;
        for (int p = 0; p < n; ++p)
          if (!T.test(p)) out.push_back(p);
        std::function<void(std::size_t, Mask128, int)> rec = [&](std::size_t i, Mask128 S, int left) {
          ASSERT_FALSE(sat(S, mu)) << T.hex() << " r=" << r << " mu=" << mu;
          if (!left) return;
          for (std::size_t j = i; j < out.size(); ++j) {
            Mask128 U = S;
            U.set(out[j]);
            rec(j + 1, U, left - 1);
          }
        };
        rec(0, T, r);
      }
  }
  EXPECT_GT(pruned, 0u);
}

TEST(Classify, PruningDoesNotChangeResults) {
  Space sp(2, make_field(4));
  for (std::int64_t mu : {2, 4}) {
    SearchOptions o;
    o.prune = false;
    auto a = enumerate_classes(sp, mu, Predicate::minimal);
    auto b = enumerate_classes(sp, mu, Predicate::minimal, std::nullopt, std::nullopt, o);
    EXPECT_EQ(a.counts, b.counts);
  }
}

TEST(Classify, CheckpointResumeMatchesUninterrupted) {
  Space sp(2, make_field(4));
  PlaneKernel K(sp);
  SearchOptions o;
  o.mu_min = 2;
  o.min_size = 6;
  o.max_size = 7;
  auto full = search(K, o);
  auto path = (std::filesystem::temp_directory_path() / "mcf_test_checkpoint.json").string();
  SearchOptions partial = o;
  partial.time_budget_seconds = 0.0;
  partial.checkpoint_path = path;
  auto first = search(K, partial);
  EXPECT_FALSE(first.complete);
  auto loaded = load_checkpoint(path);
  EXPECT_EQ(loaded.frontier, first.frontier);
  EXPECT_EQ(loaded.level, first.level);
  SearchState st = loaded;
  while (!st.complete) st = search(K, partial, &st);
  ASSERT_EQ(st.records.size(), full.records.size());
  for (std::size_t i = 0; i < st.records.size(); ++i) {
    EXPECT_EQ(st.records[i].form, full.records[i].form);
    EXPECT_EQ(st.records[i].stabilizer, full.records[i].stabilizer);
    EXPECT_EQ(st.records[i].lo, full.records[i].lo);
  }
  SearchOptions other = o;
  other.mu_min = 3;
  EXPECT_THROW(search(K, other, &loaded), std::invalid_argument);
  std::filesystem::remove(path);
}

TEST(Classify, DeterministicAcrossThreadCounts) {
  Space sp(2, make_field(5));
  omp_set_num_threads(1);
  auto a = enumerate_classes(sp, 2, Predicate::minimal);
  omp_set_num_threads(4);
  auto b = enumerate_classes(sp, 2, Predicate::minimal);
  ASSERT_EQ(a.classes.size(), b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    EXPECT_EQ(a.classes[i].mask, b.classes[i].mask);
    EXPECT_EQ(a.classes[i].stabilizer_order, b.classes[i].stabilizer_order);
  }
}

TEST(Classify, SmallSpectra) {
  Space p3(2, make_field(3));
  EXPECT_EQ(enumerate_classes(p3, 2, Predicate::minimal).counts, (std::map<int, std::int64_t>{{6, 4}}));
  Space p4(2, make_field(4));
  EXPECT_EQ(enumerate_classes(p4, 2, Predicate::minimal).counts, (std::map<int, std::int64_t>{{6, 2}, {7, 5}}));
  auto opt = enumerate_classes(p3, 6, Predicate::optimal, 4, 12);
  EXPECT_EQ(opt.counts, (std::map<int, std::int64_t>{{9, 1}}));
  EXPECT_TRUE(opt.complete);
}

TEST(Classify, InvalidArguments) {
  Space p3(2, make_field(3));
  PlaneKernel K(p3);
  SearchOptions o;
  o.max_size = 20;
  EXPECT_THROW(search(K, o), std::invalid_argument);
  EXPECT_THROW(parse_predicate("maximal"), std::invalid_argument);
  Space p2(2, make_field(2));
  PlaneKernel K2(p2);
  o.max_size = 5;
  EXPECT_THROW(search(K2, o), std::invalid_argument);
  Space big(2, make_field(11));
  EXPECT_THROW(PlaneKernel{big}, std::invalid_argument);
}
