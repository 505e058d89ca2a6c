#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcf/geometry.hpp"
#include "mcf/plane_kernel.hpp"

namespace mcf::classify {

// |PΓL(3,q)| = h q^3 (q^2-1)(q^3-1)
std::uint64_t collineation_group_order(int q);

// x -> frob^e(M x)
struct Labeling {
  std::array<Elem, 9> matrix{};
  int frob = 0;
};
PointIdx apply_labeling(const PlaneKernel& K, const Labeling& L, PointIdx p);

struct Canonical {
  Mask128 form;
  std::uint64_t stabilizer = 0;
  // every group element mapping the set onto `form`
  std::vector<Labeling> labelings;
};

// Least image of S over PΓL(3,q). The candidate labelings send an ordered frame
// of S (or of its complement) to the standard frame; point invariants restrict
// the frames tried to those with the least invariant profile.
// Throws std::invalid_argument when neither S nor its complement contains a frame.
Canonical canonize(const PlaneKernel& K, Mask128 S, bool keep_labelings = false);
PointSet canonical_form(const Space& plane, const PointSet& S);
std::uint64_t stabilizer_order(const Space& plane, const PointSet& S);

// Everything needed to decide minimality and optimality for any mu from one pass.
struct ClassRecord {
  Mask128 form;
  int n = 0;
  std::uint64_t stabilizer = 0;
  std::int64_t cmin = 0;  // least weighted coverage of an external point
  std::int64_t cmax = 0;
  std::int64_t lo = 0;  // largest cmin of S minus a point (0 when that does not span)

  bool saturating_for(std::int64_t mu) const { return cmin >= mu; }
  bool minimal_for(std::int64_t mu) const { return cmin >= mu && lo < mu; }
  bool optimal_for(std::int64_t mu) const { return cmin == mu && cmax == mu; }
};
// S must span and miss at least one point
ClassRecord class_record(const PlaneKernel& K, Mask128 S, std::uint64_t stabilizer);

// True when no superset of T with at most r extra points is (1,mu)-saturating,
// by a coverage-deficit count: external points that cannot reach mu even if the
// r new points all fall on their best line must all be added.
bool deficit_prune(const PlaneKernel& K, Mask128 T, int r, std::int64_t mu);

struct SearchOptions {
  std::int64_t mu_min = 1;  // records keep classes with cmin >= mu_min
  int min_size = 4;
  int max_size = 0;
  bool prune = true;
  std::optional<double> time_budget_seconds;
  std::string checkpoint_path;  // written after every level when set
};

struct SearchState {
  int q = 0;
  std::int64_t mu_min = 1;
  int min_size = 4;
  int max_size = 0;
  int level = 4;  // size of the sets in the frontier
  std::vector<Mask128> frontier;
  std::vector<ClassRecord> records;  // sorted by (n, form) when complete
  bool complete = false;
  std::uint64_t canonizations = 0;
};

// Canonical augmentation over point sets containing a frame, level by level.
// Resumes from `resume` when given; stops early (complete = false) when the
// time budget runs out.
SearchState search(const PlaneKernel& K, const SearchOptions& opt, const SearchState* resume = nullptr);

void save_checkpoint(const std::string& path, const SearchState& st);
SearchState load_checkpoint(const std::string& path);

enum class Predicate { minimal, optimal };
std::string to_string(Predicate p);
Predicate parse_predicate(const std::string& s);

struct EquivClass {
  PointSet canonical;
  Mask128 mask;
  std::size_t n = 0;
  std::int64_t mu = 0;
  std::uint64_t stabilizer_order = 0;
  std::uint64_t orbit_size = 0;
  bool minimal = false;
  bool optimal = false;
  std::int64_t coverage_min = 0, coverage_max = 0;
};

struct Spectrum {
  int q = 0;
  std::int64_t mu = 0;
  Predicate predicate = Predicate::minimal;
  int min_size = 0, max_size = 0;
  std::map<int, std::int64_t> counts;
  std::vector<EquivClass> classes;  // sorted by (n, canonical form)
  bool complete = false;
};

// classes from a finished search matching mu and the predicate within [min_size, max_size]
Spectrum spectrum_from(const PlaneKernel& K, const SearchState& st, std::int64_t mu, Predicate pred, int min_size,
                       int max_size);

// default size range: [ceil(sqrt(2 mu q)), min(q+mu+1, q^2+q)]
std::pair<int, int> default_size_range(int q, std::int64_t mu);

Spectrum enumerate_classes(const Space& plane, std::int64_t mu, Predicate pred, std::optional<int> min_size = std::nullopt,
                           std::optional<int> max_size = std::nullopt, const SearchOptions& extra = {});

// Number of labelled (not isomorph-reduced) sets per size by scanning every
// subset; the double-count oracle for orbit-stabilizer checks.
std::map<int, std::uint64_t> count_labelled(const PlaneKernel& K, std::int64_t mu, Predicate pred, int min_size,
                                            int max_size);
namespace reference {
std::map<int, std::uint64_t> count_labelled(const PlaneKernel& K, std::int64_t mu, Predicate pred, int min_size,
                                            int max_size);
}

}  // namespace mcf::classify
