#include "mcf/tables.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mcf/bounds.hpp"
#include "mcf/classify.hpp"
#include "mcf/singer.hpp"

namespace mcf::tables {

namespace detail {
extern const std::string_view kSpectrum12;
extern const std::string_view kOptimal;
extern const std::string_view kMinimal;
extern const std::string_view kThreeWeights;
}  // namespace detail

namespace {

// data lines with comments and blanks removed, split into whitespace tokens
std::vector<std::vector<std::string>> rows_of(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (!tok.empty()) out.push_back(std::move(tok));
  }
  return out;
}

std::pair<int, std::int64_t> pair_of(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) throw std::runtime_error("malformed size:count entry '" + s + "'");
  return {std::stoi(s.substr(0, c)), std::stoll(s.substr(c + 1))};
}

std::string counts_text(const SizeCounts& c) {
  std::string s;
  for (auto [n, k] : c) s += (s.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(k);
  return s;
}

bool wanted(const std::vector<int>& qs, int q) { return std::find(qs.begin(), qs.end(), q) != qs.end(); }

std::string spectrum_line(const SpectrumRow& r) {
  return "q=" + std::to_string(r.q) + " smallest=" + std::to_string(r.smallest_size) + ":" +
         std::to_string(r.smallest_count) + " trivial=" + std::to_string(r.trivial_lower) +
         " largest=" + std::to_string(r.largest_size) + " spectrum=" + counts_text(r.counts);
}

std::string optimal_line(const OptimalEntry& e) {
  return "q=" + std::to_string(e.q) + " mu=" + std::to_string(e.mu) + " n=" + std::to_string(e.n) +
         " count=" + std::to_string(e.count);
}

std::string minimal_line(const MinimalRow& r) {
  return "q=" + std::to_string(r.q) + " mu=" + std::to_string(r.mu) + " " + counts_text(r.counts);
}

std::string three_line(const ThreeWeightsRow& r) {
  auto c = singer::weight_class(r.w);
  return "q=" + std::to_string(r.q) + " class=" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
         std::to_string(c[2]) + " n=" + std::to_string(r.n) + " mu=" + std::to_string(r.mu) + " gamma=" + r.gamma +
         " c=" + std::to_string(r.c);
}

void require_complete_scale(int q) {
  if (q > 5) throw std::invalid_argument("complete classification over all mu is limited to q <= 5");
}

// one full search per q, shared by every mu
classify::SearchState full_search(const PlaneKernel& K, std::int64_t mu_min) {
  classify::SearchOptions o;
  o.mu_min = mu_min;
  o.min_size = 4;
  o.max_size = K.q() * K.q() + K.q();
  return classify::search(K, o);
}

std::string join(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

}  // namespace

std::vector<std::string> table_names() { return {"spectrum12", "optimal", "minimal", "three-weights"}; }

std::string_view raw(const std::string& which) {
  if (which == "spectrum12") return detail::kSpectrum12;
  if (which == "optimal") return detail::kOptimal;
  if (which == "minimal") return detail::kMinimal;
  if (which == "three-weights") return detail::kThreeWeights;
  throw std::invalid_argument("unknown table '" + which + "'");
}

std::vector<SpectrumRow> spectrum12() {
  std::vector<SpectrumRow> out;
  for (const auto& t : rows_of(detail::kSpectrum12)) {
    SpectrumRow r;
    r.q = std::stoi(t.at(0));
    std::tie(r.smallest_size, r.smallest_count) = pair_of(t.at(1));
    r.trivial_lower = std::stoi(t.at(2));
    r.largest_size = std::stoi(t.at(3));
    for (std::size_t i = 4; i < t.size(); ++i) r.counts.insert(pair_of(t[i]));
    out.push_back(r);
  }
  return out;
}

std::vector<OptimalEntry> optimal() {
  std::vector<OptimalEntry> out;
  for (const auto& t : rows_of(detail::kOptimal))
    out.push_back({std::stoi(t.at(0)), std::stoi(t.at(1)), std::stoll(t.at(2)), std::stoll(t.at(3))});
  return out;
}

std::vector<MinimalRow> minimal() {
  std::vector<MinimalRow> out;
  for (const auto& t : rows_of(detail::kMinimal)) {
    MinimalRow r;
    r.q = std::stoi(t.at(0));
    r.mu = std::stoll(t.at(1));
    for (std::size_t i = 2; i < t.size(); ++i) r.counts.insert(pair_of(t[i]));
    out.push_back(r);
  }
  return out;
}

std::vector<ThreeWeightsRow> three_weights() {
  std::vector<ThreeWeightsRow> out;
  for (const auto& t : rows_of(detail::kThreeWeights)) {
    ThreeWeightsRow r;
    r.q = std::stoi(t.at(0));
    r.w = {std::stoi(t.at(1)), std::stoi(t.at(2)), std::stoi(t.at(3))};
    r.n = std::stoll(t.at(4));
    r.mu = std::stoll(t.at(5));
    r.gamma = t.at(6);
    r.c = std::stoll(t.at(7));
    out.push_back(r);
  }
  return out;
}

std::vector<int> listed_qs(const std::string& which) {
  std::set<int> s;
  if (which == "spectrum12")
    for (const auto& r : spectrum12()) s.insert(r.q);
  else if (which == "optimal")
    for (const auto& r : optimal()) s.insert(r.q);
  else if (which == "minimal")
    for (const auto& r : minimal()) s.insert(r.q);
  else if (which == "three-weights")
    for (const auto& r : three_weights()) s.insert(r.q);
  else
    throw std::invalid_argument("unknown table '" + which + "'");
  return {s.begin(), s.end()};
}

std::vector<int> default_qs(const std::string& which) {
  if (which == "spectrum12") return {3, 4, 5, 7};
  if (which == "optimal" || which == "minimal") return {3, 4, 5};
  return listed_qs(which);
}

std::string expected_text(const std::string& which, const std::vector<int>& qs) {
  std::vector<std::string> lines;
  if (which == "spectrum12") {
    for (const auto& r : spectrum12())
      if (wanted(qs, r.q)) lines.push_back(spectrum_line(r));
  } else if (which == "optimal") {
    auto rows = optimal();
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      return std::tie(a.q, a.mu, a.n) < std::tie(b.q, b.mu, b.n);
    });
    for (const auto& r : rows)
      if (wanted(qs, r.q)) lines.push_back(optimal_line(r));
  } else if (which == "minimal") {
    for (const auto& r : minimal())
      if (wanted(qs, r.q)) lines.push_back(minimal_line(r));
  } else if (which == "three-weights") {
    for (const auto& r : three_weights())
      if (wanted(qs, r.q)) lines.push_back(three_line(r));
  } else {
    throw std::invalid_argument("unknown table '" + which + "'");
  }
  return join(lines);
}

std::string computed_text(const std::string& which, const std::vector<int>& qs_in) {
  std::vector<int> qs = qs_in;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::vector<std::string> lines;
  for (int q : qs) {
    if (which == "three-weights") {
      auto F = make_field(q);
      auto w = singer::singer_weights(*F, 3);
      auto ev = singer::bdc_evaluate(w, 1);
      ThreeWeightsRow r;
      r.q = q;
      r.w = {w[0], w[1], w[2]};
      r.n = ev.set_size;
      r.mu = ev.mu;
      r.gamma = ev.gamma ? ev.gamma->decimal(4) : "undefined";
      r.c = ev.gamma ? singer::density_margin(*ev.gamma, q).value_or(0) : 0;
      lines.push_back(three_line(r));
      continue;
    }
    Space plane(2, make_field(q));
    PlaneKernel K(plane);
    if (which == "spectrum12") {
      SpectrumRow r;
      r.q = q;
      for (int s = static_cast<int>(std::max<std::int64_t>(4, bounds::length_lower_trivial(q, 1))); s <= q + 2; ++s) {
        classify::SearchOptions o;
        o.mu_min = 1;
        o.min_size = s;
        o.max_size = s;
        auto sp = classify::spectrum_from(K, classify::search(K, o), 1, classify::Predicate::minimal, s, s);
        if (!sp.counts.empty()) {
          r.smallest_size = s;
          r.smallest_count = sp.counts.begin()->second;
          break;
        }
      }
      r.trivial_lower = static_cast<int>(bounds::length_lower_trivial(q, 2));
      r.largest_size = static_cast<int>(bounds::size_upper(q, 2));
      r.counts = classify::enumerate_classes(plane, 2, classify::Predicate::minimal).counts;
      lines.push_back(spectrum_line(r));
    } else if (which == "optimal") {
      require_complete_scale(q);
      auto st = full_search(K, 2);
      for (std::int64_t mu = 2; mu <= bounds::mu_max(q); ++mu) {
        auto sp = classify::spectrum_from(K, st, mu, classify::Predicate::optimal, 4, q * q + q);
        for (auto [n, c] : sp.counts) lines.push_back(optimal_line({q, n, mu, c}));
      }
    } else if (which == "minimal") {
      require_complete_scale(q);
      auto st = full_search(K, 3);
      for (std::int64_t mu = 3; mu <= bounds::mu_max(q); ++mu) {
        auto [lo, hi] = classify::default_size_range(q, mu);
        auto sp = classify::spectrum_from(K, st, mu, classify::Predicate::minimal, lo, hi);
        lines.push_back(minimal_line({q, mu, sp.counts}));
      }
    } else {
      throw std::invalid_argument("unknown table '" + which + "'");
    }
  }
  return join(lines);
}

std::string unified_diff(const std::string& a, const std::string& b, const std::string& label_a,
                         const std::string& label_b) {
  if (a == b) return {};
  auto split = [](const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
  };
  auto x = split(a), y = split(b);
  const std::size_t n = x.size(), m = y.size();
  std::vector<std::vector<int>> L(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = m; j-- > 0;)
      L[i][j] = x[i] == y[j] ? L[i + 1][j + 1] + 1 : std::max(L[i + 1][j], L[i][j + 1]);
  std::string out = "--- " + label_a + "\n+++ " + label_b + "\n";
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && x[i] == y[j]) {
      out += " " + x[i++] + "\n";
      ++j;
    } else if (j < m && (i == n || L[i][j + 1] >= L[i + 1][j])) {
      out += "+" + y[j++] + "\n";
    } else {
      out += "-" + x[i++] + "\n";
    }
  }
  return out;
}

TableCheck check_table(const std::string& which, const std::vector<int>& qs) {
  TableCheck c;
  c.which = which;
  c.qs = qs;
  c.expected = expected_text(which, qs);
  c.computed = computed_text(which, qs);
  c.diff = unified_diff(c.expected, c.computed, "expected/" + which, "computed/" + which);
  return c;
}

}  // namespace mcf::tables
