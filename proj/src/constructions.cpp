#include "mcf/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcf::constructions {

std::string to_string(ClaimedKind k) { return k == ClaimedKind::OS ? "OS" : "MCF"; }

namespace {

PointIdx pt(const Space& sp, std::initializer_list<Elem> v) { return sp.index_of(std::vector<Elem>(v)); }

void need(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void need_plane(const Space& sp, const std::string& family) { need(sp.dim() == 2, family + " is defined in PG(2,q)"); }

int isqrt_exact(int q) {
  int r = 0;
  while ((r + 1) * (r + 1) <= q) ++r;
  return r * r == q ? r : -1;
}

// sqrt(q) for square q = p^h (h even), else -1
int square_root_order(const Space& sp) { return sp.field().h() % 2 == 0 ? isqrt_exact(sp.q()) : -1; }

ConstructionResult base(const Space& sp, std::string name, PointSet S) {
  ConstructionResult r;
  r.name = std::move(name);
  r.parameters["q"] = sp.q();
  r.parameters["N"] = sp.dim();
  r.point_set = std::move(S);
  return r;
}

std::int64_t pg(int N, int q) { return static_cast<std::int64_t>(pg_size(N, q)); }

}  // namespace

void verify(const Space& space, ConstructionResult& r) {
  auto& d = r.discrepancies;
  d.clear();
  const auto& S = r.point_set;
  if (static_cast<std::int64_t>(S.size()) != r.claimed_n)
    d.push_back("size " + std::to_string(S.size()) + " != claimed " + std::to_string(r.claimed_n));
  r.report = check_saturating(space, S, std::max<std::int64_t>(r.claimed_mu, 1), r.mode);
  const auto& rep = r.report;
  if (!rep.m1) d.push_back("set does not span");
  if (!rep.m2) d.push_back("set is the whole space");
  if (!rep.m3) d.push_back("minimum coverage " + std::to_string(rep.mu) + " < claimed mu " + std::to_string(r.claimed_mu));
  if (r.mu_exact && rep.mu != r.claimed_mu)
    d.push_back("minimum coverage " + std::to_string(rep.mu) + " != claimed mu " + std::to_string(r.claimed_mu));
  if (r.claimed_kind == ClaimedKind::OS) {
    if (!rep.optimal) d.push_back("coverage is not constant");
    if (rep.coverage_max != r.claimed_mu) d.push_back("constant coverage differs from claimed mu");
  }
  if (rep.saturating()) {
    if (r.claimed_gamma && rep.gamma != r.claimed_gamma)
      d.push_back("gamma " + rep.gamma->str() + " != claimed " + r.claimed_gamma->str());
    if (r.gamma_upper_bound && *rep.gamma > *r.gamma_upper_bound)
      d.push_back("gamma " + rep.gamma->str() + " exceeds bound " + r.gamma_upper_bound->str());
    if (r.claimed_minimal && rep.minimal != *r.claimed_minimal)
      d.push_back(std::string("minimality ") + (rep.minimal ? "holds" : "fails") + " contrary to claim");
  }
  if (r.claimed_distance || r.claimed_kind == ClaimedKind::OS) {
    r.minimum_distance = minimum_distance(space, S);
    if (r.claimed_distance && r.minimum_distance != r.claimed_distance)
      d.push_back("minimum distance " + (r.minimum_distance ? std::to_string(*r.minimum_distance) : "none") +
                  " != claimed " + std::to_string(*r.claimed_distance));
  }
  if (r.size_bound) {
    // |S| <= A + B*sqrt(q), compared exactly
    auto [A, B] = *r.size_bound;
    std::int64_t lhs = static_cast<std::int64_t>(S.size()) - A;
    if (lhs > 0 && (B <= 0 || lhs * lhs > B * B * space.q()))
      d.push_back("size exceeds the bound expression");
  }
  r.verified = d.empty();
}

ConstructionResult oval(const Space& sp) {
  need_plane(sp, "oval");
  need(sp.q() % 2 == 1, "oval needs odd q");
  const Field& F = sp.field();
  PointSet S = sp.empty_set();
  for (Elem t = 0; t < static_cast<Elem>(sp.q()); ++t) S.insert(pt(sp, {1, t, F.mul(t, t)}));
  S.insert(pt(sp, {0, 0, 1}));
  auto r = base(sp, "oval", S);
  int q = sp.q();
  r.claimed_n = q + 1;
  r.claimed_mu = (q - 1) / 2;
  r.claimed_kind = ClaimedKind::MCF;
  r.claimed_gamma = Rational(q + 1, q);
  r.claimed_distance = 4;
  verify(sp, r);
  return r;
}

ConstructionResult hyperoval(const Space& sp) {
  need_plane(sp, "hyperoval");
  need(sp.q() % 2 == 0 && sp.q() >= 4, "hyperoval needs even q >= 4");
  const Field& F = sp.field();
  PointSet S = sp.empty_set();
  for (Elem t = 0; t < static_cast<Elem>(sp.q()); ++t) S.insert(pt(sp, {1, t, F.mul(t, t)}));
  S.insert(pt(sp, {0, 0, 1}));
  S.insert(pt(sp, {0, 1, 0}));  // nucleus of x1^2 = x0 x2
  auto r = base(sp, "hyperoval", S);
  int q = sp.q();
  r.claimed_n = q + 2;
  r.claimed_mu = (q + 2) / 2;
  r.claimed_kind = ClaimedKind::OS;
  r.claimed_distance = 4;
  verify(sp, r);
  return r;
}

namespace {

PointSet denniston_points(const Space& sp, int s) {
  const Field& F = sp.field();
  Elem alpha = 0;
  while (F.trace(alpha) != 1) ++alpha;
  PointSet S = sp.empty_set();
  for (Elem x = 0; x < static_cast<Elem>(sp.q()); ++x)
    for (Elem y = 0; y < static_cast<Elem>(sp.q()); ++y) {
      Elem v = F.add(F.add(F.mul(alpha, F.mul(x, x)), F.mul(x, y)), F.mul(y, y));
      // H = GF(2)-span of the first k polynomial basis elements = codes below s
      if (v < static_cast<Elem>(s)) S.insert(pt(sp, {1, x, y}));
    }
  return S;
}

int check_denniston_args(const Space& sp, int s) {
  need_plane(sp, "denniston");
  need(sp.field().p() == 2 && sp.q() >= 4, "denniston needs q = 2^v >= 4");
  need(s >= 2 && s <= sp.q() && (s & (s - 1)) == 0, "denniston needs s = 2^k with 1 <= k <= v");
  return s;
}

}  // namespace

ConstructionResult denniston(const Space& sp, int s) {
  check_denniston_args(sp, s);
  auto r = base(sp, "denniston", denniston_points(sp, s));
  r.parameters["s"] = s;
  int q = sp.q();
  r.claimed_n = static_cast<std::int64_t>(s - 1) * q + s;
  r.claimed_mu = static_cast<std::int64_t>(s - 1) * r.claimed_n / 2;
  r.claimed_kind = ClaimedKind::OS;
  r.claimed_distance = s == 2 ? 4 : 3;
  verify(sp, r);
  // maximal arc: every line meets it in 0 or s points
  for (int k : line_counts(sp, r.point_set))
    if (k != 0 && k != s) {
      r.discrepancies.push_back("a line meets the arc in " + std::to_string(k) + " points");
      r.verified = false;
      break;
    }
  return r;
}

ConstructionResult hermitian(const Space& sp) {
  need_plane(sp, "hermitian");
  int r0 = square_root_order(sp);
  need(r0 > 0, "hermitian needs square q");
  const Field& F = sp.field();
  PointSet S = sp.empty_set();
  for (PointIdx p = 0; p < sp.num_points(); ++p) {
    auto c = sp.coords(p);
    Elem v = 0;
    for (Elem x : c) v = F.add(v, F.pow(x, r0 + 1));
    if (v == 0) S.insert(p);
  }
  auto r = base(sp, "hermitian", S);
  std::int64_t q = sp.q();
  r.claimed_n = q * r0 + 1;
  r.claimed_mu = (q * q - q) / 2;
  r.claimed_kind = ClaimedKind::OS;
  r.claimed_distance = 3;
  verify(sp, r);
  return r;
}

ConstructionResult baer(const Space& sp) {
  need_plane(sp, "baer");
  int r0 = square_root_order(sp);
  need(r0 > 0, "baer needs square q");
  const Field& F = sp.field();
  int d = F.h() / 2;
  PointSet S = sp.empty_set();
  for (PointIdx p = 0; p < sp.num_points(); ++p) {
    auto c = sp.coords(p);
    if (std::all_of(c.begin(), c.end(), [&](Elem x) { return F.in_subfield(x, d); })) S.insert(p);
  }
  auto r = base(sp, "baer", S);
  std::int64_t q = sp.q();
  r.claimed_n = q + r0 + 1;
  r.claimed_mu = (q + r0) / 2;
  r.claimed_kind = ClaimedKind::OS;
  r.claimed_distance = 3;
  verify(sp, r);
  return r;
}

namespace {

// x^2 + b x y + c y^2 with no root; least (b, c) in code order
std::pair<Elem, Elem> irreducible_binary_quadratic(const Field& F) {
  for (Elem b = 0; b < static_cast<Elem>(F.q()); ++b)
    for (Elem c = 0; c < static_cast<Elem>(F.q()); ++c) {
      bool root = false;
      for (Elem x = 0; x < static_cast<Elem>(F.q()) && !root; ++x)
        root = F.add(F.add(F.mul(x, x), F.mul(b, x)), c) == 0;
      if (!root) return {b, c};
    }
  throw std::logic_error("no irreducible quadratic");
}

PointSet quadric_points(const Space& sp) {
  need(sp.dim() == 3, "elliptic_quadric is defined in PG(3,q)");
  const Field& F = sp.field();
  auto [b, c] = irreducible_binary_quadratic(F);
  PointSet S = sp.empty_set();
  for (PointIdx p = 0; p < sp.num_points(); ++p) {
    auto x = sp.coords(p);
    Elem f = F.add(F.add(F.mul(x[2], x[2]), F.mul(b, F.mul(x[2], x[3]))), F.mul(c, F.mul(x[3], x[3])));
    if (F.add(F.mul(x[0], x[1]), f) == 0) S.insert(p);
  }
  return S;
}

}  // namespace

ConstructionResult elliptic_quadric(const Space& sp) {
  need(sp.dim() == 3, "elliptic_quadric is defined in PG(3,q)");
  auto r = base(sp, "elliptic_quadric", quadric_points(sp));
  std::int64_t q = sp.q();
  r.claimed_n = q * q + 1;
  r.claimed_mu = (q * q - q) / 2;
  r.claimed_kind = ClaimedKind::OS;
  r.claimed_distance = 4;
  verify(sp, r);
  return r;
}

PointSet cap_points(const Space& sp, int k) {
  PointSet full;
  if (sp.dim() == 2)
    full = sp.q() % 2 ? oval(sp).point_set : hyperoval(sp).point_set;
  else if (sp.dim() == 3)
    full = quadric_points(sp);
  else
    throw std::invalid_argument("caps are provided for N = 2 and N = 3");
  auto pts = full.indices();
  need(k >= 2 && k <= static_cast<int>(pts.size()), "cap size k must be in [2, " + std::to_string(pts.size()) + "]");
  pts.resize(k);
  return sp.set_of(pts);
}

std::optional<std::vector<std::int64_t>> constant_secant_distribution(const Space& sp, const PointSet& K) {
  auto k = line_counts(sp, K);
  std::optional<std::vector<std::int64_t>> first;
  for (PointIdx P : K.indices()) {
    std::vector<std::int64_t> x(sp.q() + 2, 0);
    for (LineIdx l : sp.lines_through(P)) ++x[k[l]];
    if (!first)
      first = x;
    else if (*first != x)
      return std::nullopt;
  }
  return first;
}

ConstructionResult complement(const Space& sp, const std::string& inner, const Params& p) {
  PointSet K;
  std::optional<std::int64_t> closed_mu;
  std::int64_t q = sp.q();
  std::int64_t lines_per_point = pg(sp.dim() - 1, sp.q());
  int r0 = square_root_order(sp);
  if (inner == "hyperoval" || inner == "denniston") {
    int s = inner == "hyperoval" ? 2 : check_denniston_args(sp, p.s.value_or(0));
    need(sp.field().p() == 2 && s < sp.q(), "complement of a maximal arc needs s < q");
    K = inner == "hyperoval" ? hyperoval(sp).point_set : denniston_points(sp, s);
    closed_mu = (q + 1) * choose2(q + 1 - s);
  } else if (inner == "hermitian") {
    K = hermitian(sp).point_set;
    closed_mu = choose2(q) + q * choose2(q - r0);
  } else if (inner == "baer") {
    K = baer(sp).point_set;
    closed_mu = (r0 + 1) * choose2(q - r0) + (q - r0) * choose2(q);
  } else if (inner == "oval" || inner == "elliptic_quadric" || inner == "cap") {
    if (inner == "cap")
      K = cap_points(sp, p.k.value_or(0));
    else
      K = inner == "oval" ? oval(sp).point_set : quadric_points(sp);
    std::int64_t k = static_cast<std::int64_t>(K.size());
    closed_mu = (k - 1) * choose2(q - 1) + (lines_per_point - k + 1) * choose2(q);
  } else {
    throw std::invalid_argument("unknown inner family for complement: " + inner);
  }
  auto dist = constant_secant_distribution(sp, K);
  need(dist.has_value(), "inner set does not have a constant per-point secant distribution");
  std::int64_t mu = 0;
  for (std::size_t i = 1; i < dist->size(); ++i) mu += (*dist)[i] * choose2(q + 1 - static_cast<std::int64_t>(i));

  auto r = base(sp, "complement", K.complement());
  r.parameters["inner_size"] = static_cast<std::int64_t>(K.size());
  if (p.s) r.parameters["s"] = *p.s;
  if (p.k) r.parameters["k"] = *p.k;
  r.claimed_n = pg(sp.dim(), sp.q()) - static_cast<std::int64_t>(K.size());
  r.claimed_mu = mu;
  r.claimed_kind = ClaimedKind::OS;
  r.claimed_distance = 3;
  verify(sp, r);
  if (closed_mu && *closed_mu != mu) {
    r.discrepancies.push_back("secant-distribution sum " + std::to_string(mu) + " != closed form " +
                              std::to_string(*closed_mu));
    r.verified = false;
  }
  return r;
}

namespace {
// the line x0 = 0 is the lexicographically least line: points 0..q
std::vector<PointIdx> base_line(const Space& sp) {
  auto pts = sp.line_points(0);
  return {pts.begin(), pts.end()};
}
}  // namespace

ConstructionResult line_plus_two_points(const Space& sp) {
  need_plane(sp, "line_plus_two_points");
  auto pts = base_line(sp);
  pts.push_back(pt(sp, {1, 0, 0}));
  pts.push_back(pt(sp, {1, 0, 1}));
  auto r = base(sp, "line_plus_two_points", sp.set_of(pts));
  std::int64_t q = sp.q();
  r.claimed_n = q + 3;
  r.claimed_mu = 2;
  r.claimed_kind = ClaimedKind::MCF;
  r.claimed_minimal = true;
  r.claimed_gamma = gamma_formula(q, q + 3, pg(2, sp.q()), choose3(q + 1) + 1, 2);
  verify(sp, r);
  return r;
}

namespace {
ConstructionResult chord_family(const Space& sp, const std::string& name, PointIdx T) {
  need_plane(sp, name);
  need(sp.q() >= 4, name + " needs q >= 4");
  PointIdx P = pt(sp, {0, 0, 1}), Q = pt(sp, {0, 1, 0});
  std::vector<PointIdx> pts;
  for (PointIdx x : base_line(sp))
    if (x != P && x != Q) pts.push_back(x);
  pts.push_back(pt(sp, {1, 0, 0}));
  pts.push_back(pt(sp, {1, 0, 1}));
  pts.push_back(T);
  auto r = base(sp, name, sp.set_of(pts));
  r.claimed_n = sp.q() + 2;
  r.claimed_mu = 2;
  r.mu_exact = false;
  r.claimed_kind = ClaimedKind::MCF;
  r.claimed_minimal = true;
  verify(sp, r);
  return r;
}
}  // namespace

// P,R,S and Q,R,T collinear with P=(0,0,1), Q=(0,1,0), R=(1,0,0)
ConstructionResult two_chords_config(const Space& sp) { return chord_family(sp, "two_chords_config", pt(sp, {1, 1, 0})); }

// P,R,S,T collinear
ConstructionResult aligned_config(const Space& sp) { return chord_family(sp, "aligned_config", pt(sp, {1, 0, 2})); }

ConstructionResult concurrent_lines(const Space& sp, int L) {
  need_plane(sp, "concurrent_lines");
  need(L >= 2 && L <= sp.q(), "concurrent_lines needs 2 <= L <= q");
  PointSet S = sp.empty_set();
  auto through = sp.lines_through(0);
  for (int i = 0; i < L; ++i)
    for (PointIdx x : sp.line_points(through[i])) S.insert(x);
  auto r = base(sp, "concurrent_lines", S);
  r.parameters["L"] = L;
  std::int64_t q = sp.q();
  r.claimed_n = 1 + L * q;
  r.claimed_mu = choose2(L) * q;
  r.claimed_kind = ClaimedKind::OS;
  verify(sp, r);
  return r;
}

ConstructionResult pencil_partial(const Space& sp, int b) {
  need_plane(sp, "pencil_partial");
  need(b >= 0 && b <= sp.q() - 1, "pencil_partial needs 0 <= b <= q-1");
  PointSet S = sp.empty_set();
  auto through = sp.lines_through(0);
  for (int i = 0; i < sp.q(); ++i)
    for (PointIdx x : sp.line_points(through[i])) S.insert(x);
  int added = 0;
  for (PointIdx x : sp.line_points(through[sp.q()]))
    if (added < b && S.insert(x)) ++added;
  auto r = base(sp, "pencil_partial", S);
  r.parameters["b"] = b;
  std::int64_t q = sp.q();
  r.claimed_n = 1 + q * q + b;
  r.claimed_mu = choose2(b + 1) + choose2(q) * q;
  r.claimed_kind = ClaimedKind::OS;
  verify(sp, r);
  return r;
}

namespace {
PointSet coordinate_triangle(const Space& sp) {
  PointSet S = sp.empty_set();
  for (PointIdx p = 0; p < sp.num_points(); ++p) {
    auto c = sp.coords(p);
    if (c[0] == 0 || c[1] == 0 || c[2] == 0) S.insert(p);
  }
  return S;
}
}  // namespace

ConstructionResult triangle(const Space& sp) {
  need_plane(sp, "triangle");
  auto r = base(sp, "triangle", coordinate_triangle(sp));
  std::int64_t q = sp.q();
  r.claimed_n = 3 * q;
  r.claimed_mu = 3 * (q - 1);
  r.claimed_kind = ClaimedKind::OS;
  verify(sp, r);
  return r;
}

ConstructionResult complement_vertexless_triangle(const Space& sp) {
  need_plane(sp, "complement_vertexless_triangle");
  need(sp.q() >= 3, "complement_vertexless_triangle needs q >= 3");
  PointSet T = coordinate_triangle(sp);
  for (auto v : {pt(sp, {1, 0, 0}), pt(sp, {0, 1, 0}), pt(sp, {0, 0, 1})}) T.erase(v);
  auto r = base(sp, "complement_vertexless_triangle", T.complement());
  std::int64_t q = sp.q();
  r.claimed_n = q * q - 2 * q + 4;
  r.claimed_mu = 1 + choose2(q) + (q - 1) * choose2(q - 2);
  r.claimed_kind = ClaimedKind::OS;
  verify(sp, r);
  return r;
}

ConstructionResult disjoint_copies(const Space& sp, const std::vector<PointSet>& copies) {
  need(!copies.empty(), "disjoint_copies needs at least one set");
  PointSet U = sp.empty_set();
  for (const auto& c : copies) {
    need(c.universe() == sp.num_points(), "copy is not over this space");
    need(U.disjoint(c), "copies must be pairwise disjoint");
    auto rep = check_saturating(sp, c, 1);
    need(rep.saturating(), "every copy must be 1-saturating");
    U = U.united(c);
  }
  auto r = base(sp, "disjoint_copies", U);
  r.parameters["copies"] = static_cast<std::int64_t>(copies.size());
  r.claimed_n = static_cast<std::int64_t>(U.size());
  r.claimed_mu = static_cast<std::int64_t>(copies.size());
  r.mu_exact = false;
  r.claimed_kind = ClaimedKind::MCF;
  verify(sp, r);
  return r;
}

ConstructionResult disjoint_copies(const Space& sp, int copies) {
  need_plane(sp, "disjoint_copies");
  need(copies >= 1, "copies must be >= 1");
  PointSet base_set = sp.q() % 2 ? oval(sp).point_set : hyperoval(sp).point_set;
  auto g = singer_generator(sp.field());
  std::vector<PointSet> chosen;
  PointSet used = sp.empty_set();
  PointSet cur = base_set;
  for (std::size_t shift = 0; shift < sp.num_points() && static_cast<int>(chosen.size()) < copies; ++shift) {
    if (used.disjoint(cur)) {
      chosen.push_back(cur);
      used = used.united(cur);
    }
    cur = apply_collineation(sp, g, cur);
  }
  need(static_cast<int>(chosen.size()) == copies, "could not find that many disjoint Singer images");
  return disjoint_copies(sp, chosen);
}

namespace {

// coordinates over GF(q) of the parabola {(x, x^2) : x in GF(q^t)} in AG(2t, q)
std::vector<std::vector<Elem>> reduced_parabola(const Field& small, int t) {
  const Field& F = small;
  if (t == 1) {
    std::vector<std::vector<Elem>> out;
    for (Elem x = 0; x < static_cast<Elem>(F.q()); ++x) out.push_back({x, F.mul(x, x)});
    return out;
  }
  Field big(F.p(), F.h() * t);
  // embed the small field: r = least root of the small modulus lying in the degree-h subfield
  auto eval = [&](Elem r) {
    Elem v = 0, pw = 1;
    for (int c : F.modulus()) {
      v = big.add(v, big.mul(static_cast<Elem>(c), pw));
      pw = big.mul(pw, r);
    }
    return v;
  };
  Elem root = 0;
  bool found = false;
  for (Elem r = 1; r < static_cast<Elem>(big.q()) && !found; ++r)
    if (big.in_subfield(r, F.h()) && eval(r) == 0) {
      root = r;
      found = true;
    }
  if (!found) throw std::logic_error("subfield embedding failed");
  std::vector<Elem> embed(F.q());
  for (Elem e = 0; e < static_cast<Elem>(F.q()); ++e) {
    Elem v = 0, pw = 1, x = e;
    for (int i = 0; i < F.h(); ++i) {
      v = big.add(v, big.mul(x % F.p(), pw));
      pw = big.mul(pw, root);
      x /= F.p();
    }
    embed[e] = v;
  }
  // coordinates in the basis 1, g, ..., g^(t-1) of the big field over the small one
  std::vector<std::vector<Elem>> coord(big.q());
  std::vector<Elem> digits(t, 0);
  while (true) {
    Elem z = 0, pw = 1;
    for (int k = 0; k < t; ++k) {
      z = big.add(z, big.mul(embed[digits[k]], pw));
      pw = big.mul(pw, big.generator());
    }
    coord[z] = digits;
    int k = 0;
    while (k < t && ++digits[k] == static_cast<Elem>(F.q())) digits[k++] = 0;
    if (k == t) break;
  }
  std::vector<std::vector<Elem>> out;
  for (Elem x = 0; x < static_cast<Elem>(big.q()); ++x) {
    if (coord[x].empty()) throw std::logic_error("incomplete basis");
    std::vector<Elem> v = coord[x];
    const auto& y = coord[big.mul(x, x)];
    v.insert(v.end(), y.begin(), y.end());
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

ConstructionResult even_q_set(const Space& sp, bool square_variant) {
  const Field& F = sp.field();
  const int q = sp.q(), N = sp.dim();
  need(F.p() == 2 && q > 2, "even_q_set needs even q > 2");
  int r0 = square_root_order(sp);
  if (square_variant) need(r0 > 0 && N == 2, "the square-q variant is provided for square q and N = 2");
  // s = ceil((1 + sqrt(4q-7))/2): least s with (2s-1)^2 >= 4q-7
  int s = 1;
  while ((2 * s - 1) * (2 * s - 1) < 4 * q - 7) ++s;

  PointSet S = sp.empty_set();
  std::vector<Elem> v(N + 1);
  auto embed = [&](int i, const std::vector<Elem>& y) {
    std::fill(v.begin(), v.end(), 0);
    v[i] = 1;
    for (std::size_t k = 0; k < y.size(); ++k) v[i + 1 + k] = y[k];
    S.insert(point_index(N, q, v));
  };
  for (int i = 0; i < N; ++i) {
    int j = N - i;
    if (j % 2 == 0) {
      for (auto& y : reduced_parabola(F, j / 2)) embed(i, y);
    } else if (j == 1) {
      int m = square_variant ? r0 : s;
      for (Elem a = 0; a < static_cast<Elem>(m); ++a) embed(i, {a});
    } else {
      for (auto y : reduced_parabola(F, (j - 1) / 2)) {
        y.push_back(0);
        for (Elem a = 0; a < static_cast<Elem>(s); ++a) {
          y.back() = a;
          embed(i, y);
        }
      }
    }
  }
  std::fill(v.begin(), v.end(), 0);
  v[N] = 1;
  S.insert(point_index(N, q, v));

  auto r = base(sp, square_variant ? "even_q_set_square" : "even_q_set", S);
  r.parameters["s"] = square_variant ? r0 : s;
  r.mode = CountingMode::distinct;
  r.claimed_mu = (q - 2) / 2;
  r.mu_exact = false;
  r.claimed_kind = ClaimedKind::MCF;
  r.claimed_n = static_cast<std::int64_t>(S.size());
  if (square_variant) {
    std::int64_t expect = 0, pw = 1;
    for (int i = 0; i <= N; ++i, pw *= r0) expect += pw;
    r.claimed_n = expect;
    r.gamma_upper_bound = Rational((r0 + 1) * (r0 + 1), q - 2);
  } else {
    // 1 + s * sum_{i<N} q^(i/2), split into integer and sqrt(q) parts
    std::int64_t A = 1, B = 0, pw = 1;
    for (int i = 0; i < N; ++i) {
      if (i % 2 == 0) {
        A += s * pw;
      } else {
        B += s * pw;
        pw *= q;
      }
    }
    r.size_bound = std::make_pair(A, B);
  }
  verify(sp, r);
  if (!r.report.m3) throw std::runtime_error("even_q_set: constructed set misses the (q-2)/2 distinct-secant property");
  return r;
}

std::vector<std::string> family_names() {
  return {"oval",       "hyperoval",    "denniston",        "hermitian",      "baer",
          "elliptic_quadric", "complement", "line_plus_two_points", "two_chords_config", "aligned_config",
          "concurrent_lines", "pencil_partial", "triangle", "complement_vertexless_triangle", "disjoint_copies",
          "even_q_set"};
}

ConstructionResult construct(const std::string& family, const Space& sp, const Params& p) {
  if (family == "oval") return oval(sp);
  if (family == "hyperoval") return hyperoval(sp);
  if (family == "denniston") return denniston(sp, p.s.value_or(0));
  if (family == "hermitian") return hermitian(sp);
  if (family == "baer") return baer(sp);
  if (family == "elliptic_quadric") return elliptic_quadric(sp);
  if (family == "complement") return complement(sp, p.of, p);
  if (family == "line_plus_two_points") return line_plus_two_points(sp);
  if (family == "two_chords_config") return two_chords_config(sp);
  if (family == "aligned_config") return aligned_config(sp);
  if (family == "concurrent_lines") return concurrent_lines(sp, p.L.value_or(0));
  if (family == "pencil_partial") return pencil_partial(sp, p.b.value_or(-1));
  if (family == "triangle") return triangle(sp);
  if (family == "complement_vertexless_triangle") return complement_vertexless_triangle(sp);
  if (family == "disjoint_copies") {
    if (!p.sets.empty()) return disjoint_copies(sp, p.sets);
    return disjoint_copies(sp, p.copies.value_or(0));
  }
  if (family == "even_q_set") return even_q_set(sp, p.square);
  throw std::invalid_argument("unknown construction family: " + family);
}

}  // namespace mcf::constructions
