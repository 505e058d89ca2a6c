#include "mcf/cli.hpp"

#include <openssl/evp.h>
#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mcf/bounds.hpp"
#include "mcf/classify.hpp"
#include "mcf/constructions.hpp"
#include "mcf/pts_io.hpp"
#include "mcf/report_json.hpp"
#include "mcf/saturate.hpp"
#include "mcf/singer.hpp"
#include "mcf/tables.hpp"

namespace mcf::cli {

using nlohmann::json;

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (unsigned i = 0; i < len; ++i) {
    s += hex[md[i] >> 4];
    s += hex[md[i] & 15];
  }
  return s;
}

struct Context {
  bool json_out = false;
  std::ostringstream out;
  json artifacts = json::object();  // path -> digest
  std::string field;

  void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
    artifacts[path] = sha256_hex(content);
  }
};

std::vector<int> parse_q_list(const std::string& s) {
  std::vector<int> qs;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad q-list entry '" + tok + "'");
    qs.push_back(v);
  }
  if (qs.empty()) throw std::invalid_argument("empty q-list");
  return qs;
}

std::string yes(bool b) { return b ? "true" : "false"; }

// verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::int64_t mu = 1;
  std::string mode = "weighted";
  bool radius = false;
};

int do_verify(Context& ctx, const VerifyArgs& a) {
  auto pf = read_pts_file(a.file);
  Space space(pf.N, make_field(pf.q));
  ctx.field = space.field().descriptor();
  PointSet S = to_point_set(space, pf);
  auto rep = check_saturating(space, S, a.mu, parse_counting_mode(a.mode));
  std::optional<int> radius, distance;
  if (a.radius) {
    radius = covering_radius(space, S);
    distance = minimum_distance(space, S);
  }
  if (ctx.json_out) {
    json j = to_json(rep);
    if (a.radius) {
      j["covering_radius"] = radius ? json(*radius) : json(nullptr);
      j["minimum_distance"] = distance ? json(*distance) : json(nullptr);
    }
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << "field " << rep.field << "\n"
            << "PG(" << rep.N << "," << rep.q << ") n=" << rep.n << " mu_required=" << rep.mu_required << " mode "
            << to_string(rep.counting_mode) << "\n"
            << "m1 " << yes(rep.m1) << " m2 " << yes(rep.m2) << " m3 " << yes(rep.m3) << "\n"
            << "mu " << rep.mu << " coverage " << rep.coverage_min << ".." << rep.coverage_max << " sum "
            << rep.coverage_sum << "\n"
            << "b3 " << rep.b3 << "\n";
    if (rep.gamma) ctx.out << "gamma " << rep.gamma->str() << " (" << rep.gamma->decimal(6) << ")\n";
    ctx.out << "minimal " << yes(rep.minimal) << " optimal " << yes(rep.optimal) << "\n";
    if (a.radius) {
      ctx.out << "covering_radius " << (radius ? std::to_string(*radius) : "none") << "\n";
      ctx.out << "minimum_distance " << (distance ? std::to_string(*distance) : "none") << "\n";
    }
  }
  return rep.saturating() ? 0 : 1;
}

// construct -------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  int q = 0;
  int N = 2;
  std::optional<int> s, L, b, k, copies;
  std::string of;
  bool square = false;
  std::string out;
};

int do_construct(Context& ctx, const ConstructArgs& a) {
  Space space(a.N, make_field(a.q));
  ctx.field = space.field().descriptor();
  constructions::Params p;
  p.s = a.s;
  p.L = a.L;
  p.b = a.b;
  p.k = a.k;
  p.copies = a.copies;
  p.of = a.of;
  p.square = a.square;
  auto r = constructions::construct(a.family, space, p);
  if (!a.out.empty()) ctx.write_file(a.out, format_pts(space, r.point_set));
  ctx.out << to_json(r, space).dump(2) << '\n';
  return r.verified ? 0 : 1;
}

// singer ----------------------------------------------------------------

struct SingerArgs {
  std::optional<int> q, t, m;
  std::string emit_set;
  bool check = false;
  std::string table;
  std::string q_list;
};

int do_singer(Context& ctx, const SingerArgs& a) {
  if (!a.table.empty()) {
    if (a.table != "three-weights") throw std::invalid_argument("only the three-weights table is generated here");
    auto qs = a.q_list.empty() ? tables::listed_qs("three-weights") : parse_q_list(a.q_list);
    std::string text = tables::computed_text("three-weights", qs);
    if (ctx.json_out) {
      json rows = json::array();
      std::istringstream in(text);
      for (std::string l; std::getline(in, l);) rows.push_back(l);
      ctx.out << json{{"table", "three-weights"}, {"rows", rows}}.dump(2) << '\n';
    } else {
      ctx.out << text;
    }
    return 0;
  }
  if (!a.q || !a.t) throw std::invalid_argument("singer needs --q and --t (or --table)");
  const int q = *a.q, t = *a.t;
  auto F = make_field(q);
  ctx.field = F->descriptor();
  std::vector<int> ms;
  if (a.m)
    ms = {*a.m};
  else
    for (int m = 1; m < t; ++m) ms.push_back(m);

  const bool need_space = a.check || !a.emit_set.empty();
  std::optional<Space> plane;
  singer::SingerPartition part;
  if (need_space) {
    plane.emplace(2, F);
    part = singer::singer_partition(*plane, t);
  } else {
    part.q = q;
    part.t = t;
    part.weights = singer::singer_weights(*F, t);
    part.d = (static_cast<std::int64_t>(q) * q + q + 1) / t;
  }

  int code = 0;
  json evals = json::array();
  for (int m : ms) {
    auto ev = singer::bdc_evaluate(part.weights, m);
    json e = to_json(ev);
    if (a.check) {
      PointSet S = singer::orbit_union_set(*plane, part, m);
      auto rep = check_saturating(*plane, S, std::max<std::int64_t>(ev.mu, 1));
      e["geometric_mu"] = rep.mu;
      bool agree = rep.mu == ev.mu;
      if (ev.mu > 0 && rep.saturating()) {
        auto g = gamma_density(*plane, S, ev.mu);
        e["geometric_gamma"] = rational_json(g);
        agree = agree && ev.gamma && g == *ev.gamma;
      }
      e["agree"] = agree;
      if (!agree) code = 1;
    }
    evals.push_back(e);
  }
  if (!a.emit_set.empty()) {
    if (ms.size() != 1) throw std::invalid_argument("--emit-set needs --m");
    ctx.write_file(a.emit_set, format_pts(*plane, singer::orbit_union_set(*plane, part, ms[0])));
  }
  if (ctx.json_out) {
    ctx.out << json{{"field", ctx.field}, {"partition", to_json(part)}, {"evaluations", evals}}.dump(2) << '\n';
  } else {
    ctx.out << "field " << ctx.field << "\n"
            << "q=" << q << " t=" << t << " d=" << part.d << " weights";
    for (int w : part.weights) ctx.out << ' ' << w;
    ctx.out << "\n";
    for (const auto& e : evals) {
      ctx.out << "m=" << e["m"] << " n=" << e["set_size"] << " mu=" << e["mu"];
      if (!e["gamma"].is_null())
        ctx.out << " gamma=" << e["gamma"]["num"] << "/" << e["gamma"]["den"] << " ("
                << e["gamma"]["approx"].get<std::string>() << ")";
      if (e.contains("agree")) ctx.out << " geometric_check=" << (e["agree"].get<bool>() ? "ok" : "MISMATCH");
      ctx.out << "\n";
    }
  }
  return code;
}

// classify --------------------------------------------------------------

struct ClassifyArgs {
  int q = 0;
  std::int64_t mu = 1;
  std::string predicate = "minimal";
  std::optional<int> min_size, max_size;
  std::string resume, checkpoint, out_dir;
  std::optional<double> time_budget;
  bool no_prune = false;
};

int do_classify(Context& ctx, const ClassifyArgs& a) {
  Space plane(2, make_field(a.q));
  ctx.field = plane.field().descriptor();
  PlaneKernel K(plane);
  auto pred = classify::parse_predicate(a.predicate);
  if (a.mu < 1) throw std::invalid_argument("mu must be positive");
  auto [dlo, dhi] = classify::default_size_range(a.q, a.mu);
  classify::SearchOptions opt;
  opt.mu_min = a.mu;
  opt.min_size = std::max(4, a.min_size.value_or(dlo));
  opt.max_size = a.max_size.value_or(dhi);
  opt.prune = !a.no_prune;
  opt.time_budget_seconds = a.time_budget;
  opt.checkpoint_path = !a.checkpoint.empty() ? a.checkpoint : a.resume;
  classify::SearchState resume_state;
  if (!a.resume.empty()) resume_state = classify::load_checkpoint(a.resume);
  auto st = classify::search(K, opt, a.resume.empty() ? nullptr : &resume_state);
  auto sp = classify::spectrum_from(K, st, a.mu, pred, opt.min_size, opt.max_size);

  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
    std::map<std::size_t, int> seen;
    for (const auto& c : sp.classes) {
      int i = seen[c.n]++;
      std::string path = (std::filesystem::path(a.out_dir) / ("q" + std::to_string(a.q) + "_mu" + std::to_string(a.mu) +
                                                               "_" + a.predicate + "_n" + std::to_string(c.n) + "_" +
                                                               std::to_string(i) + ".pts"))
                             .string();
      ctx.write_file(path, format_pts(plane, c.canonical));
    }
  }
  json j = to_json(sp);
  j["field"] = ctx.field;
  j["level_reached"] = st.level;
  j["canonizations"] = st.canonizations;
  if (!st.complete && !opt.checkpoint_path.empty()) j["checkpoint"] = opt.checkpoint_path;
  ctx.out << j.dump(2) << '\n';
  return 0;
}

// bounds / tables -------------------------------------------------------

int do_bounds(Context& ctx, int q, std::int64_t mu, std::optional<std::int64_t> r, std::optional<std::int64_t> s) {
  auto pq = prime_power(q);
  if (pq.first == 0) throw std::invalid_argument("q must be a prime power");
  ctx.out << to_json(bounds::bound_report(q, mu, r, s)).dump(2) << '\n';
  return 0;
}

int do_tables(Context& ctx, const std::string& which, const std::string& q_list) {
  std::vector<std::string> names = which == "all" ? tables::table_names() : std::vector<std::string>{which};
  int code = 0;
  json res = json::array();
  for (const auto& w : names) {
    auto qs = q_list.empty() ? tables::default_qs(w) : parse_q_list(q_list);
    auto c = tables::check_table(w, qs);
    if (!c.equal()) code = 1;
    res.push_back({{"which", w}, {"qs", qs}, {"equal", c.equal()}, {"computed", c.computed}, {"diff", c.diff}});
    if (!ctx.json_out) {
      ctx.out << "table " << w << " q=";
      for (std::size_t i = 0; i < qs.size(); ++i) ctx.out << (i ? "," : "") << qs[i];
      ctx.out << (c.equal() ? ": matches\n" : ": DIFFERS\n");
      ctx.out << (c.equal() ? c.computed : c.diff);
    }
  }
  if (ctx.json_out) ctx.out << json{{"tables", res}}.dump(2) << '\n';
  return code;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& msg) {
  err << json{{"error", kind}, {"message", msg}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Saturating sets in projective spaces and multiple coverings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Context ctx;
  int threads = 0;
  std::optional<std::uint64_t> seed;
  std::string manifest;
  app.add_flag("--json", ctx.json_out, "machine-readable output");
  app.add_option("--threads", threads, "worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "recorded in the manifest; no result depends on it");
  app.add_option("--manifest", manifest, "write a run manifest with output digests");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a point-set file");
  verify->add_option("file", va.file, "point-set file")->required();
  verify->add_option("--mu", va.mu, "required multiplicity")->required()->check(CLI::PositiveNumber);
  verify->add_option("--mode", va.mode, "weighted | distinct")->check(CLI::IsMember({"weighted", "distinct"}));
  verify->add_flag("--radius", va.radius, "also compute covering radius and minimum distance");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build and verify a catalog family");
  construct->add_option("family", ca.family, "family name")->required()->check(CLI::IsMember(constructions::family_names()));
  construct->add_option("--q", ca.q, "field order")->required();
  construct->add_option("--N", ca.N, "projective dimension");
  construct->add_option("--s", ca.s, "subfield or Denniston parameter");
  construct->add_option("--L", ca.L, "number of concurrent lines");
  construct->add_option("--b", ca.b, "points kept on the partial pencil line");
  construct->add_option("--k", ca.k, "cap size for complement --of cap");
  construct->add_option("--copies", ca.copies, "number of disjoint copies");
  construct->add_option("--of", ca.of, "inner family for complement");
  construct->add_flag("--square", ca.square, "square-q variant of even_q_set");
  construct->add_option("--out", ca.out, "write the point set here");

  SingerArgs sa;
  auto* singer_cmd = app.add_subcommand("singer", "Singer orbit partitions and their coverings");
  singer_cmd->add_option("--q", sa.q);
  singer_cmd->add_option("--t", sa.t);
  singer_cmd->add_option("--m", sa.m);
  singer_cmd->add_option("--emit-set", sa.emit_set, "write the union of the first m orbits");
  singer_cmd->add_flag("--check", sa.check, "recount mu and gamma geometrically");
  singer_cmd->add_option("--table", sa.table, "three-weights");
  singer_cmd->add_option("--q-list", sa.q_list, "comma-separated q values");

  ClassifyArgs cla;
  auto* classify_cmd = app.add_subcommand("classify", "isomorph-free enumeration in PG(2,q)");
  classify_cmd->add_option("--q", cla.q)->required();
  classify_cmd->add_option("--mu", cla.mu)->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("--predicate", cla.predicate)->check(CLI::IsMember({"minimal", "optimal"}));
  classify_cmd->add_option("--min-size", cla.min_size);
  classify_cmd->add_option("--max-size", cla.max_size);
  classify_cmd->add_option("--resume", cla.resume, "continue from a checkpoint");
  classify_cmd->add_option("--checkpoint", cla.checkpoint, "write a checkpoint after every level");
  classify_cmd->add_option("--time-budget", cla.time_budget, "seconds before stopping with a checkpoint");
  classify_cmd->add_option("--out-dir", cla.out_dir, "directory for representative point sets");
  classify_cmd->add_flag("--no-prune", cla.no_prune, "disable coverage-deficit pruning");

  int bq = 0;
  std::int64_t bmu = 1;
  std::optional<std::int64_t> br, bs;
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form size bounds");
  bounds_cmd->add_option("--q", bq)->required();
  bounds_cmd->add_option("--mu", bmu)->required()->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--r", br, "secant-line size r (needs --s)");
  bounds_cmd->add_option("--s", bs, "secant-line size s >= r");

  std::string which = "all", q_list;
  auto* tables_cmd = app.add_subcommand("tables", "recompute reference tables and diff them");
  tables_cmd->add_option("--which", which)->check(CLI::IsMember({"spectrum12", "optimal", "minimal", "three-weights", "all"}));
  tables_cmd->add_option("--q-list", q_list);

  std::vector<std::string> argv_store = {"mcf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", e.what());
    return 2;
  }

  if (threads > 0) omp_set_num_threads(threads);
  const auto t0 = std::chrono::steady_clock::now();
  std::string sub;
  int code = 0;
  try {
    if (verify->parsed()) {
      sub = "verify";
      code = do_verify(ctx, va);
    } else if (construct->parsed()) {
      sub = "construct";
      code = do_construct(ctx, ca);
    } else if (singer_cmd->parsed()) {
      sub = "singer";
      code = do_singer(ctx, sa);
    } else if (classify_cmd->parsed()) {
      sub = "classify";
      code = do_classify(ctx, cla);
    } else if (bounds_cmd->parsed()) {
      sub = "bounds";
      code = do_bounds(ctx, bq, bmu, br, bs);
    } else if (tables_cmd->parsed()) {
      sub = "tables";
      code = do_tables(ctx, which, q_list);
    }
  } catch (const std::exception& e) {
    out << ctx.out.str();
    print_error(err, "input", e.what());
    return 2;
  }
  const std::string text = ctx.out.str();
  out << text;

  if (!manifest.empty()) {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    json m = {{"subcommand", sub},
              {"parameters", args},
              {"field", ctx.field.empty() ? json(nullptr) : json(ctx.field)},
              {"tool_version", kVersion},
              {"seed", seed ? json(*seed) : json(nullptr)},
              {"wall_time_seconds", dt.count()},
              {"exit_code", code},
              {"digests", {{"stdout", sha256_hex(text)}, {"files", ctx.artifacts}}}};
    std::ofstream f(manifest);
    if (!f) {
      print_error(err, "input", "cannot write manifest " + manifest);
      return 2;
    }
    f << m.dump(2) << '\n';
  }
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace mcf::cli
