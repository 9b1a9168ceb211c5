#include "kfam/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kfam/constructions.hpp"
#include "kfam/cover.hpp"
#include "kfam/errors.hpp"
#include "kfam/formula.hpp"
#include "kfam/grid.hpp"
#include "kfam/io.hpp"
#include "kfam/search.hpp"
#include "kfam/spread.hpp"
#include "kfam/transforms.hpp"

namespace kfam {

namespace {

using Json = nlohmann::ordered_json;

Json set_json(const ElementSet& s) { return s.elements(); }

Json family_json(const Family& f) { return Json{{"n", f.ground_size()}, {"members", f.to_lists()}}; }

std::string big(const BigCount& v) { return to_string(v); }

/// Report schema v1.
struct Report {
  std::string command;
  Json params = Json::object();
  Json results = Json::object();
  Json checks = Json::array();

  void check(const std::string& name, bool pass, const std::string& lhs, const std::string& rhs) {
    checks.push_back(Json{{"name", name}, {"pass", pass}, {"lhs", lhs}, {"rhs", rhs}});
  }
  void check_eq(const std::string& name, const BigCount& lhs, const BigCount& rhs) {
    check(name, lhs == rhs, big(lhs), big(rhs));
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c["pass"].get<bool>()) return false;
    return true;
  }
};

struct Options {
  bool canonical = false;
  int jobs = 1;
  std::vector<std::string> warnings;
};

int default_jobs() {
  if (const char* env = std::getenv("KFAM_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// Enumeration cross-checks run only when the family is small enough to build.
bool enumerable(long long n, long long k) { return n <= ElementSet::kMaxElement && binom(n - 1, k - 1) <= 2000000; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

Json step_json(const ExchangeStep& s) {
  return Json{{"stage", to_string(s.stage)},       {"index_set", set_json(s.index_set)}, {"fixed", set_json(s.fixed)},
              {"size_before", s.size_before},      {"size_after", s.size_after},         {"a_before", s.a_before},
              {"a_after", s.a_after},              {"b_before", s.b_before},             {"b_after", s.b_after}};
}

Json peel_json(const PeelTrace& t) {
  Json layers = Json::object(), residues = Json::object(), log = Json::array();
  for (const auto& [i, w] : t.layers) layers[std::to_string(i)] = w.to_lists();
  for (const auto& [i, r] : t.residues) residues[std::to_string(i)] = r.to_lists();
  for (const auto& [from, to] : t.reduction_log) log.push_back(Json{{"replaced", set_json(from)}, {"by", set_json(to)}});
  return Json{{"k", t.k},
              {"layers", layers},
              {"residues", residues},
              {"reduction_log", log},
              {"t4_singleton", t.t4_singleton}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification workbench for intersecting set families", "kfam"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  opt.jobs = default_jobs();
  app.add_flag("--canonical", opt.canonical, "Deterministic report: runtime_ms is written as 0");
  app.add_option("--jobs", opt.jobs, "Worker threads (default: KFAM_JOBS or 1)")->check(CLI::PositiveNumber);

  Report rep;
  std::function<void()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<void()> fn) {
    sub->callback([&, name, fn] {
      rep.command = name;
      action = fn;
    });
  };

  // construct
  std::string kind, out_file, in_file;
  int n = 0, k = 0, s = 0, x = 1, r = 0;
  auto* construct = app.add_subcommand("construct", "Build a named family");
  construct->add_option("kind", kind, "star | hm | t2 | t2prime | c3 | closure")
      ->required()
      ->check(CLI::IsMember({"star", "hm", "t2", "t2prime", "c3", "closure"}));
  construct->add_option("--n", n, "Ground size (defaults to the smallest allowed for t2/t2prime)");
  construct->add_option("--k", k, "Uniformity");
  construct->add_option("--s", s, "Uniformity of T2'(s)");
  construct->add_option("--x", x, "Star centre");
  construct->add_option("--in", in_file, "Family file for closure");
  construct->add_option("--r", r, "Set size for closure");
  construct->add_option("-o,--output", out_file, "Write the family to this file");
  bind(construct, "construct", [&] {
    Family f;
    if (kind == "star") f = full_star(n, k, x);
    if (kind == "hm") f = hilton_milner(n, k);
    if (kind == "t2") f = t2(k, n > 0 ? n : 2 * k - 1);
    if (kind == "t2prime") f = t2prime(s, n > 0 ? n : 2 * s);
    if (kind == "c3") f = c3(n, k);
    if (kind == "closure") {
      if (in_file.empty()) throw CLI::ValidationError("--in", "closure needs --in <family-file>");
      f = cross_closure(parse_family_file(in_file, &opt.warnings), r);
    }
    rep.params = Json{{"kind", kind}, {"n", f.ground_size()}, {"k", k}, {"s", s}};
    rep.results["size"] = f.size();
    rep.results["family"] = family_json(f);
    if (kind == "hm") rep.check_eq("|family| = hm_size", f.size(), hm_size(n, k));
    if (kind == "c3") rep.check_eq("|family| = size_c3", f.size(), size_c3(n, k));
    if (!out_file.empty()) write_family_file(f, out_file);
  });

  // Commands over one family file.
  std::string file;
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Family file")->required(); };
  auto load = [&] {
    Family f = parse_family_file(file, &opt.warnings);
    rep.params["file"] = file;
    return f;
  };

  auto* stats = app.add_subcommand("stats", "Basic functionals of a family");
  add_file(stats);
  bind(stats, "stats", [&] {
    const Family f = load();
    const auto cover = covering_number(f);
    rep.results = Json{{"n", f.ground_size()},
                       {"size", f.size()},
                       {"uniform_k", f.uniform_k() ? Json(*f.uniform_k()) : Json(nullptr)},
                       {"intersecting", is_intersecting(f)},
                       {"max_degree", max_degree(f)},
                       {"max_degree_element", max_degree_element(f)},
                       {"diversity", diversity(f)},
                       {"tau", cover.tau == kNoCover ? Json(nullptr) : Json(cover.tau)}};
  });

  auto* tau = app.add_subcommand("tau", "Exact covering number");
  add_file(tau);
  bind(tau, "tau", [&] {
    const Family f = load();
    const auto c = covering_number(f);
    rep.results = Json{{"tau", c.tau == kNoCover ? Json(nullptr) : Json(c.tau)},
                       {"witness", set_json(c.witness_cover)},
                       {"nodes", c.explored_nodes}};
    if (c.tau != kNoCover) rep.check("witness meets every member", is_cover(f, c.witness_cover), c.witness_cover.to_string(), "cover");
  });

  int t = 0;
  auto* hitcount = app.add_subcommand("hitcount", "Number of t-element hitting sets");
  add_file(hitcount);
  hitcount->add_option("--t", t, "Hitting-set size")->required();
  bind(hitcount, "hitcount", [&] {
    const Family f = load();
    rep.params["t"] = t;
    rep.results["count"] = big(count_hitting_sets(f, t));
  });

  auto* mt2 = app.add_subcommand("minimal-tau2", "Inclusion-minimal τ = 2 subfamily with representatives");
  add_file(mt2);
  bind(mt2, "minimal-tau2", [&] {
    const Family f = load();
    const auto m = minimal_tau2_subfamily(f);
    if (!m) {
      rep.results["subfamily"] = nullptr;
      return;
    }
    rep.results["subfamily"] = family_json(m->subfamily);
    rep.results["reps"] = m->reps;
    rep.check("minimal with τ = 2", is_minimal_tau2(m->subfamily), std::to_string(m->subfamily.size()), "minimal");
  });

  int si = 0, sj = 0;
  auto* shift = app.add_subcommand("shift", "(i,j)-shift of a family");
  add_file(shift);
  shift->add_option("--i", si)->required();
  shift->add_option("--j", sj)->required();
  shift->add_option("-o,--output", out_file, "Write the shifted family to this file");
  bind(shift, "shift", [&] {
    const Family f = load();
    rep.params["i"] = si;
    rep.params["j"] = sj;
    const Family g = shift_family(f, si, sj);
    const auto tb = covering_number(f).tau, ta = covering_number(g).tau;
    rep.results = Json{{"family", family_json(g)}, {"tau_before", tb}, {"tau_after", ta}};
    rep.check("|S_ij(F)| = |F|", g.size() == f.size(), std::to_string(g.size()), std::to_string(f.size()));
    if (is_intersecting(f)) rep.check("S_ij(F) intersecting", is_intersecting(g), "intersecting", "intersecting");
    if (!out_file.empty()) write_family_file(g, out_file);
  });

  std::string trace_file;
  auto* sw = app.add_subcommand("switch", "Bipartite switching pipeline");
  add_file(sw);
  sw->add_option("--trace", trace_file, "Write the exchange trace (JSON) here");
  sw->add_option("-o,--output", out_file, "Write the final family to this file");
  bind(sw, "switch", [&] {
    const Family f = load();
    const SwitchResult res = switch_pipeline(f);
    Json trace = Json::array();
    for (const auto& st : res.trace) trace.push_back(step_json(st));
    rep.results = Json{{"pivot", res.pivot},
                       {"completed", res.completed},
                       {"diagnostic", res.diagnostic},
                       {"passes", res.passes},
                       {"size_before", f.size()},
                       {"size_after", res.family.size()},
                       {"minimal", family_json(res.minimal)},
                       {"family", family_json(res.family)},
                       {"steps", res.trace.size()}};
    rep.check("pipeline completed", res.completed, res.diagnostic.empty() ? "completed" : res.diagnostic, "completed");
    rep.check("|F''| >= |F|", res.family.size() >= f.size(), std::to_string(res.family.size()), std::to_string(f.size()));
    rep.check("F'' intersecting", is_intersecting(res.family), "intersecting", "intersecting");
    if (!trace_file.empty()) write_json_file(trace_file, trace);
    if (!out_file.empty()) write_family_file(res.family, out_file);
  });

  std::uint64_t seed = 0;
  bool use_seed = false;
  auto* pl = app.add_subcommand("peel", "Peeling procedure");
  add_file(pl);
  pl->add_option("--trace", trace_file, "Write the peeling trace (JSON) here");
  pl->add_option("--seed", seed, "Randomised reduction schedule")->each([&](const std::string&) { use_seed = true; });
  bind(pl, "peel", [&] {
    const Family f = load();
    const PeelTrace tr = peel(f, use_seed ? std::optional<std::uint64_t>(seed) : std::nullopt);
    Json sizes = Json::object();
    for (const auto& [i, w] : tr.layers) sizes[std::to_string(i)] = w.size();
    rep.results = Json{{"k", tr.k}, {"layer_sizes", sizes}, {"t4_singleton", tr.t4_singleton},
                       {"reductions", tr.reduction_log.size()}};
    for (const auto& [i, w] : tr.layers) {
      BigCount cap = 1;
      for (int e = 0; e < i; ++e) cap *= i;
      rep.check("|W_" + std::to_string(i) + "| <= i^i", BigCount(w.size()) <= cap, std::to_string(w.size()), big(cap));
    }
    rep.check("coverage identity at every level", tr.coverage_holds, "F[T_i] ∪ ⋃ F[W_j]", "F");
    if (!trace_file.empty()) write_json_file(trace_file, peel_json(tr));
  });

  std::string ratio;
  bool restrict_flag = false;
  auto* sp = app.add_subcommand("spread", "r-spreadness test");
  add_file(sp);
  sp->add_option("--r", ratio, "Rational r >= 1 as p/q")->required();
  sp->add_flag("--restrict", restrict_flag, "Also find X with G(X) r-spread");
  bind(sp, "spread", [&] {
    const Family f = load();
    const BigRatio rr = parse_ratio(ratio);
    rep.params["r"] = to_string(rr);
    const SpreadCheck c = is_r_spread(f, rr);
    rep.results["spread"] = c.spread;
    rep.results["violator"] = c.violator ? set_json(*c.violator) : Json(nullptr);
    if (restrict_flag) {
      const auto sr = find_spread_restriction(f, rr);
      rep.results["restriction"] = Json{{"x", set_json(sr.x)}, {"family", family_json(sr.restricted)}};
      rep.check("G(X) is r-spread", is_r_spread(sr.restricted, rr).spread, sr.x.to_string(), "spread");
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Formula evaluation and grid certification");
  verify->require_subcommand(1);
  verify->fallthrough();
  std::string fname;
  long long m = 0, z = 0, u = 0, ja = 0, a = 0, b = 0, vn = 0, vk = 0, vs = 0;
  bool has_j = false;
  auto* vf = verify->add_subcommand("formula", "Evaluate a closed formula and cross-check it");
  vf->add_option("--name", fname)->required()->check(CLI::IsMember({"c3", "f2prime", "fz", "fprime3", "hm", "thm1", "kz"}));
  vf->add_option("--n", vn);
  vf->add_option("--k", vk);
  vf->add_option("--s", vs);
  vf->add_option("--m", m);
  vf->add_option("--z", z);
  vf->add_option("--u", u);
  vf->add_option("--a", a);
  vf->add_option("--b", b);
  vf->add_option("--j", ja)->each([&](const std::string&) { has_j = true; });
  bind(vf, "verify formula", [&] {
    rep.params = Json{{"name", fname}};
    for (auto [key, val] : {std::pair{"n", vn}, {"k", vk}, {"s", vs}, {"m", m}, {"z", z}, {"u", u}, {"a", a}, {"b", b}})
      if (val != 0) rep.params[key] = val;
    if (has_j) rep.params["j"] = ja;
    BigCount value;
    if (fname == "c3") {
      value = size_c3(vn, vk);
      if (enumerable(vn, vk)) rep.check_eq("size_c3 = |c3(n,k)|", value, c3(int(vn), int(vk)).size());
    } else if (fname == "hm") {
      value = hm_size(vn, vk);
      rep.check_eq("hm_size = thm1_bound(u=k)", value, thm1_bound(vn, vk, vk));
      if (enumerable(vn, vk)) rep.check_eq("hm_size = |hilton_milner(n,k)|", value, hilton_milner(int(vn), int(vk)).size());
    } else if (fname == "thm1") {
      value = thm1_bound(vn, vk, u);
      if (u == vk) rep.check_eq("thm1_bound(u=k) = hm_size", value, hm_size(vn, vk));
    } else if (fname == "f2prime") {
      value = size_f2prime(m, vs, vk);
      rep.check_eq("f(2) = size_f2prime", f_of_z(m, vs, vk, 2), value);
      if (m <= 24) {
        const Family h = t2prime(int(vs), int(m));
        rep.check_eq("f(2)+2 = |closure(T2'(s))|+2", value + 2, count_hitting_sets(h, int(vk) - 1) + 2);
      }
    } else if (fname == "fz") {
      value = f_of_z(m, vs, vk, z);
      if (z == 2) rep.check_eq("f(2) = size_f2prime", value, size_f2prime(m, vs, vk));
      if (z == 3 && m <= 24 && m >= 2 * vs - 1)
        rep.check_eq("f(3)+3 = |closure(T2(s))|+3", value + 3, count_hitting_sets(t2(int(vs), int(m)), int(vk) - 1) + 3);
    } else if (fname == "fprime3") {
      value = fprime3(m, vs, vk);
      rep.check_eq("f(3)-f'(3) = C(m-s-3,k-3)", f_of_z(m, vs, vk, 3) - value, binom(m - vs - 3, vk - 3));
    } else if (fname == "kz") {
      value = kz_bound(vn, a, b, has_j ? std::optional<long long>(ja) : std::nullopt);
      rep.results["hypothesis_cap"] = big(kz_hypothesis_cap(vn, a, b));
    }
    rep.results["value"] = big(value);
  });

  std::string gname, ranges;
  bool summary = false;
  auto* vg = verify->add_subcommand("grid", "Certify an inequality chain on a parameter grid");
  vg->add_option("--name", gname)->required()->check(CLI::IsMember(grid_inequalities()));
  vg->add_option("--ranges", ranges, "e.g. \"k=4..40;s=2..k;m=k+s..k+s+40;z=3..s+1\" (default per inequality)");
  vg->add_flag("--summary", summary, "Report only failed and skipped points");
  bind(vg, "verify grid", [&] {
    const std::string rg = ranges.empty() ? default_grid_ranges(gname) : ranges;
    rep.params = Json{{"name", gname}, {"ranges", rg}};
    const GridReport gr = certify_grid(gname, rg, opt.jobs, !summary);
    Json pts = Json::array();
    for (const auto& p : gr.points) {
      Json point = Json::object();
      for (const auto& [key, val] : p.point) point[key] = val;
      Json checks = Json::array();
      for (const auto& c : p.checks)
        checks.push_back(Json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
      Json entry{{"point", point}, {"pass", p.pass}, {"checks", checks}};
      if (p.skipped) entry["skipped"] = p.skip_reason;
      pts.push_back(entry);
    }
    rep.results = Json{{"passed", gr.passed}, {"failed", gr.failed}, {"skipped", gr.skipped}, {"points", pts}};
    rep.check("every grid point passes", gr.failed == 0 && gr.passed > 0, std::to_string(gr.passed) + " passed",
              std::to_string(gr.failed) + " failed");
  });

  // search
  auto* search = app.add_subcommand("search", "Exhaustive desk-scale oracles");
  search->require_subcommand(1);
  search->fallthrough();
  bool all = false, inter = false;
  int sn = 0, sk = 0, st = 0, sm = 0, ss = 0;
  auto* cnkt = search->add_subcommand("cnkt", "Largest intersecting family with τ >= t");
  cnkt->add_option("--n", sn)->required();
  cnkt->add_option("--k", sk)->required();
  cnkt->add_option("--t", st)->required();
  cnkt->add_flag("--all", all, "Return every optimal isomorphism class");
  bind(cnkt, "search cnkt", [&] {
    rep.params = Json{{"n", sn}, {"k", sk}, {"t", st}, {"all", all}};
    const SearchResult res = max_intersecting_tau(sn, sk, st, all);
    Json ws = Json::array();
    for (const auto& w : res.witnesses) ws.push_back(family_json(w));
    rep.results = Json{{"optimum", res.optimum}, {"witnesses", ws}, {"nodes", res.nodes_explored}, {"pruned", res.pruned}};
    for (const auto& w : res.witnesses) {
      const auto wt = covering_number(w).tau;
      rep.check("witness intersecting with τ >= t", is_intersecting(w) && wt >= std::size_t(st), std::to_string(wt),
                std::to_string(st));
    }
  });
  auto* lm = search->add_subcommand("lemmin", "Maximize |F|+|H| over minimal τ = 2 families");
  lm->add_option("--m", sm)->required();
  lm->add_option("--s", ss)->required();
  lm->add_option("--k", sk)->required();
  lm->add_flag("--intersecting", inter, "Only intersecting H");
  bind(lm, "search lemmin", [&] {
    rep.params = Json{{"m", sm}, {"s", ss}, {"k", sk}, {"intersecting", inter}};
    const LemminResult res = lemmin_oracle(sm, ss, sk, inter);
    Json argmax = Json::array(), classes = Json::array();
    for (const auto& h : res.argmax) argmax.push_back(family_json(h));
    for (const auto& c : res.classes)
      classes.push_back(Json{{"h", c.h.to_lists()}, {"closure", big(c.closure_size)}, {"value", big(c.value)}});
    rep.results = Json{{"best", big(res.best)}, {"runner_up", big(res.runner_up)}, {"argmax", argmax}, {"classes", classes}};
    const BigCount expected = inter ? f_of_z(sm, ss, sk, 3) + 3 : f_of_z(sm, ss, sk, 2) + 2;
    rep.check(inter ? "best = f(3)+3" : "best = f(2)+2", res.best == expected, big(res.best), big(expected));
    rep.check("unique maximizing class", res.argmax.size() == 1, std::to_string(res.argmax.size()), "1");
  });

  std::uint64_t shift_seed = 1;
  auto* sd = search->add_subcommand("shiftdrop", "Find an intersecting family whose (i,j)-shift lowers τ");
  sd->add_option("--n", sn)->required();
  sd->add_option("--k", sk)->required();
  sd->add_option("--seed", shift_seed, "Seed for the random phase");
  bind(sd, "search shiftdrop", [&] {
    rep.params = Json{{"n", sn}, {"k", sk}, {"seed", shift_seed}};
    const auto w = find_tau_dropping_shift(sn, sk, shift_seed);
    rep.results = w ? Json{{"found", true}, {"family", family_json(w->family)}, {"i", w->i}, {"j", w->j},
                           {"tau_before", w->tau_before}, {"tau_after", w->tau_after}}
                    : Json{{"found", false}};
    rep.check("witness found", w.has_value(), w ? "found" : "none", "found");
    if (w) rep.check("τ drops", w->tau_after < w->tau_before, std::to_string(w->tau_after), std::to_string(w->tau_before));
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  const auto t0 = std::chrono::steady_clock::now();
  try {
    app.parse(rev);
    action();
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& w : opt.warnings) err << "warning: " << w << '\n';

  Json report{{"schema", "kfam-report"},
              {"version", 1},
              {"command", rep.command},
              {"params", rep.params},
              {"results", rep.results},
              {"checks", rep.checks},
              {"runtime_ms", opt.canonical ? 0 : ms}};
  out << report.dump(2) << '\n';
  return rep.all_pass() ? 0 : 1;
}

}  // namespace kfam
