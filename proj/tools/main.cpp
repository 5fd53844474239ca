#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "bcd/suites.hpp"

namespace {

using bcd::Int;
using json = nlohmann::ordered_json;

json json_int(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

std::string cd_key(const bcd::CdWord& w) { return w.empty() ? "1" : w; }

struct Config {
  std::string group;
  std::string u_text, v_text;
  std::string ordering = "lex";
  int sample = 0;
  unsigned long long seed = 7;
  int jobs = 1;
  std::string out;
};

std::ostream& open_output(const Config& cfg, std::ofstream& file) {
  if (cfg.out.empty()) return std::cout;
  file.open(cfg.out);
  if (!file) throw std::runtime_error("cannot open output file: " + cfg.out);
  return file;
}

long long group_order(const bcd::CoxeterSystem& sys) {
  long long n = 1;
  for (int d : sys.degrees())
    for (int i = 2; i <= d; ++i) n *= i;
  return n;
}

std::vector<std::pair<bcd::Element, bcd::Element>> corpus(const bcd::CoxeterSystem& sys,
                                                          const Config& cfg) {
  if (cfg.sample > 0) return bcd::sample_pairs(sys, cfg.sample, cfg.seed);
  if (group_order(sys) > 720)
    throw bcd::ParseError("group too large for exhaustive enumeration; use --sample");
  return bcd::comparable_pairs(sys, true);
}

int cmd_interval(const Config& cfg) {
  auto sys = bcd::CoxeterSystem::parse(cfg.group);
  auto ord = bcd::parse_ordering(cfg.ordering);
  auto u = bcd::Element::parse(sys, cfg.u_text);
  auto v = bcd::Element::parse(sys, cfg.v_text);
  if (!bcd::bruhat_leq(u, v)) throw bcd::NotComparable(u.text() + " is not below " + v.text());
  int l = v.length() - u.length();

  bcd::KlContext ctx;
  const bcd::IntPoly& r = ctx.r_polynomial(u, v);
  const bcd::IntPoly& rt = ctx.r_tilde(u, v);
  const bcd::IntPoly& p = ctx.kl_polynomial(u, v);
  bcd::PathStats stats = bcd::b_stats(u, v, ord);
  bcd::CdPoly psi = bcd::complete_cd_index(u, v, ord);

  json doc;
  doc["schema"] = 1;
  doc["group"] = sys.name();
  doc["ordering"] = cfg.ordering;
  doc["u"] = u.text();
  doc["v"] = v.text();
  doc["l"] = l;
  doc["R"] = r.str();
  doc["Rtilde"] = rt.str();
  doc["P"] = p.str();
  json b = json::object();
  for (const auto& [a, k] : stats.b) b[bcd::comp_str(a)] = json_int(k);
  doc["b"] = b;
  json cd = json::object();
  for (const auto& [w, c] : psi) cd[cd_key(w)] = json_int(c);
  doc["cd"] = cd;
  doc["top_degree"] = l - 1;
  json a_json = json::array();
  auto a = bcd::a_vector(psi, l);
  for (const auto& x : a) a_json.push_back(json_int(x));
  doc["a"] = a_json;
  doc["g_dual"] = bcd::g_dual(psi, l).str();

  bool kl_ok = bcd::kl_from_cd(psi, l) == p;
  bool rt_ok = (l == 0) || bcd::r_tilde_from_cd(psi) == rt;
  bool sums_ok = true;
  for (int n = l - 1; n >= 0; n -= 2) {
    auto [s1, s2] = bcd::sum_identities(stats, psi, n);
    sums_ok = sums_ok && s1 && s2;
  }
  bool anti_ok = true;
  if (l > 0) {
    try {
      bcd::antisymmetric_part(ctx, u, v, ord);
    } catch (const bcd::InternalInconsistency&) {
      anti_ok = false;
    }
  }
  bool p1_ok = true;
  if (l >= 2) {
    auto [p1a, p1b] = bcd::p1_two_ways(psi, stats, l);
    p1_ok = p1a == p.coeff(1) && p1b == p.coeff(1);
  }
  doc["checks"] = {{"kl_from_cd", kl_ok},
                   {"rtilde_from_cd", rt_ok},
                   {"sum_identities", sums_ok},
                   {"antisymmetric_part", anti_ok},
                   {"p1", p1_ok}};

  std::ofstream file;
  open_output(cfg, file) << doc.dump(2) << "\n";
  if (!(kl_ok && rt_ok && sums_ok && anti_ok && p1_ok))
    throw bcd::InternalInconsistency("identity check failed on [" + u.text() + "," +
                                     v.text() + "]");
  return 0;
}

int cmd_scan(const Config& cfg) {
  auto sys = bcd::CoxeterSystem::parse(cfg.group);
  auto ord = bcd::parse_ordering(cfg.ordering);
  auto pairs = corpus(sys, cfg);

  std::vector<std::string> lines(pairs.size());
  std::vector<bcd::ScanRecord> records(pairs.size());
  int jobs = std::max(1, cfg.jobs);
  std::vector<std::thread> workers;
  std::vector<std::string> errors(jobs);
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t]() {
      bcd::KlContext ctx;
      for (size_t i = t; i < pairs.size(); i += jobs) {
        try {
          bcd::ScanRecord rec = bcd::scan_interval(ctx, pairs[i].first, pairs[i].second, ord);
          records[i] = rec;
          json line;
          line["u"] = rec.u;
          line["v"] = rec.v;
          line["l"] = rec.l;
          line["cd_min"] = json_int(rec.cd_min);
          json a = json::array();
          for (const auto& x : rec.a) a.push_back(json_int(x));
          line["a"] = a;
          line["a_min"] = json_int(rec.a_min);
          line["chaininject_ok"] = rec.chaininject_ok;
          line["p1_check_ok"] = rec.p1_check_ok;
          lines[i] = line.dump();
        } catch (const std::exception& e) {
          if (errors[t].empty()) errors[t] = e.what();
          return;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& e : errors)
    if (!e.empty()) throw bcd::InternalInconsistency(e);

  std::ofstream file;
  std::ostream& os = open_output(cfg, file);
  long long cd_viol = 0, a_viol = 0, inj_viol = 0, p1_viol = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    os << lines[i] << "\n";
    if (!records[i].nonneg_cd()) ++cd_viol;
    if (!records[i].nonneg_a()) ++a_viol;
    if (!records[i].chaininject_ok) ++inj_viol;
    if (!records[i].p1_check_ok) ++p1_viol;
  }
  json summary;
  summary["schema"] = 1;
  summary["summary"] = {{"records", lines.size()},
                        {"cd_negative", cd_viol},
                        {"a_negative", a_viol},
                        {"chaininject_failures", inj_viol},
                        {"p1_failures", p1_viol}};
  os << summary.dump() << "\n";
  if (p1_viol > 0)
    throw bcd::InternalInconsistency("linear-coefficient cross-check failed during scan");
  return 0;
}

int cmd_verify(const Config& cfg) {
  auto sys = bcd::CoxeterSystem::parse(cfg.group);
  bcd::SuiteOptions opt;
  opt.ord = bcd::parse_ordering(cfg.ordering);
  auto strict = corpus(sys, cfg);
  std::vector<std::pair<bcd::Element, bcd::Element>> with_trivial = strict;
  if (cfg.sample == 0)
    with_trivial = bcd::comparable_pairs(sys, false);

  std::ofstream file;
  std::ostream& os = open_output(cfg, file);
  bcd::KlContext ctx;
  bool ok = true;
  auto run = [&](const char* name, const bcd::SuiteReport& rep) {
    os << name << ": " << (rep.ok() ? "ok" : "FAILED") << " (" << rep.intervals
       << " intervals)\n";
    for (const auto& f : rep.failures) os << "  " << f << "\n";
    ok = ok && rep.ok();
  };
  run("identity suite", bcd::identity_suite(ctx, with_trivial, opt));
  run("flip suite", bcd::flip_suite(ctx, strict, opt));
  if (sys.factors() >= 2) run("product suite", bcd::product_suite(ctx, sys, opt));
  os << (ok ? "all suites passed\n" : "suite failures detected\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Bruhat-interval invariants: path statistics, cd-indices, "
               "Kazhdan-Lusztig data"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool needs_uv) {
    sub->add_option("--group", cfg.group, "group name, e.g. S4 or S2xS3")->required();
    if (needs_uv) {
      sub->add_option("--u", cfg.u_text, "lower element, one-line notation")->required();
      sub->add_option("--v", cfg.v_text, "upper element, one-line notation")->required();
    }
    sub->add_option("--ordering", cfg.ordering, "reflection ordering: lex or revlex")
        ->check(CLI::IsMember({"lex", "revlex"}));
    sub->add_option("--out", cfg.out, "output path (default stdout)");
  };

  auto* interval = app.add_subcommand("interval", "full report for one Bruhat interval");
  add_common(interval, true);

  auto* scan = app.add_subcommand("scan", "conjecture scan over intervals, JSON lines");
  add_common(scan, false);
  scan->add_option("--sample", cfg.sample, "sample this many intervals instead of all");
  scan->add_option("--seed", cfg.seed, "sampling seed");
  scan->add_option("--jobs", cfg.jobs, "worker threads");

  auto* verify = app.add_subcommand("verify", "run the identity suites");
  add_common(verify, false);
  verify->add_option("--sample", cfg.sample, "sample this many intervals instead of all");
  verify->add_option("--seed", cfg.seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (interval->parsed()) return cmd_interval(cfg);
    if (scan->parsed()) return cmd_scan(cfg);
    return cmd_verify(cfg);
  } catch (const bcd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const bcd::NotComparable& e) {
    std::cerr << "not comparable: " << e.what() << "\n";
    return 2;
  } catch (const bcd::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
