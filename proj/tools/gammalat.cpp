// Command-line front end: verification suites, ad-hoc Ĥ0, and object dumps.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gammalat/gammalat.hpp"

namespace gl = gammalat;

namespace {

constexpr int kUsageError = 2;

struct Settings {
  unsigned jobs = 1;
  bool table = false;
  bool check_norm_route = false;
  int max_n = 24;
  std::vector<int> dihedral_n;
  std::vector<int> lemma_n;
  std::vector<std::string> suites{"dihedral", "lemmas", "counterexample"};  // for `verify all`
};

// An n-list is either [2, 4, 6] or {"from": 2, "to": 12}; ranges step over even n.
std::vector<int> n_list(const nlohmann::json& j) {
  if (j.is_array()) return j.get<std::vector<int>>();
  std::vector<int> out;
  int from = j.at("from").get<int>(), to = j.at("to").get<int>();
  for (int n = from + (from % 2 != 0); n <= to; n += 2) out.push_back(n);
  return out;
}

// Config values apply only where the corresponding flag was not given.
void apply_config(const std::string& path, Settings& s, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw gl::Error("cannot open config file " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  auto unset = [&app](const char* flag) { return app.get_option(flag)->count() == 0; };
  if (j.contains("jobs") && unset("--jobs")) s.jobs = j["jobs"].get<unsigned>();
  if (j.contains("format") && unset("--table") && unset("--json")) s.table = j["format"].get<std::string>() == "table";
  if (j.contains("check_norm_route") && unset("--check-norm-route"))
    s.check_norm_route = j["check_norm_route"].get<bool>();
  if (j.contains("max_n") && unset("--max-n")) s.max_n = j["max_n"].get<int>();
  if (j.contains("dihedral_n")) s.dihedral_n = n_list(j["dihedral_n"]);
  if (j.contains("lemma_n")) s.lemma_n = n_list(j["lemma_n"]);
  if (j.contains("suites")) {
    s.suites = j["suites"].get<std::vector<std::string>>();
    for (const auto& name : s.suites)
      if (name != "dihedral" && name != "lemmas" && name != "counterexample")
        throw gl::InvalidParameter("unknown suite '" + name + "' in config");
  }
}

int emit(const gl::Report& r, const Settings& s) {
  if (s.table)
    std::cout << r.to_table();
  else
    std::cout << r.to_json().dump(2) << "\n";
  return r.pass() ? 0 : 1;
}

// Prefixes check names with the group when several n share one report.
std::vector<gl::CheckJob> for_each_n(const std::vector<int>& ns,
                                     const std::function<std::vector<gl::CheckJob>(int)>& make) {
  std::vector<gl::CheckJob> all;
  for (int n : ns)
    for (auto job : make(n)) {
      if (ns.size() > 1) job.name = "D" + std::to_string(2 * n) + "/" + job.name;
      all.push_back(std::move(job));
    }
  return all;
}

std::string group_list(const std::vector<int>& ns) {
  std::string s;
  for (int n : ns) s += (s.empty() ? "" : ",") + std::string("D") + std::to_string(2 * n);
  return s;
}

// Echo of the command for the report. Flags that only affect scheduling or
// output format are left out so the digest identifies the computation.
std::string command_echo(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--json" || a == "--table" || a.rfind("--jobs=", 0) == 0) continue;
    if (a == "--jobs" || a == "-j") {
      ++i;
      continue;
    }
    if (a.rfind("-j", 0) == 0 && a.size() > 2 && std::isdigit(static_cast<unsigned char>(a[2]))) continue;
    s += (s.empty() ? "" : " ") + a;
  }
  return s;
}

// "0", "Z/2 + Z/2", "Z^2 + Z/4", "(Z/2)^2".
gl::AbGroup parse_abgroup(const std::string& text) {
  if (text == "0") return gl::AbGroup::trivial();
  std::size_t free_rank = 0;
  std::vector<gl::Integer> orders;
  static const std::regex term(R"(\s*(?:(Z)(?:\^(\d+))?|\(Z/(\d+)\)\^(\d+)|Z/(\d+))\s*)");
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t plus = text.find('+', pos);
    std::string t = text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    std::smatch m;
    if (!std::regex_match(t, m, term)) throw gl::ParseError("cannot parse abelian group term '" + t + "'", pos);
    if (m[1].matched)
      free_rank += m[2].matched ? std::stoul(m[2]) : 1;
    else if (m[3].matched)
      orders.insert(orders.end(), std::stoul(m[4]), gl::Integer(m[3].str()));
    else
      orders.emplace_back(m[5].str());
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return gl::AbGroup::from_orders(free_rank, orders);
}

void write_object(const std::string& object, const std::optional<std::string>& group, std::ostream& out) {
  static const std::regex matrix_object(R"(\s*(d1|d2|d2dual)\(\s*([A-Za-z0-9]+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(object, m, matrix_object)) {
    gl::GroupPtr g = gl::parse_group_spec(m[2].str());
    gl::PresentationComplex c = gl::presentation_complex(gl::default_presentation(*g), g);
    const gl::ZPiMatrix& zm = m[1] == "d1" ? c.d1 : c.d2;
    gl::ZPiMatrix chosen = m[1] == "d2dual" ? zm.dual() : zm;
    gl::write_matrix(out, gl::zpi_matrix_to_map(chosen).matrix());
    return;
  }
  if (!group) throw gl::InvalidParameter("--group is required to dump a module expression");
  gl::GroupPtr g = gl::parse_group_spec(*group);
  gl::ModuleExpr e = gl::parse_module_expr(object);
  std::string kind = e.str();
  std::erase(kind, ' ');
  gl::write_lattice(out, gl::evaluate_module(e, g), kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Tate homology of Γ-functor lattices over integral group rings"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Settings s;
  std::string config;
  app.add_option("--jobs,-j", s.jobs, "worker threads for independent checks")->check(CLI::Range(1u, 256u));
  auto* json_flag = app.add_flag("--json", "JSON report (default)");
  auto* table_flag = app.add_flag("--table", s.table, "human-readable table");
  json_flag->excludes(table_flag);
  app.add_flag("--check-norm-route", s.check_norm_route, "cross-check Ĥ0 through the kernel of the norm");
  app.add_option("--max-n", s.max_n, "largest dihedral n accepted")->check(CLI::PositiveNumber);
  app.add_option("--config", config, "JSON config file (flags take precedence)")->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  std::vector<int> dihedral_n, lemma_n;
  auto* vd = verify->add_subcommand("dihedral", "vanishing of Ĥ0 for Γ(ker d2) and Γ(coker d^2)");
  vd->add_option("--n", dihedral_n, "even n (group of order 2n); repeatable");
  auto* vl = verify->add_subcommand("lemmas", "module computations and sequence identities");
  vl->add_option("--n", lemma_n, "even n; repeatable");
  auto* vc = verify->add_subcommand("counterexample", "J and J* over D8 x Z/2");
  auto* va = verify->add_subcommand("all", "every suite enabled in the config (default: all three)");

  auto* h0 = app.add_subcommand("h0", "Tate homology of a module expression");
  std::string group_spec, module_spec, expect;
  bool all_degrees = false;
  h0->add_option("--group", group_spec, "group, e.g. D8, Q8, C4, D8xC2")->required();
  h0->add_option("--module", module_spec, "module expression, e.g. gamma(I2)")->required();
  h0->add_option("--expect", expect, "expected Ĥ0, e.g. \"Z/2 + Z/2\" or 0");
  h0->add_flag("--all", all_degrees, "also report Ĥ1 and Ĥ-1");

  auto* dump = app.add_subcommand("dump", "serialize an object");
  std::string object, out_path;
  std::optional<std::string> dump_group;
  dump->add_option("--object", object, "d2(<group>), d1(<group>), d2dual(<group>) or a module expression")->required();
  dump->add_option("--group", dump_group, "group for module expressions");
  dump->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config.empty()) apply_config(config, s, app);
    gl::VerifyOptions opts{s.check_norm_route, s.max_n};
    const std::string echo = command_echo(argc, argv);

    auto check_even = [](const std::vector<int>& ns) {
      if (ns.empty()) throw gl::InvalidParameter("--n is required");
      for (int n : ns)
        if (n < 2 || n % 2 != 0)
          throw gl::InvalidParameter("n = " + std::to_string(n) +
                                     " is not supported: odd n gives groups with 4-periodic cohomology, "
                                     "which are out of scope; use an even n >= 2");
    };

    if (*va) {
      std::vector<int> dn = s.dihedral_n.empty() ? std::vector<int>{2, 4, 6, 8, 10, 12} : s.dihedral_n;
      std::vector<int> ln = s.lemma_n.empty() ? std::vector<int>{2, 4, 6} : s.lemma_n;
      std::vector<gl::CheckJob> jobs;
      auto add = [&jobs](const std::string& suite, std::vector<gl::CheckJob> more) {
        for (auto& j : more) {
          j.name = suite + "/" + j.name;
          jobs.push_back(std::move(j));
        }
      };
      for (const auto& suite : s.suites) {
        if (suite == "dihedral") {
          check_even(dn);
          add(suite, for_each_n(dn, [&](int n) { return gl::dihedral_checks(n, opts); }));
        } else if (suite == "lemmas") {
          check_even(ln);
          add(suite, for_each_n(ln, [&](int n) { return gl::lemma_checks(n, opts); }));
        } else {
          add(suite, gl::counterexample_checks(opts));
        }
      }
      return emit(gl::run_checks(echo, "all", jobs, s.jobs), s);
    }

    if (*vd || *vl) {
      bool dihedral = static_cast<bool>(*vd);
      std::vector<int> ns = dihedral ? (dihedral_n.empty() ? s.dihedral_n : dihedral_n)
                                     : (lemma_n.empty() ? s.lemma_n : lemma_n);
      check_even(ns);
      auto jobs = for_each_n(ns, [&](int n) { return dihedral ? gl::dihedral_checks(n, opts) : gl::lemma_checks(n, opts); });
      return emit(gl::run_checks(echo, group_list(ns), jobs, s.jobs), s);
    }
    if (*vc) return emit(gl::run_checks(echo, "D8xC2", gl::counterexample_checks(opts), s.jobs), s);

    if (*h0) {
      gl::GroupPtr g = gl::parse_group_spec(group_spec);
      gl::ModuleExpr e = gl::parse_module_expr(module_spec);
      std::optional<gl::AbGroup> expected;
      if (!expect.empty()) expected = parse_abgroup(expect);
      auto lattice = std::make_shared<std::optional<gl::Lattice>>();
      auto get = [=]() -> const gl::Lattice& {
        if (!*lattice) *lattice = gl::evaluate_module(e, g);
        return **lattice;
      };
      gl::TateOptions t{s.check_norm_route};
      std::vector<gl::CheckJob> jobs{
          {"rank", "rank of " + e.str(), [=](gl::Check& c) {
             c.computed = std::to_string(get().rank());
             c.status = gl::Status::Report;
           }},
          {"h0", "Ĥ0(" + g->name() + "; " + e.str() + ")", [=](gl::Check& c) {
             gl::AbGroup h = gl::tate_h0(get(), t);
             if (expected)
               gl::expect_group(c, h, *expected);
             else
               gl::report_group(c, h);
           }}};
      if (all_degrees) {
        jobs.push_back({"h1", "Ĥ1(" + g->name() + "; " + e.str() + ")", [=](gl::Check& c) {
                          gl::report_group(c, gl::tate_h1(get(), gl::presentation_complex(gl::default_presentation(*g), g)));
                        }});
        jobs.push_back({"hm1", "Ĥ-1(" + g->name() + "; " + e.str() + ")",
                        [=](gl::Check& c) { gl::report_group(c, gl::tate_h_minus1(get())); }});
      }
      // The jobs share one lazily built lattice, so they run sequentially.
      return emit(gl::run_checks(echo, g->name(), jobs, 1), s);
    }

    if (*dump) {
      if (out_path.empty()) {
        write_object(object, dump_group, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) throw gl::Error("cannot write " + out_path);
        write_object(object, dump_group, out);
      }
      return 0;
    }
  } catch (const gl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const gl::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
