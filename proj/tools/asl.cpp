#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "asl/arc_system.hpp"
#include "asl/canonical.hpp"
#include "asl/constructions.hpp"
#include "asl/enumerate.hpp"
#include "asl/formulas.hpp"
#include "asl/io.hpp"
#include "asl/surgery.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kDefaultBudget = 9;

int env_budget() {
  const char* e = std::getenv("ASL_BUDGET");
  if (!e || !*e) return kDefaultBudget;
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(e, &pos);
  } catch (...) {
    pos = 0;
  }
  if (pos != std::strlen(e) || v < 0)
    throw asl::Error(asl::Errc::Precondition,
                     std::string("ASL_BUDGET is not a nonnegative integer: ") + e);
  return v;
}

asl::EquivMode parse_mode(const std::string& mode) {
  return mode == "mod" ? asl::EquivMode::Mod : asl::EquivMode::PMod;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw asl::Error(asl::Errc::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw asl::Error(asl::Errc::Precondition, "cannot write " + path);
  out << text;
}

struct VerifyArgs {
  int g = 0, s = 0, m = 0;
  std::string mode = "pmod";
  int budget = kDefaultBudget;
  int threads = 1;
  bool oracle = false;
  bool json = false;
  std::string witness;
};

std::string chain_to_json(const asl::ChainCertificate& chain) {
  ordered_json steps = ordered_json::array();
  for (const auto& step : chain.steps)
    steps.push_back(ordered_json::parse(asl::write_presentation(step)));
  return steps.dump(2) + "\n";
}

int cmd_verify(const VerifyArgs& a) {
  asl::SurfaceSpec spec{a.g, a.s, a.m};
  asl::require_valid(spec);
  asl::EquivMode mode = parse_mode(a.mode);
  asl::EnumOptions opt;
  opt.budget = a.budget;
  opt.threads = a.threads;

  auto maximal = asl::enumerate_maximal(spec, mode, opt);
  auto poset = asl::enumerate_filling(spec, mode, opt);
  auto spine = asl::spine_dimension_bruteforce(spec, mode, opt);
  int minfill = asl::min_filling_rank_bruteforce(spec, mode, opt);
  bool codim_ok = asl::a_infinity_codimension_check(spec, mode, opt);

  int top_rank = -1;
  for (int r : poset.roots) top_rank = std::max(top_rank, poset.nodes[r].rank);

  bool oracle_ok = true;
  if (a.oracle) {
    asl::EnumOptions slow = opt;
    slow.naive = true;
    oracle_ok = asl::enumerate_maximal(spec, mode, slow).codes == maximal.codes;
  }

  const int dim_a = asl::arc_complex_dim(spec);
  const int dim_spine = asl::spine_dim(spec);
  const int rank_min = asl::min_filling_rank(spec);
  const int announced = asl::harer_claimed_dim(spec);
  const bool codim_formula = asl::nonfilling_codim2(spec);

  bool agree = top_rank == dim_a && spine.dim == dim_spine && minfill == rank_min &&
               codim_ok == codim_formula && oracle_ok;

  if (!a.witness.empty()) spill(a.witness, chain_to_json(spine.witness));

  std::ostringstream out;
  if (a.json) {
    ordered_json doc;
    doc["g"] = a.g;
    doc["s"] = a.s;
    doc["m"] = a.m;
    doc["mode"] = a.mode;
    doc["budget"] = a.budget;
    doc["threads"] = a.threads;
    doc["maximal_classes"] = maximal.reps.size();
    doc["filling_classes"] = poset.nodes.size();
    doc["arc_complex_dim"] = {{"computed", top_rank}, {"formula", dim_a},
                              {"agree", top_rank == dim_a}};
    doc["spine_dim"] = {{"computed", spine.dim}, {"formula", dim_spine},
                        {"agree", spine.dim == dim_spine}};
    doc["min_filling_rank"] = {{"computed", minfill}, {"formula", rank_min},
                               {"agree", minfill == rank_min}};
    doc["announced_dim"] = announced;
    doc["nonfilling_codim2"] = {{"computed", codim_ok}, {"formula", codim_formula},
                                {"agree", codim_ok == codim_formula}};
    if (a.oracle) doc["oracle_agrees"] = oracle_ok;
    doc["agree"] = agree;
    out << doc.dump(2) << "\n";
  } else {
    auto row = [&](const char* name, int computed, int formula) {
      out << "  " << name << computed << "   formula " << formula << "   "
          << (computed == formula ? "ok" : "MISMATCH") << "\n";
    };
    out << "surface (g=" << a.g << ", s=" << a.s << ", m=" << a.m << "), mode "
        << a.mode << ", budget " << a.budget << ", threads " << a.threads << "\n";
    out << "  maximal classes      " << maximal.reps.size() << "\n";
    out << "  filling classes      " << poset.nodes.size() << "\n";
    row("arc complex dim      ", top_rank, dim_a);
    row("spine dim            ", spine.dim, dim_spine);
    row("min filling rank     ", minfill, rank_min);
    out << "  non-filling corank   " << (codim_ok ? ">= 2" : "< 2 ") << "   formula "
        << (codim_formula ? ">= 2" : "< 2 ") << "   "
        << (codim_ok == codim_formula ? "ok" : "MISMATCH") << "\n";
    out << "  announced dim        " << announced
        << (announced == dim_spine ? "   (matches the computed spine dim)"
                                   : "   (one below the computed spine dim)")
        << "\n";
    if (a.oracle)
      out << "  naive oracle         " << (oracle_ok ? "agrees" : "DISAGREES") << "\n";
    if (!a.witness.empty())
      out << "  witness chain        " << spine.witness.steps.size()
          << " steps -> " << a.witness << "\n";
    out << (agree ? "all checks agree" : "MISMATCH FOUND") << "\n";
  }
  std::cout << out.str();
  return agree ? 0 : 1;
}

int cmd_table(int gmax, int smax) {
  std::ostringstream out;
  out << "  g  s  m | dimA  minfill  spine  announced  vcd\n";
  out << " ---------+-------------------------------------\n";
  for (int g = 0; g <= gmax; ++g)
    for (int s = 1; s <= smax; ++s)
      for (int m = 1; m <= s; ++m) {
        asl::SurfaceSpec spec{g, s, m};
        if (!spec.ok()) continue;
        int spine = asl::spine_dim(spec);
        int announced = asl::harer_claimed_dim(spec);
        std::string vcd = "-";
        try {
          vcd = std::to_string(asl::vcd_pmod(g, s));
        } catch (const asl::Error&) {
        }
        out << std::setw(3) << g << std::setw(3) << s << std::setw(3) << m << " |"
            << std::setw(5) << asl::arc_complex_dim(spec) << std::setw(9)
            << asl::min_filling_rank(spec) << std::setw(7) << spine << std::setw(10)
            << announced << (spine != announced ? "*" : " ") << std::setw(5) << vcd
            << "\n";
      }
  std::cout << out.str();
  return 0;
}

int cmd_construct(int g, int s, int m, const std::string& out_path) {
  asl::SurfaceSpec spec{g, s, m};
  auto sp = asl::explicit_maximal(spec);
  spill(out_path, asl::write_presentation(sp));
  return 0;
}

int cmd_chain_demo(int g, const std::string& out_dir) {
  auto chain = asl::example_chain(g);
  std::filesystem::create_directories(out_dir);
  std::ostringstream out;
  for (const auto& step : chain.steps) {
    int r = asl::rank(step);
    std::filesystem::path path = std::filesystem::path(out_dir) /
        ("chain_g" + std::to_string(g) + "_rank" + std::to_string(r) + ".json");
    spill(path.string(), asl::write_presentation(step));
    out << "rank " << r << " -> " << path.string() << "\n";
  }
  std::cout << out.str();
  return 0;
}

int cmd_inspect(const std::string& path) {
  auto sp = asl::read_presentation(slurp(path));
  auto report = asl::validate(sp);
  std::ostringstream out;
  out << path << ": spec (g=" << sp.spec.genus << ", s=" << sp.spec.points
      << ", m=" << sp.spec.decorated << "), " << sp.arcs.size() << " arcs, "
      << sp.pieces.size() << " pieces\n";
  std::map<std::string, int> census;
  for (const auto& p : sp.pieces) ++census[asl::piece_class_name(asl::classify_piece(p))];
  for (const auto& [name, count] : census)
    out << "  piece census         " << count << " x " << name << "\n";
  if (report.valid) {
    out << "  rank                 " << asl::rank(sp) << "\n";
    out << "  fills up             " << (asl::fills_up(sp) ? "yes" : "no") << "\n";
    out << "  maximal              " << (asl::is_maximal(sp) ? "yes" : "no") << "\n";
    out << "valid\n";
  } else {
    for (const auto& f : report.failures)
      out << "  check failed         " << f.check << ": " << f.detail << "\n";
    out << "invalid\n";
  }
  std::cout << out.str();
  return report.valid ? 0 : 1;
}

int cmd_export_dot(const std::string& path, const std::string& out_path) {
  auto sp = asl::read_presentation(slurp(path));
  auto report = asl::validate(sp);
  if (!report.valid) {
    std::cerr << "error: " << path << " does not validate; run inspect for details\n";
    return 1;
  }
  spill(out_path, asl::export_dot(sp));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta-arc systems on punctured surfaces: exhaustive enumeration, "
               "spine dimensions, explicit constructions"};
  app.require_subcommand(1);

  int exit_code = 0;
  std::function<int()> run;

  try {
    VerifyArgs va;
    va.budget = env_budget();
    auto* verify = app.add_subcommand(
        "verify", "Enumerate everything for one surface and compare with the formulas");
    verify->add_option("--g", va.g, "genus")->required();
    verify->add_option("--s", va.s, "distinguished points")->required();
    verify->add_option("--m", va.m, "decorated points")->required();
    verify->add_option("--mode", va.mode, "equivalence mode")
        ->check(CLI::IsMember({"pmod", "mod"}));
    verify->add_option("--budget", va.budget, "arc-count cap for enumeration");
    verify->add_option("--threads", va.threads, "worker threads")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--oracle", va.oracle, "also run the unpruned enumerator");
    verify->add_flag("--json", va.json, "machine-readable output");
    verify->add_option("--witness", va.witness, "write the longest-chain certificate here");
    verify->callback([&] { run = [&] { return cmd_verify(va); }; });

    int gmax = 2, smax = 4;
    auto* table = app.add_subcommand("table", "Formula table over a range of surfaces");
    table->add_option("--gmax", gmax, "largest genus");
    table->add_option("--smax", smax, "largest point count");
    table->callback([&] { run = [&] { return cmd_table(gmax, smax); }; });

    int cg = 0, cs = 0, cm = 0;
    std::string construct_out = "-";
    auto* construct =
        app.add_subcommand("construct", "Write an explicit maximal system as JSON");
    construct->add_option("--g", cg, "genus")->required();
    construct->add_option("--s", cs, "distinguished points")->required();
    construct->add_option("--m", cm, "decorated points")->required();
    construct->add_option("--out", construct_out, "output file (default stdout)");
    construct->callback([&] { run = [&] { return cmd_construct(cg, cs, cm, construct_out); }; });

    int dg = 1;
    std::string demo_dir = ".";
    auto* demo = app.add_subcommand(
        "chain-demo", "Write a maximal ascending chain of filling systems on (g, 2, 1)");
    demo->add_option("--g", dg, "genus")->required()->check(CLI::PositiveNumber);
    demo->add_option("--out", demo_dir, "output directory");
    demo->callback([&] { run = [&] { return cmd_chain_demo(dg, demo_dir); }; });

    std::string inspect_path;
    auto* inspect = app.add_subcommand("inspect", "Validate a presentation file");
    inspect->add_option("file", inspect_path, "presentation JSON")->required();
    inspect->callback([&] { run = [&] { return cmd_inspect(inspect_path); }; });

    std::string dot_path, dot_out = "-";
    auto* dot = app.add_subcommand("export-dot", "Write the dual graph in DOT");
    dot->add_option("file", dot_path, "presentation JSON")->required();
    dot->add_option("--out", dot_out, "output file (default stdout)");
    dot->callback([&] { run = [&] { return cmd_export_dot(dot_path, dot_out); }; });

    CLI11_PARSE(app, argc, argv);
    if (run) exit_code = run();
  } catch (const asl::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    exit_code = err.code() == asl::Errc::BudgetExceeded ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    exit_code = 1;
  }
  return exit_code;
}
