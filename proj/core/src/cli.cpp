#include "nilorb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "nilorb/currents.hpp"
#include "nilorb/parallel.hpp"
#include "nilorb/katsylo.hpp"
#include "nilorb/model.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/walgebra.hpp"

namespace nilorb {

namespace {

using nlohmann::ordered_json;

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      parts.push_back(std::stoi(tok));
    } catch (...) {
      fail(errc::usage, "bad partition entry '" + tok + "'");
    }
  }
  if (parts.empty()) fail(errc::usage, "empty partition");
  return parts;
}

int parse_epsilon(const std::string& text) {
  if (text == "+1" || text == "1" || text == "so") return 1;
  if (text == "-1" || text == "sp") return -1;
  fail(errc::usage, "epsilon must be +1, -1, so or sp (got '" + text + "')");
}

struct Options {
  std::string lambda_text, epsilon_text;
  std::string format = "plain";
  std::string out_file;
  std::string suite;
  long budget = 0;
  int max_n = 8;
  bool timings = false;
};

EpsPartition partition_of(const Options& o) {
  if (o.lambda_text.empty() || o.epsilon_text.empty())
    fail(errc::usage, "a partition and a sign are required");
  return EpsPartition::validate(parse_parts(o.lambda_text), parse_epsilon(o.epsilon_text));
}

ordered_json json_report(const CheckReport& r, bool timings) {
  ordered_json j;
  j["name"] = r.name;
  j["anchor"] = r.anchor;
  j["status"] = status_name(r.status);
  j["detail"] = r.detail;
  if (timings) j["ms"] = r.ms;
  return j;
}

void render_reports(std::ostream& os, const Options& o, const std::string& command,
                    const ordered_json& header, const std::vector<CheckReport>& reports) {
  if (o.format == "json") {
    ordered_json j = header;
    j["schema"] = 1;
    j["command"] = command;
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(json_report(r, o.timings));
    j["checks"] = arr;
    j["pass"] = all_passed(reports);
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "name,anchor,status,detail\n";
    for (const auto& r : reports) {
      std::string detail = r.detail;
      for (auto& ch : detail)
        if (ch == ',') ch = ';';
      os << r.name << "," << r.anchor << "," << status_name(r.status) << "," << detail << "\n";
    }
  } else {
    for (const auto& r : reports)
      os << "[" << status_name(r.status) << "] " << r.name << " (" << r.anchor << ") "
         << r.detail << "\n";
  }
}

ordered_json partition_header(const EpsPartition& lambda) {
  ordered_json j;
  j["lambda"] = lambda.parts();
  j["epsilon"] = lambda.epsilon();
  j["very_even"] = lambda.very_even();
  return j;
}

int cmd_sheets(std::ostream& os, const Options& o) {
  auto lambda = partition_of(o);
  auto sheets = sheet_dimensions(lambda);
  long dim_orbit = orbit_dimension(lambda);
  if (o.format == "json") {
    ordered_json j = partition_header(lambda);
    j["schema"] = 1;
    j["command"] = "sheets";
    j["orbit_dim"] = dim_orbit;
    ordered_json arr = ordered_json::array();
    for (const auto& s : sheets) {
      ordered_json e;
      e["multiset"] = s.multiset;
      e["slice_dim"] = s.slice_dim;
      e["sheet_dim"] = s.sheet_dim;
      arr.push_back(e);
    }
    j["sheets"] = arr;
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "multiset,slice_dim,sheet_dim\n";
    for (const auto& s : sheets) {
      std::ostringstream ms;
      for (std::size_t i = 0; i < s.multiset.size(); ++i)
        ms << (i ? " " : "") << s.multiset[i];
      os << ms.str() << "," << s.slice_dim << "," << s.sheet_dim << "\n";
    }
  } else {
    os << "partition " << lambda.to_string() << ", orbit dimension " << dim_orbit << "\n";
    if (lambda.very_even())
      os << "note: all parts even with epsilon=+1; the two orbits sharing this partition are"
            " not distinguished here\n";
    for (const auto& s : sheets) {
      os << "  multiset {";
      for (std::size_t i = 0; i < s.multiset.size(); ++i) os << (i ? "," : "") << s.multiset[i];
      os << "}  slice dim " << s.slice_dim << "  sheet dim " << s.sheet_dim << "\n";
    }
  }
  return 0;
}

int cmd_katsylo(std::ostream& os, const Options& o) {
  auto lambda = partition_of(o);
  auto pres = katsylo_presentation(lambda);
  auto comps = katsylo_components(pres);
  if (o.format == "json") {
    ordered_json j = partition_header(lambda);
    j["schema"] = 1;
    j["command"] = "katsylo";
    j["s_values"] = pres.s_values;
    ordered_json gens = ordered_json::array();
    for (const auto& g : pres.generators) gens.push_back(g.name());
    j["generators"] = gens;
    ordered_json rels = ordered_json::array();
    for (const auto& [a, b] : pres.relations) rels.push_back({a.name(), b.name()});
    j["relations"] = rels;
    ordered_json arr = ordered_json::array();
    for (const auto& c : comps) {
      ordered_json e;
      ordered_json vanishing = ordered_json::array();
      for (const auto& g : c.vanishing) vanishing.push_back(g.name());
      e["vanishing"] = vanishing;
      e["dimension"] = c.dimension;
      arr.push_back(e);
    }
    j["components"] = arr;
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "vanishing,dimension\n";
    for (const auto& c : comps) {
      std::ostringstream v;
      for (std::size_t i = 0; i < c.vanishing.size(); ++i)
        v << (i ? " " : "") << c.vanishing[i].name();
      os << v.str() << "," << c.dimension << "\n";
    }
  } else {
    os << "presentation of " << lambda.to_string() << ": " << pres.generators.size()
       << " generators, " << pres.relations.size() << " relations\n";
    for (const auto& c : comps) {
      os << "  component dim " << c.dimension << "  V(";
      for (std::size_t i = 0; i < c.vanishing.size(); ++i)
        os << (i ? "," : "") << c.vanishing[i].name();
      os << ")\n";
    }
  }
  return 0;
}

int cmd_model_check(std::ostream& os, const Options& o) {
  auto lambda = partition_of(o);
  auto model = LieModel::build(lambda);
  auto reports = verify_model(model);
  render_reports(os, o, "model-check", partition_header(lambda), reports);
  return all_passed(reports) ? 0 : 1;
}

int cmd_verify(std::ostream& os, const Options& o) {
  auto lambda = partition_of(o);
  long budget = o.budget > 0 ? o.budget : default_budget(lambda);
  std::vector<CheckReport> reports;
  if (o.suite == "yangian") {
    WContext ctx(lambda);
    reports.push_back(verify_bk_invariance(ctx));
    reports.push_back(verify_tau_equivariance(ctx));
    auto rel = verify_yangian_relations(ctx, budget);
    reports.insert(reports.end(), rel.begin(), rel.end());
  } else if (o.suite == "dirac") {
    WContext ctx(lambda);
    auto rel = verify_dirac_relations(ctx, budget);
    reports.insert(reports.end(), rel.begin(), rel.end());
  } else if (o.suite == "tangent-cone") {
    WContext ctx(lambda);
    reports = verify_tangent_cone(ctx);
  } else if (o.suite == "currents") {
    auto sigma = ShiftMatrix::symmetric_for(lambda);
    reports = verify_current_presentations(sigma, static_cast<int>(budget / 2));
    auto map = verify_current_centraliser_map(lambda, static_cast<int>(budget / 2));
    reports.insert(reports.end(), map.begin(), map.end());
  } else {
    fail(errc::usage, "unknown suite '" + o.suite +
                          "' (expected yangian, dirac, tangent-cone or currents)");
  }
  ordered_json header = partition_header(lambda);
  header["suite"] = o.suite;
  header["budget"] = budget;
  render_reports(os, o, "verify", header, reports);
  return all_passed(reports) ? 0 : 1;
}

int cmd_embed(std::ostream& os, const Options& o) {
  auto lambda = partition_of(o);
  auto emb = distinguished_embedding(lambda);
  if (o.format == "json") {
    ordered_json j = partition_header(lambda);
    j["schema"] = 1;
    j["command"] = "embed";
    j["distinguished"] = emb.lambda_tilde.parts();
    j["levi_blocks"] = emb.levi_blocks;
    j["step_indexes"] = emb.step_indexes;
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "distinguished,levi_blocks\n";
    std::ostringstream a, b;
    for (std::size_t i = 0; i < emb.lambda_tilde.parts().size(); ++i)
      a << (i ? " " : "") << emb.lambda_tilde.parts()[i];
    for (std::size_t i = 0; i < emb.levi_blocks.size(); ++i)
      b << (i ? " " : "") << emb.levi_blocks[i];
    os << a.str() << "," << b.str() << "\n";
  } else {
    os << lambda.to_string() << " embeds into " << emb.lambda_tilde.to_string()
       << " with gl blocks [";
    for (std::size_t i = 0; i < emb.levi_blocks.size(); ++i)
      os << (i ? "," : "") << emb.levi_blocks[i];
    os << "]\n";
  }
  return 0;
}

int cmd_scan(std::ostream& os, const Options& o) {
  if (o.suite != "sheets" && o.suite != "katsylo" && o.suite != "model")
    fail(errc::usage, "unknown scan suite '" + o.suite + "'");
  std::vector<EpsPartition> jobs;
  for (int N = 1; N <= o.max_n; ++N)
    for (int eps : {1, -1})
      for (const auto& lambda : enumerate_eps_partitions(N, eps)) {
        if (o.suite == "katsylo" &&
            (!classify(lambda).distinguished || lambda.part(1) <= 1))
          continue;
        jobs.push_back(lambda);
      }

  // one slot per partition; workers controlled by NILORB_THREADS
  std::vector<CheckReport> reports(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t idx) {
    const auto& lambda = jobs[idx];
    try {
      if (o.suite == "sheets") {
        auto multisets = maximal_admissible_multisets(lambda);
        bool singular = classify(lambda).singular;
        bool ok = (multisets.size() == 1) == !singular;
        reports[idx] = ok ? CheckReport::ok("sheets " + lambda.to_string(), "scan.sheets",
                                            std::to_string(multisets.size()) + " sheets")
                          : CheckReport::failed("sheets " + lambda.to_string(), "scan.sheets",
                                                "sheet count disagrees with singularity");
      } else if (o.suite == "katsylo") {
        reports[idx] = verify_component_bijection(lambda);
      } else {
        auto model = LieModel::build(lambda);
        auto rs = verify_model(model);
        std::string first;
        for (const auto& r : rs)
          if (!r.passed()) {
            first = r.name + ": " + r.detail;
            break;
          }
        reports[idx] = first.empty()
                           ? CheckReport::ok("model " + lambda.to_string(), "scan.model", "")
                           : CheckReport::failed("model " + lambda.to_string(), "scan.model",
                                                 first);
      }
    } catch (const std::exception& e) {
      reports[idx] = CheckReport::failed("scan " + lambda.to_string(), "scan." + o.suite,
                                         std::string("unexpected error: ") + e.what());
    }
  });
  ordered_json header;
  header["max_n"] = o.max_n;
  header["suite"] = o.suite;
  render_reports(os, o, "scan", header, reports);
  long failed = 0;
  for (const auto& r : reports)
    if (!r.passed()) ++failed;
  if (o.format == "plain")
    os << reports.size() << " partitions scanned, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact combinatorics and symbolic checks for classical nilpotent orbits"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_partition) {
    if (with_partition) {
      sub->add_option("partition", o.lambda_text, "partition, e.g. 2,4,6");
      sub->add_option("sign", o.epsilon_text, "+1|-1|so|sp");
      sub->add_option("--lambda", o.lambda_text, "partition, e.g. 2,4,6");
      sub->add_option("--epsilon", o.epsilon_text, "+1|-1|so|sp");
    }
    sub->add_option("--format", o.format, "json|csv|plain")->default_val("plain");
    sub->add_option("--out", o.out_file, "write output to a file");
    sub->add_flag("--timings", o.timings, "include timings in reports");
  };

  auto* sheets = app.add_subcommand("sheets", "maximal multisets with slice and sheet dimensions");
  add_common(sheets, true);
  auto* katsylo = app.add_subcommand("katsylo", "component presentation and dimensions");
  add_common(katsylo, true);
  auto* model = app.add_subcommand("model-check", "structural sweep of the pyramid model");
  add_common(model, true);
  auto* verify = app.add_subcommand("verify", "relation suites");
  add_common(verify, true);
  verify->add_option("--suite", o.suite, "yangian|dirac|tangent-cone|currents")->required();
  verify->add_option("--budget", o.budget, "Kazhdan degree budget");
  auto* embed = app.add_subcommand("embed", "distinguished embedding");
  add_common(embed, true);
  auto* scan = app.add_subcommand("scan", "sweep all partitions up to a bound");
  add_common(scan, false);
  scan->add_option("--max-n", o.max_n, "largest N to sweep")->required();
  scan->add_option("--suite", o.suite, "sheets|katsylo|model")->required();

  std::vector<std::string> argv_like = args;
  std::reverse(argv_like.begin(), argv_like.end());

  CliResult res;
  std::ostringstream os;
  try {
    app.parse(argv_like);
    if (sheets->parsed()) res.exit_code = cmd_sheets(os, o);
    else if (katsylo->parsed()) res.exit_code = cmd_katsylo(os, o);
    else if (model->parsed()) res.exit_code = cmd_model_check(os, o);
    else if (verify->parsed()) res.exit_code = cmd_verify(os, o);
    else if (embed->parsed()) res.exit_code = cmd_embed(os, o);
    else if (scan->parsed()) res.exit_code = cmd_scan(os, o);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    if (e.get_exit_code() != 0) help << "error: " << e.what() << "\n";
    help << app.help();
    res.out = help.str();
    res.exit_code = e.get_exit_code();
    return res;
  } catch (const error& e) {
    os << "error: " << e.what() << "\n";
    res.exit_code = 2;
  }

  res.out = os.str();
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file);
    f << res.out;
    res.out.clear();
  }
  return res;
}

} // namespace nilorb
