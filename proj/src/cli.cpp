#include "sombor/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sombor/anneal.hpp"
#include "sombor/constructor.hpp"
#include "sombor/index.hpp"
#include "sombor/io.hpp"
#include "sombor/oracle.hpp"
#include "sombor/swap.hpp"
#include "sombor/sweep.hpp"
#include "sombor/theorems.hpp"

namespace sombor::cli {

namespace {

using nlohmann::json;

std::uint64_t default_cap() {
  const char* env = std::getenv("SOMBOR_CAP");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used);
    if (used == std::string(env).size()) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, std::string("SOMBOR_CAP is not a count: '") + env + "'");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Options {
  std::string degrees;
  std::string format;
  std::string out_path;
  std::string input;
  std::string witness_dir;
  std::uint64_t cap = 0;
  int workers = 1;
  int max_n = 0;
  std::uint64_t budget = 100'000;
  std::uint64_t seed = 42;
  bool all_records = false;
};

int do_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const auto d = parse_degrees(o.degrees);
  const Tree t = construct_max_tree(d);
  const double so = sombor_index(t);
  std::string payload;
  if (o.format == "json") {
    json j = tree_to_json(t);
    j["degrees"] = d.to_string();
    j["sombor_index"] = so;
    payload = j.dump(2) + "\n";
  } else if (o.format == "dot") {
    payload = to_dot(t);
  } else {
    payload = to_edge_list(t);
  }
  const std::string summary = "degrees=" + d.to_string() + " n=" + std::to_string(t.vertex_count()) +
                              " sombor_index=" + format_real(so) + "\n";
  if (!o.out_path.empty()) {
    write_text_file(o.out_path, payload);
    out << summary;
  } else {
    out << payload;
    if (o.format != "json") err << summary;
  }
  return kConfirmed;
}

int do_score(const Options& o, std::ostream& out) {
  const Tree t = read_tree_file(o.input);
  const double so = sombor_index(t);
  if (o.format == "json") {
    emit(out, {{"n", t.vertex_count()}, {"sombor_index", so}});
  } else {
    out << format_real(so) << '\n';
  }
  return kConfirmed;
}

int do_verify(const Options& o, std::ostream& out) {
  const auto d = parse_degrees(o.degrees);
  SweepOptions options;
  options.cap = o.cap;
  options.workers = o.workers;
  if (!o.witness_dir.empty()) options.witness_dir = o.witness_dir;
  OracleResult oracle;
  const SweepRecord r = evaluate_sequence(d, options, &oracle);
  const bool counterexample = !r.capped && !r.optimal;
  const char* verdict = r.capped ? "inconclusive" : (r.optimal ? "optimal" : "counterexample");

  const Tree constructed = construct_max_tree(d);
  json j{{"degrees", r.degrees},
         {"n", r.n},
         {"m", r.m},
         {"constructed_so", r.constructed_so},
         {"oracle_so", r.oracle_so},
         {"gap", r.gap},
         {"optimal", r.optimal},
         {"capped", r.capped},
         {"enumerated", r.enumerated},
         {"total", oracle.total},
         {"verdict", verdict},
         {"constructed_tree", tree_to_json(constructed)},
         {"oracle", to_json(oracle)}};
  if (counterexample) {
    j["witness_pair"] = {{"constructed", tree_to_json(constructed)},
                         {"oracle", tree_to_json(oracle.witnesses.front().tree)}};
  }
  if (o.format == "text") {
    out << "degrees " << r.degrees << "\nconstructed " << format_real(r.constructed_so)
        << "\noracle " << format_real(r.oracle_so) << "\nenumerated " << r.enumerated
        << "\nverdict " << verdict << '\n';
  } else {
    emit(out, j);
  }
  if (r.capped) return kInconclusive;
  return counterexample ? kCounterexample : kConfirmed;
}

int do_check(const Options& o, std::ostream& out) {
  const auto d = parse_degrees(o.degrees);
  const Tree t = construct_max_tree(d);
  const auto theorem1 = check_theorem1(t);
  const auto local = is_local_max(t);
  if (o.format == "text") {
    out << "degrees " << d.to_string() << "\nsombor_index " << format_real(local.so)
        << "\ntheorem1_records " << theorem1.records.size() << "\ntheorem1_violations "
        << theorem1.violations << "\nlocal_max " << (local.local_max ? "true" : "false") << '\n';
  } else {
    emit(out, {{"degrees", d.to_string()},
               {"tree", tree_to_json(t)},
               {"sombor_index", local.so},
               {"theorem1", theorem1.to_json(o.all_records)},
               {"local_max", to_json(local)}});
  }
  return local.local_max ? kConfirmed : kCounterexample;
}

int do_sweep(const Options& o, std::ostream& out) {
  SweepOptions options;
  options.cap = o.cap;
  options.workers = o.workers;
  const std::filesystem::path csv_path(o.out_path);
  options.witness_dir = o.witness_dir.empty() ? csv_path.parent_path() : std::filesystem::path(o.witness_dir);
  if (options.witness_dir->empty()) options.witness_dir = ".";
  const auto records = sweep(o.max_n, options);
  if (csv_path.has_parent_path()) std::filesystem::create_directories(csv_path.parent_path());
  write_text_file(csv_path, to_csv(records));

  std::size_t optimal = 0, capped = 0, counterexamples = 0;
  for (const auto& r : records) {
    optimal += r.optimal;
    capped += r.capped;
    counterexamples += (!r.capped && !r.optimal);
  }
  emit(out, {{"rows", records.size()},
             {"optimal", optimal},
             {"capped", capped},
             {"counterexamples", counterexamples},
             {"csv", csv_path.string()}});
  if (counterexamples > 0) return kCounterexample;
  return capped > 0 ? kInconclusive : kConfirmed;
}

int do_search(const Options& o, std::ostream& out) {
  const auto d = parse_degrees(o.degrees);
  AnnealOptions options;
  options.budget = o.budget;
  options.seed = o.seed;
  const auto result = anneal_search(d, options);
  const bool beaten = !approx_equal(result.best_so, result.start_so) && result.best_so > result.start_so;
  if (o.format == "text") {
    out << "degrees " << d.to_string() << "\nconstructed " << format_real(result.start_so)
        << "\nbest " << format_real(result.best_so) << "\nproposals " << result.proposals
        << "\ncounterexample " << (beaten ? "true" : "false") << '\n';
  } else {
    json j = to_json(result);
    j["degrees"] = d.to_string();
    j["seed"] = o.seed;
    j["budget"] = o.budget;
    j["counterexample"] = beaten;
    emit(out, j);
  }
  return beaten ? kCounterexample : kConfirmed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal maximum-Sombor trees for a given degree sequence", "sombor"};
  app.require_subcommand(1);
  Options o;
  try {
    o.cap = default_cap();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  auto* construct = app.add_subcommand("construct", "Build the candidate maximum tree");
  construct->add_option("--degrees", o.degrees, "Internal degrees, comma separated")->required();
  o.format = "json";
  construct->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot", "edges"}));
  construct->add_option("--out", o.out_path, "Write the tree to FILE");

  auto* score = app.add_subcommand("score", "Sombor index of a tree JSON file");
  score->add_option("--input", o.input)->required();
  score->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Compare the construction with exhaustive search");
  verify->add_option("--degrees", o.degrees)->required();
  verify->add_option("--cap", o.cap, "Enumeration cap (default 1e7 or $SOMBOR_CAP)");
  verify->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
  verify->add_option("--witness-dir", o.witness_dir, "Write witness trees here on a mismatch");
  verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "Path-degree report and swap local-max report");
  check->add_option("--degrees", o.degrees)->required();
  check->add_flag("--all-records", o.all_records, "Include passing path records");
  check->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "Verify every degree sequence up to max n");
  sweep_cmd->add_option("--max-n", o.max_n)->required()->check(CLI::Range(3, 64));
  sweep_cmd->add_option("--cap", o.cap);
  sweep_cmd->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", o.out_path, "CSV report path")->required();
  sweep_cmd->add_option("--witness-dir", o.witness_dir);

  auto* search = app.add_subcommand("search", "Simulated annealing from the constructed tree");
  search->add_option("--degrees", o.degrees)->required();
  search->add_option("--budget", o.budget, "Proposed moves");
  search->add_option("--seed", o.seed);
  search->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kConfirmed;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kConfirmed;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  // Subcommands whose format default differs from construct's.
  auto text_default = [&](CLI::App* sub, const char* fallback) {
    if (sub->count("--format") == 0) o.format = fallback;
  };

  try {
    if (*construct) return do_construct(o, out, err);
    if (*score) {
      text_default(score, "text");
      return do_score(o, out);
    }
    if (*verify) {
      text_default(verify, "json");
      return do_verify(o, out);
    }
    if (*check) {
      text_default(check, "json");
      return do_check(o, out);
    }
    if (*sweep_cmd) return do_sweep(o, out);
    if (*search) {
      text_default(search, "json");
      return do_search(o, out);
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    if (e.code() != ErrorCode::Io) {
      for (auto* sub : app.get_subcommands()) err << '\n' << sub->help();
    }
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace sombor::cli
