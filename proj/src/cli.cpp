// Copyright 2026 The patternq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "patternq/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "patternq/game.hpp"
#include "patternq/pattern_basis.hpp"
#include "patternq/report.hpp"
#include "patternq/tables.hpp"

namespace patternq {

namespace {

std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid " + std::string(what) + " \"" + std::string(text) + "\"");
  }
  return value;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open \"" + path + "\" for writing");
  f << content;
  if (!f) throw UsageError("failed writing \"" + path + "\"");
}

/// Writes `content` to `path`, or to `out` when no path is given.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file(path, content);
  }
}

std::string manifest_path(const std::string& data_path) { return data_path + ".manifest.json"; }

void write_manifest(RunManifest manifest, Clock::time_point start, std::ostream& err) {
  if (manifest.outputs.empty()) return;
  manifest.runtime_seconds = seconds_since(start);
  const std::string path = manifest_path(manifest.outputs.front());
  write_file(path, manifest.to_json().dump(2) + "\n");
  err << "manifest written to " << path << '\n';
}

/// Histogram path next to a data file: "<stem>.hist.txt" or "<stem>.svg".
std::string histogram_path(const std::string& data_path, const std::string& kind) {
  std::filesystem::path p(data_path);
  p.replace_extension(kind == "svg" ? ".svg" : ".hist.txt");
  return p.string();
}

unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

/// Shared output handling for profile-producing subcommands.
void emit_profile(const DistanceProfile& profile, const std::string& format, const std::string& hist,
                  const std::string& out_path, RunManifest& manifest, std::ostream& out) {
  std::string data;
  if (format == "json") {
    nlohmann::json j = profile_to_json(profile);
    const PatternClass cls(profile.recipe());
    j["intervals"] = interval_summary_to_json(interval_summary(profile, cls.rho()));
    data = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    write_profile_csv(profile, os);
    data = os.str();
  }
  emit(out_path, data, out);
  if (!out_path.empty()) manifest.outputs.push_back(out_path);

  if (hist.empty()) return;
  const std::string chart = hist == "svg" ? render_histogram_svg(profile) : render_histogram_ascii(profile);
  if (out_path.empty()) {
    out << '\n' << chart;
  } else {
    const std::string path = histogram_path(out_path, hist);
    write_file(path, chart);
    manifest.outputs.push_back(path);
  }
}

std::string format_theta(double theta) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", theta);
  return buf;
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  return parse_unsigned(env, std::string(kSeedEnv) + " value");
}

void parse_quota(std::string_view text, Quotas& quotas) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw UsageError("quota \"" + std::string(text) + "\" must look like d=count or first-last=count");
  }
  const std::string_view range = text.substr(0, eq);
  const std::uint64_t count = parse_unsigned(text.substr(eq + 1), "quota count");
  const auto dash = range.find('-');
  const std::size_t first = parse_unsigned(range.substr(0, dash), "quota distance");
  const std::size_t last =
      dash == std::string_view::npos ? first : parse_unsigned(range.substr(dash + 1), "quota distance");
  if (last < first) throw UsageError("empty quota range \"" + std::string(range) + "\"");
  for (std::size_t d = first; d <= last; ++d) quotas[d] = count;
}

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern-basis classifiers, threshold profiles and the nearest basis ket game",
               "patternq"};
  app.set_version_flag("--version", std::string(PATTERNQ_VERSION));
  app.require_subcommand(1);

  std::string recipe_text;
  std::string function_text;
  std::string format = "csv";
  std::string hist;
  std::string out_path;
  std::vector<std::string> quota_texts;
  std::optional<std::uint64_t> seed_flag;
  unsigned workers = default_workers();

  auto add_recipe = [&](CLI::App* sub) {
    sub->add_option("--recipe", recipe_text, "Comma-separated factors, e.g. H,C2,H")->required();
  };
  auto add_output = [&](CLI::App* sub, std::vector<std::string> formats, std::string default_format) {
    sub->add_option("--format", format, "Output format (default " + default_format + ")")
        ->check(CLI::IsMember(std::move(formats)));
    sub->add_option("--out", out_path, "Output file (default: stdout)");
  };

  CLI::App* bases = app.add_subcommand("bases", "Build, validate and print the basis of a recipe");
  add_recipe(bases);
  bases->add_option("--out", out_path, "Output file (default: stdout)");

  CLI::App* classify = app.add_subcommand("classify", "Classify one function");
  add_recipe(classify);
  classify->add_option("--function", function_text, "Truth table, MSB first")->required();
  add_output(classify, {"text", "csv", "json"}, "text");

  CLI::App* enumerate = app.add_subcommand("enumerate", "Exhaustive threshold profile (length <= 16)");
  add_recipe(enumerate);
  add_output(enumerate, {"csv", "json"}, "csv");
  enumerate->add_option("--hist", hist, "Also draw a histogram")->check(CLI::IsMember({"ascii", "svg"}));
  enumerate->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 64U));

  CLI::App* sample = app.add_subcommand("sample", "Stratified threshold profile plus probes (length 32, 64)");
  add_recipe(sample);
  add_output(sample, {"csv", "json"}, "csv");
  sample->add_option("--hist", hist, "Also draw a histogram")->check(CLI::IsMember({"ascii", "svg"}));
  sample->add_option("--seed", seed_flag, "Master seed (default 42 or $PATTERNQ_SEED)");
  sample->add_option("--quota", quota_texts, "d=count or first-last=count; repeatable")->take_all();
  bool no_probes = false;
  sample->add_flag("--no-probes", no_probes, "Skip the all-ones/all-zeros/complement probes");

  CLI::App* tables = app.add_subcommand("tables", "Regenerate reference tables and diff expected values");
  std::string which = "all";
  tables->add_option("--which", which, "3, 5, 7, 8 or all")->check(CLI::IsMember({"3", "5", "7", "8", "all"}));
  tables->add_option("--seed", seed_flag, "Master seed for sampled tables");
  tables->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 64U));
  tables->add_option("--out", out_path, "Also write the cell report to this file");

  CLI::App* game = app.add_subcommand("game", "Simulate the nearest basis ket game");
  add_recipe(game);
  std::string bob_text = "uniform";
  std::string alice_text = "interval";
  std::uint64_t trials = 10000;
  std::string rounds_out;
  game->add_option("--bob", bob_text, "at_distance:D, pivot or uniform")->capture_default_str();
  game->add_option("--alice", alice_text, "interval, always_yes or always_no")->capture_default_str();
  game->add_option("--trials", trials, "Rounds to play")->capture_default_str();
  game->add_option("--seed", seed_flag, "Master seed (default 42 or $PATTERNQ_SEED)");
  game->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 64U));
  game->add_option("--rounds-out", rounds_out, "Per-round records as JSON lines");
  add_output(game, {"text", "json"}, "text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  for (CLI::App* sub : {classify, game}) {
    if (sub->parsed() && sub->count("--format") == 0) format = "text";
  }

  const auto start = Clock::now();
  try {
    const std::uint64_t seed = seed_flag ? *seed_flag : default_seed();

    if (bases->parsed()) {
      const Recipe recipe = Recipe::parse(recipe_text);
      const PatternClass cls(recipe);
      std::ostringstream os;
      os << cls.basis().serialize();
      emit(out_path, os.str(), out);
      err << "valid basis " << recipe.basis_string() << ": rank " << cls.arity() << ", " << cls.length()
          << " members, pairwise distance " << cls.length() / 2;
      if (cls.rho()) err << ", common zero count " << *cls.rho();
      err << '\n';
      if (!out_path.empty()) write_manifest({"bases", recipe.to_string(), "", 0, {}, {out_path}}, start, err);
      return kExitOk;
    }

    if (classify->parsed()) {
      const PatternClass cls(Recipe::parse(recipe_text));
      const PatternVector h = PatternVector::parse(function_text);
      if (h.size() != cls.length()) {
        throw UsageError("function has length " + std::to_string(h.size()) + " but recipe " +
                         cls.recipe().to_string() + " classifies length " + std::to_string(cls.length()));
      }
      const ThresholdReport r = cls.threshold(h);
      std::string data;
      if (format == "json") {
        nlohmann::json j = threshold_to_json(r);
        j["recipe"] = cls.recipe().to_string();
        j["function"] = h.to_string();
        data = j.dump(2) + "\n";
      } else if (format == "csv") {
        std::ostringstream os;
        write_distribution_csv(r.distribution, os);
        data = os.str();
      } else {
        const int bits = cls.arity();
        Eigen::Index best = 0;
        r.distribution.maxCoeff(&best);
        std::ostringstream os;
        os << "recipe " << cls.recipe().to_string() << '\n'
           << "function " << h.to_string() << '\n'
           << "distance " << r.nearest.distance << '\n'
           << "nearest";
        for (std::size_t k : r.nearest.indices) os << ' ' << k << " (" << ket_label(k, bits) << ')';
        os << '\n'
           << "theta " << format_theta(r.theta) << '\n'
           << "most likely outcome " << best << " (" << ket_label(static_cast<std::size_t>(best), bits)
           << ") with probability " << format_theta(r.distribution[best]) << '\n';
        data = os.str();
      }
      emit(out_path, data, out);
      if (!out_path.empty()) {
        write_manifest({"classify", cls.recipe().to_string(), format, 0, {}, {out_path}}, start, err);
      }
      return kExitOk;
    }

    if (enumerate->parsed()) {
      const Recipe recipe = Recipe::parse(recipe_text);
      const DistanceProfile profile = exhaustive_profile(recipe, {}, workers);
      RunManifest manifest{"enumerate", recipe.to_string(), "exhaustive", 0, {}, {}};
      emit_profile(profile, format, hist, out_path, manifest, out);
      write_manifest(manifest, start, err);
      return kExitOk;
    }

    if (sample->parsed()) {
      const Recipe recipe = Recipe::parse(recipe_text);
      require_buildable(recipe);
      Quotas quotas;
      for (const auto& q : quota_texts) parse_quota(q, quotas);
      if (quotas.empty() && recipe.total_rank() >= 5) quotas = default_table_quotas(recipe.total_rank());
      DistanceProfile profile = stratified_sample_profile(recipe, quotas, seed);
      if (!no_probes) add_probes(profile, probe_suite(PatternClass(recipe)));
      for (std::size_t d = 0; d <= profile.max_distance(); ++d) {
        if (profile.bucket(d).starved) {
          err << "warning: distance " << d << " reached " << profile.bucket(d).count << " of "
              << quotas.at(d) << " samples\n";
        }
      }
      RunManifest manifest{"sample", recipe.to_string(), "sampled", seed, quotas, {}};
      emit_profile(profile, format, hist, out_path, manifest, out);
      write_manifest(manifest, start, err);
      return kExitOk;
    }

    if (tables->parsed()) {
      std::vector<int> ids;
      if (which == "all") {
        ids = expected_table_ids();
      } else {
        ids.push_back(static_cast<int>(parse_unsigned(which, "table")));
      }
      std::ostringstream os;
      std::size_t failures = 0;
      for (int id : ids) {
        const TableReport report = reproduce_table(id, seed, workers);
        write_table_report(report, os);
        failures += report.failures();
      }
      os << (failures == 0 ? "all cells match\n" : std::to_string(failures) + " cell(s) differ\n");
      out << os.str();
      if (!out_path.empty()) {
        write_file(out_path, os.str());
        write_manifest({"tables", which, "", seed, {}, {out_path}}, start, err);
      }
      return failures == 0 ? kExitOk : kExitTableMismatch;
    }

    if (game->parsed()) {
      GameConfig config;
      config.recipe = Recipe::parse(recipe_text);
      config.bob = BobStrategy::parse(bob_text);
      config.alice = parse_alice_strategy(alice_text);
      config.trials = trials;
      config.seed = seed;

      std::ofstream rounds;
      RoundSink sink;
      if (!rounds_out.empty()) {
        rounds.open(rounds_out, std::ios::binary);
        if (!rounds) throw UsageError("cannot open \"" + rounds_out + "\" for writing");
        sink = [&rounds](const RoundRecord& r) { rounds << round_to_json(r).dump() << '\n'; };
      }
      const WinRate rate = estimate_win_rate(config, workers, sink);
      std::string data;
      if (format == "json") {
        nlohmann::json j = {{"recipe", config.recipe.to_string()},
                            {"bob", config.bob.to_string()},
                            {"alice", std::string(to_string(config.alice))},
                            {"trials", rate.trials},
                            {"seed", config.seed},
                            {"wins", rate.wins},
                            {"win_rate", rate.rate},
                            {"standard_error", rate.standard_error}};
        data = j.dump(2) + "\n";
      } else {
        std::ostringstream os;
        os << "recipe " << config.recipe.to_string() << '\n'
           << "bob " << config.bob.to_string() << '\n'
           << "alice " << to_string(config.alice) << '\n'
           << "trials " << rate.trials << '\n'
           << "seed " << config.seed << '\n'
           << "alice wins " << rate.wins << '\n'
           << "win rate " << format_theta(rate.rate) << " +- " << format_theta(rate.standard_error) << '\n';
        data = os.str();
      }
      emit(out_path, data, out);
      RunManifest manifest{"game", config.recipe.to_string(), config.bob.to_string() + "/" +
                                                                   std::string(to_string(config.alice)),
                           seed, {}, {}};
      if (!out_path.empty()) manifest.outputs.push_back(out_path);
      if (!rounds_out.empty()) manifest.outputs.push_back(rounds_out);
      write_manifest(manifest, start, err);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace patternq
