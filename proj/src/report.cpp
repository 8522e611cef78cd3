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

#include "patternq/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace patternq {

using nlohmann::json;

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid number \"" + std::string(text) + "\"");
  }
  return value;
}

namespace {

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid integer \"" + std::string(text) + "\"");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == s.npos ? s.npos : pos - start));
    if (pos == s.npos) break;
    start = pos + 1;
  }
  return out;
}

std::string quotas_to_string(const Quotas& quotas) {
  std::string out;
  for (const auto& [d, q] : quotas) {
    if (!out.empty()) out += ';';
    out += std::to_string(d) + ':' + std::to_string(q);
  }
  return out;
}

Quotas quotas_from_string(std::string_view text) {
  Quotas quotas;
  if (text.empty()) return quotas;
  for (auto item : split(text, ';')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw UsageError("invalid quota entry \"" + std::string(item) + "\"");
    quotas[parse_u64(parts[0])] = parse_u64(parts[1]);
  }
  return quotas;
}

json quotas_to_json(const Quotas& quotas) {
  json j = json::object();
  for (const auto& [d, q] : quotas) j[std::to_string(d)] = q;
  return j;
}

Quotas quotas_from_json(const json& j) {
  Quotas quotas;
  for (const auto& [key, value] : j.items()) quotas[parse_u64(key)] = value.get<std::uint64_t>();
  return quotas;
}

std::uint64_t quanta_from_mean(double mean, std::uint64_t count, double quantum) {
  return static_cast<std::uint64_t>(std::llround(mean * static_cast<double>(count) / quantum));
}

}  // namespace

void write_profile_csv(const DistanceProfile& profile, std::ostream& os) {
  std::string starved;
  for (std::size_t d = 0; d <= profile.max_distance(); ++d) {
    if (!profile.bucket(d).starved) continue;
    if (!starved.empty()) starved += ';';
    starved += std::to_string(d);
  }
  os << "# recipe=" << profile.recipe().to_string() << '\n'
     << "# mode=" << to_string(profile.mode()) << '\n'
     << "# seed=" << profile.seed() << '\n'
     << "# quotas=" << quotas_to_string(profile.quotas()) << '\n'
     << "# probes=" << profile.probe_count() << '\n'
     << "# starved=" << starved << '\n'
     << "distance,count,mean_theta,min_theta,max_theta\n";
  for (std::size_t d = 0; d <= profile.max_distance(); ++d) {
    const DistanceBucket& b = profile.bucket(d);
    if (b.count == 0) continue;
    os << d << ',' << b.count << ',' << format_double(*profile.mean_theta(d)) << ','
       << format_double(b.min_theta) << ',' << format_double(b.max_theta) << '\n';
  }
}

DistanceProfile read_profile_csv(std::istream& is) {
  std::map<std::string, std::string, std::less<>> meta;
  std::string line;
  std::vector<std::string> rows;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.starts_with("#")) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      meta[key] = line.substr(eq + 1);
      continue;
    }
    if (!header_seen) {
      if (line != "distance,count,mean_theta,min_theta,max_theta") {
        throw UsageError("unexpected profile CSV header \"" + line + "\"");
      }
      header_seen = true;
      continue;
    }
    rows.push_back(line);
  }
  if (!meta.contains("recipe") || !meta.contains("mode")) {
    throw UsageError("profile CSV lacks recipe/mode metadata");
  }
  DistanceProfile profile(Recipe::parse(meta["recipe"]), parse_profile_mode(meta["mode"]),
                          meta.contains("seed") ? parse_u64(meta["seed"]) : 0,
                          quotas_from_string(meta["quotas"]));
  if (meta.contains("probes")) profile.set_probe_count(parse_u64(meta["probes"]));
  for (const std::string& row : rows) {
    const auto f = split(row, ',');
    if (f.size() != 5) throw UsageError("malformed profile row \"" + row + "\"");
    DistanceBucket b;
    const std::size_t d = parse_u64(f[0]);
    b.count = parse_u64(f[1]);
    b.theta_quanta = quanta_from_mean(parse_double(f[2]), b.count, profile.quantum());
    b.min_theta = parse_double(f[3]);
    b.max_theta = parse_double(f[4]);
    profile.set_bucket(d, b);
  }
  if (!meta["starved"].empty()) {
    for (auto d : split(meta["starved"], ';')) profile.mark_starved(parse_u64(d));
  }
  return profile;
}

json profile_to_json(const DistanceProfile& profile, std::optional<double> runtime_seconds) {
  json buckets = json::array();
  for (std::size_t d = 0; d <= profile.max_distance(); ++d) {
    const DistanceBucket& b = profile.bucket(d);
    if (b.count == 0 && !b.starved) continue;
    json jb = {{"distance", d},
               {"count", b.count},
               {"theta_quanta", b.theta_quanta},
               {"starved", b.starved}};
    if (b.count > 0) {
      jb["mean_theta"] = *profile.mean_theta(d);
      jb["min_theta"] = b.min_theta;
      jb["max_theta"] = b.max_theta;
    }
    buckets.push_back(std::move(jb));
  }
  json j = {{"tool", "patternq"},
            {"version", PATTERNQ_VERSION},
            {"recipe", profile.recipe().to_string()},
            {"mode", to_string(profile.mode())},
            {"seed", profile.seed()},
            {"quotas", quotas_to_json(profile.quotas())},
            {"probes", profile.probe_count()},
            {"buckets", std::move(buckets)}};
  if (runtime_seconds) j["runtime_seconds"] = *runtime_seconds;
  return j;
}

DistanceProfile profile_from_json(const json& j) {
  DistanceProfile profile(Recipe::parse(j.at("recipe").get<std::string>()),
                          parse_profile_mode(j.at("mode").get<std::string>()),
                          j.value("seed", std::uint64_t{0}),
                          quotas_from_json(j.value("quotas", json::object())));
  profile.set_probe_count(j.value("probes", std::uint64_t{0}));
  for (const json& jb : j.at("buckets")) {
    DistanceBucket b;
    b.count = jb.at("count").get<std::uint64_t>();
    b.theta_quanta = jb.at("theta_quanta").get<std::uint64_t>();
    b.starved = jb.value("starved", false);
    if (b.count > 0) {
      b.min_theta = jb.at("min_theta").get<double>();
      b.max_theta = jb.at("max_theta").get<double>();
    }
    profile.set_bucket(jb.at("distance").get<std::size_t>(), b);
  }
  return profile;
}

std::string ket_label(std::size_t index, int bits) {
  std::string out(static_cast<std::size_t>(bits), '0');
  for (int b = 0; b < bits; ++b) {
    if ((index >> b) & 1U) out[static_cast<std::size_t>(bits - 1 - b)] = '1';
  }
  return out;
}

namespace {

int bits_for(Eigen::Index size) { return detail::index_bits(size); }

}  // namespace

void write_distribution_csv(const OutcomeDistribution<double>& probs, std::ostream& os) {
  const int bits = bits_for(probs.size());
  os << "index,bitstring,probability\n";
  for (Eigen::Index k = 0; k < probs.size(); ++k) {
    os << k << ',' << ket_label(static_cast<std::size_t>(k), bits) << ','
       << format_double(probs[k]) << '\n';
  }
}

OutcomeDistribution<double> read_distribution_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "index,bitstring,probability") {
    throw UsageError("unexpected distribution CSV header");
  }
  std::vector<double> values;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 3 || parse_u64(f[0]) != values.size()) {
      throw UsageError("malformed distribution row \"" + line + "\"");
    }
    values.push_back(parse_double(f[2]));
  }
  OutcomeDistribution<double> probs(static_cast<Eigen::Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) probs[static_cast<Eigen::Index>(k)] = values[k];
  bits_for(probs.size());
  return probs;
}

json distribution_to_json(const OutcomeDistribution<double>& probs) {
  const int bits = bits_for(probs.size());
  json outcomes = json::array();
  for (Eigen::Index k = 0; k < probs.size(); ++k) {
    outcomes.push_back({{"index", k},
                        {"bitstring", ket_label(static_cast<std::size_t>(k), bits)},
                        {"probability", probs[k]}});
  }
  return json{{"outcomes", std::move(outcomes)}};
}

OutcomeDistribution<double> distribution_from_json(const json& j) {
  const json& outcomes = j.at("outcomes");
  OutcomeDistribution<double> probs(static_cast<Eigen::Index>(outcomes.size()));
  for (const json& o : outcomes) {
    const auto k = o.at("index").get<Eigen::Index>();
    if (k < 0 || k >= probs.size()) throw UsageError("outcome index out of range");
    probs[k] = o.at("probability").get<double>();
  }
  bits_for(probs.size());
  return probs;
}

json threshold_to_json(const ThresholdReport& report) {
  const int bits = bits_for(report.distribution.size());
  json nearest = json::array();
  for (std::size_t k : report.nearest.indices) {
    nearest.push_back({{"index", k}, {"bitstring", ket_label(k, bits)}});
  }
  Eigen::Index best = 0;
  report.distribution.maxCoeff(&best);
  return json{{"distance", report.nearest.distance},
              {"nearest", std::move(nearest)},
              {"theta", report.theta},
              {"most_likely_outcome", best},
              {"most_likely_bitstring", ket_label(static_cast<std::size_t>(best), bits)},
              {"distribution", distribution_to_json(report.distribution)["outcomes"]}};
}

json interval_summary_to_json(const IntervalSummary& summary) {
  json regions = json::array();
  for (const IntervalRegion& r : summary.regions) {
    regions.push_back({{"region", r.id},
                       {"first", r.first},
                       {"last", r.last},
                       {"expectation", r.expectation},
                       {"populated", r.populated},
                       {"offending", r.offending},
                       {"verdict", r.consistent() ? "consistent" : "violated"}});
  }
  json j = {{"regions", std::move(regions)},
            {"consistent", summary.consistent()},
            {"monotonicity_breaks", summary.monotonicity_breaks}};
  if (summary.spike) {
    j["rho_spike"] = {{"rho", summary.spike->rho}, {"mean_theta", summary.spike->mean_theta}};
  }
  return j;
}

json round_to_json(const RoundRecord& r) {
  return json{{"round", r.round},
              {"seed", r.seed},
              {"function", r.function.to_string()},
              {"distance", r.distance},
              {"outcome", r.outcome},
              {"ground_truth", r.ground_truth ? "yes" : "no"},
              {"answer", to_string(r.answer)},
              {"winner", r.winner == Player::kAlice ? "alice" : "bob"}};
}

std::string render_histogram_ascii(const DistanceProfile& profile) {
  if (profile.empty()) throw UsageError("cannot draw a histogram of an empty profile");
  std::uint64_t max_count = 0;
  for (const auto& b : profile.buckets()) max_count = std::max(max_count, b.count);

  std::ostringstream os;
  os << "recipe " << profile.recipe().to_string() << " (" << to_string(profile.mode()) << ")\n";
  os << "functions per distance (#)\n";
  for (std::size_t d = 0; d <= profile.max_distance(); ++d) {
    const auto& b = profile.bucket(d);
    if (b.count == 0) continue;
    const auto width = static_cast<int>(std::lround(
        static_cast<double>(kAsciiBarWidth) * static_cast<double>(b.count) / static_cast<double>(max_count)));
    char label[16];
    std::snprintf(label, sizeof label, "%4zu |", d);
    os << label << std::string(static_cast<std::size_t>(width), '#')
       << std::string(static_cast<std::size_t>(kAsciiBarWidth - width), ' ') << "| " << b.count << '\n';
  }
  os << "mean classification threshold per distance (=)\n";
  for (std::size_t d = 0; d <= profile.max_distance(); ++d) {
    const auto mean = profile.mean_theta(d);
    if (!mean) continue;
    const int width = static_cast<int>(std::lround(kAsciiBarWidth * std::clamp(*mean, 0.0, 1.0)));
    char label[16];
    std::snprintf(label, sizeof label, "%4zu |", d);
    char value[32];
    std::snprintf(value, sizeof value, "%.4f", *mean);
    os << label << std::string(static_cast<std::size_t>(width), '=')
       << std::string(static_cast<std::size_t>(kAsciiBarWidth - width), ' ') << "| " << value << '\n';
  }
  return os.str();
}

std::string render_histogram_svg(const DistanceProfile& profile) {
  if (profile.empty()) throw UsageError("cannot draw a histogram of an empty profile");
  constexpr double kWidth = 800, kHeight = 420;
  constexpr double kLeft = 70, kRight = 70, kTop = 40, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const std::size_t slots = profile.max_distance() + 1;
  const double slot_w = plot_w / static_cast<double>(slots);

  std::uint64_t max_count = 0;
  for (const auto& b : profile.buckets()) max_count = std::max(max_count, b.count);

  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
     << "font-size=\"15\">Classification threshold vs Hamming distance, recipe "
     << profile.recipe().to_string() << " (" << to_string(profile.mode()) << ")</text>\n";

  // Axes.
  const double x0 = kLeft, y0 = kTop + plot_h;
  os << "<g stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x0 + plot_w) << "\" y2=\""
     << num(y0) << "\"/>\n"
     << "<line x1=\"" << num(x0) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(x0) << "\" y2=\""
     << num(y0) << "\"/>\n"
     << "<line x1=\"" << num(x0 + plot_w) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(x0 + plot_w)
     << "\" y2=\"" << num(y0) << "\"/>\n"
     << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"11\">\n"
     << "<text x=\"" << num(x0 - 8) << "\" y=\"" << num(kTop + 4) << "\" text-anchor=\"end\" fill=\"green\">"
     << max_count << "</text>\n"
     << "<text x=\"" << num(x0 - 8) << "\" y=\"" << num(y0 + 4) << "\" text-anchor=\"end\" fill=\"green\">0</text>\n"
     << "<text x=\"" << num(x0 + plot_w + 8) << "\" y=\"" << num(kTop + 4) << "\" fill=\"red\">1.00</text>\n"
     << "<text x=\"" << num(x0 + plot_w + 8) << "\" y=\"" << num(y0 + 4) << "\" fill=\"red\">0.00</text>\n"
     << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 12)
     << "\" text-anchor=\"middle\">Hamming distance from class</text>\n";
  const std::size_t label_step = std::max<std::size_t>(1, slots / 16);
  for (std::size_t d = 0; d < slots; d += label_step) {
    os << "<text x=\"" << num(x0 + (static_cast<double>(d) + 0.5) * slot_w) << "\" y=\"" << num(y0 + 16)
       << "\" text-anchor=\"middle\">" << d << "</text>\n";
  }
  os << "</g>\n";

  os << "<g fill=\"green\" fill-opacity=\"0.6\">\n";
  for (std::size_t d = 0; d < slots; ++d) {
    const auto& b = profile.bucket(d);
    if (b.count == 0) continue;
    const double h = plot_h * static_cast<double>(b.count) / static_cast<double>(max_count);
    os << "<rect x=\"" << num(x0 + static_cast<double>(d) * slot_w + 0.1 * slot_w) << "\" y=\""
       << num(y0 - h) << "\" width=\"" << num(0.4 * slot_w) << "\" height=\"" << num(h) << "\"/>\n";
  }
  os << "</g>\n<g fill=\"red\" fill-opacity=\"0.8\">\n";
  std::string points;
  for (std::size_t d = 0; d < slots; ++d) {
    const auto mean = profile.mean_theta(d);
    if (!mean) continue;
    const double h = plot_h * std::clamp(*mean, 0.0, 1.0);
    os << "<rect x=\"" << num(x0 + static_cast<double>(d) * slot_w + 0.5 * slot_w) << "\" y=\""
       << num(y0 - h) << "\" width=\"" << num(0.4 * slot_w) << "\" height=\"" << num(h) << "\"/>\n";
    if (!points.empty()) points += ' ';
    points += num(x0 + (static_cast<double>(d) + 0.7) * slot_w) + "," + num(y0 - h);
  }
  os << "</g>\n"
     << "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"2\" points=\"" << points << "\"/>\n"
     << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect x=\"" << num(kLeft + 10) << "\" y=\"" << num(kTop + 6)
     << "\" width=\"12\" height=\"12\" fill=\"green\" fill-opacity=\"0.6\"/>\n"
     << "<text x=\"" << num(kLeft + 28) << "\" y=\"" << num(kTop + 16) << "\">functions per distance</text>\n"
     << "<rect x=\"" << num(kLeft + 10) << "\" y=\"" << num(kTop + 24)
     << "\" width=\"12\" height=\"12\" fill=\"red\" fill-opacity=\"0.8\"/>\n"
     << "<text x=\"" << num(kLeft + 28) << "\" y=\"" << num(kTop + 34)
     << "\">mean classification threshold</text>\n"
     << "</g>\n</svg>\n";
  return os.str();
}

json RunManifest::to_json() const {
  return json{{"subcommand", subcommand},
              {"recipe", recipe},
              {"mode", mode},
              {"seed", seed},
              {"quotas", quotas_to_json(quotas)},
              {"outputs", outputs},
              {"tool_version", tool_version},
              {"runtime_seconds", runtime_seconds}};
}

RunManifest RunManifest::from_json(const json& j) {
  RunManifest m;
  m.subcommand = j.at("subcommand").get<std::string>();
  m.recipe = j.value("recipe", "");
  m.mode = j.value("mode", "");
  m.seed = j.value("seed", std::uint64_t{0});
  m.quotas = quotas_from_json(j.value("quotas", json::object()));
  m.outputs = j.value("outputs", std::vector<std::string>{});
  m.tool_version = j.value("tool_version", "");
  m.runtime_seconds = j.value("runtime_seconds", 0.0);
  return m;
}

}  // namespace patternq
