// Copyright 2026 The cvtangle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvtangle/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cvtangle/entanglement.hpp"
#include "cvtangle/error.hpp"
#include "cvtangle/io.hpp"
#include "cvtangle/monogamy.hpp"
#include "cvtangle/states.hpp"

namespace cvtangle::cli {

namespace {

std::vector<int> parse_modes(const std::string& text) {
  std::vector<int> modes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorCode::InvalidArgument, "bad mode index '" + item + "' in cut");
    }
    modes.push_back(m);
  }
  return modes;
}

// Writes to --out when given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct MakeArgs {
  std::string family;
  int modes = 0;
  double r = 0.0;
  double a_loc = 1.0;
  std::vector<double> a;
  std::uint64_t seed = 0;
  double squeeze_max = 1.5;
  std::string out;
};

CovarianceMatrix make_state(const MakeArgs& m, const CLI::App& cmd) {
  auto given = [&](const char* name) { return cmd.count(name) > 0; };
  auto need = [&](const char* name) {
    if (!given(name)) {
      throw Error(ErrorCode::InvalidArgument, "--family " + m.family + " needs " + name);
    }
  };
  if (m.family == "vacuum") return vacuum(given("--modes") ? m.modes : 1);
  if (m.family == "tms") {
    need("--r");
    return two_mode_squeezed(m.r);
  }
  if (m.family == "symmetric") {
    need("--a-loc");
    return fully_symmetric_pure({given("--modes") ? m.modes : 3, m.a_loc});
  }
  if (m.family == "three-pure") {
    need("--a");
    return three_mode_pure({m.a[0], m.a[1], m.a[2]});
  }
  // random
  return random_pure({given("--modes") ? m.modes : 4, m.seed, m.squeeze_max});
}

void print_record(std::ostream& os, const MonogamyRecord& r) {
  os << "reference " << r.reference_mode << " global " << io::format_number(r.global_contangle)
     << " pairs";
  for (double p : r.pair_contangles) os << ' ' << io::format_number(p);
  os << " residual " << io::format_number(r.residual) << '\n';
}

struct MonteCarloArgs {
  int modes = 4;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  int jobs = 1;
  double squeeze_max = 1.5;
  std::string out;
  std::string summary;
  bool resume = false;
};

// Keeps the well-formed prefix of an interrupted run (rows 0..k-1 in order).
std::vector<std::string> resumable_rows(const std::string& path, const std::string& header,
                                        std::uint64_t first_seed) {
  std::ifstream is(path);
  if (!is) return {};
  std::string line;
  if (!std::getline(is, line)) return {};
  if (line != header) {
    throw Error(ErrorCode::InvalidArgument, path + " has a different record layout; cannot resume");
  }
  std::vector<std::string> rows;
  while (std::getline(is, line)) {
    std::stringstream text(header + '\n' + line + '\n');
    std::vector<MonogamyRecord> parsed;
    try {
      parsed = io::read_records_csv(text);
    } catch (const Error&) {
      break;
    }
    if (parsed.size() != 1 || parsed[0].index != rows.size()) break;
    if (rows.empty() && parsed[0].seed != first_seed) {
      throw Error(ErrorCode::InvalidArgument, path + " was produced with a different seed");
    }
    rows.push_back(line);
  }
  return rows;
}

int run_montecarlo(const MonteCarloArgs& a, std::ostream& out, std::ostream& err) {
  const SamplerConfig config{a.modes, a.seed, a.squeeze_max};
  config.check();
  MonteCarloOptions options;
  options.jobs = a.jobs;
  const int columns = io::pair_columns(a.modes);
  const std::string header = io::csv_header(columns);

  std::vector<MonogamyRecord> records;
  std::ofstream file;
  std::ostream* csv = &out;
  std::size_t done = 0;
  if (!a.out.empty()) {
    std::vector<std::string> kept;
    if (a.resume && std::filesystem::exists(a.out)) {
      kept = resumable_rows(a.out, header, substream_seed(a.seed, 0));
      std::stringstream text;
      text << header << '\n';
      for (const auto& row : kept) text << row << '\n';
      records = io::read_records_csv(text);
    }
    done = std::min(kept.size(), a.count);
    file.open(a.out, std::ios::trunc);
    if (!file) throw Error(ErrorCode::Io, "cannot open " + a.out + " for writing");
    file << header << '\n';
    for (std::size_t k = 0; k < done; ++k) file << kept[k] << '\n';
    records.resize(done);
    csv = &file;
    if (done > 0) err << "resuming after " << done << " records\n";
  } else {
    *csv << header << '\n';
  }

  constexpr std::size_t kChunk = 200;
  while (done < a.count) {
    const std::size_t n = std::min(kChunk, a.count - done);
    auto chunk = monte_carlo(config, n, options, done);
    for (const auto& r : chunk) *csv << io::csv_row(r, columns) << '\n';
    csv->flush();
    records.insert(records.end(), chunk.begin(), chunk.end());
    done += n;
  }

  const auto summary = io::to_json(summarize(records, config)).dump(2);
  if (!a.summary.empty()) {
    std::ofstream s(a.summary);
    if (!s) throw Error(ErrorCode::Io, "cannot open " + a.summary + " for writing");
    s << summary << '\n';
  } else if (!a.out.empty()) {
    out << summary << '\n';
  } else {
    err << summary << '\n';
  }
  return 0;
}

}  // namespace

Bipartition parse_cut(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || text.find(':', colon + 1) != std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "cut must look like A:B, e.g. 0:1,2");
  }
  return {parse_modes(text.substr(0, colon)), parse_modes(text.substr(colon + 1))};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement sharing in Gaussian states"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  MakeArgs make;
  auto* make_cmd = app.add_subcommand("make", "construct a state and write its covariance matrix");
  make_cmd->add_option("--family", make.family, "state family")
      ->required()
      ->check(CLI::IsMember({"vacuum", "tms", "symmetric", "three-pure", "random"}));
  make_cmd->add_option("--modes", make.modes, "number of modes")->check(CLI::PositiveNumber);
  make_cmd->add_option("--r", make.r, "two-mode squeezing");
  make_cmd->add_option("--a-loc", make.a_loc, "local mixedness of the symmetric family");
  make_cmd->add_option("--a", make.a, "local mixednesses a1 a2 a3")->expected(3);
  make_cmd->add_option("--seed", make.seed, "sampler seed");
  make_cmd->add_option("--squeeze-max", make.squeeze_max, "cap on single-mode squeezing");
  make_cmd->add_option("--out", make.out, "output file (default: stdout)");

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "check symmetry and physicality");
  validate_cmd->add_option("file", file)->required();

  std::string pt;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "symplectic spectrum");
  spectrum_cmd->add_option("file", file)->required();
  spectrum_cmd->add_option("--pt", pt, "partially transpose across the cut A:B first");

  std::string cut;
  auto* logneg_cmd = app.add_subcommand("logneg", "logarithmic negativity across a cut");
  logneg_cmd->add_option("file", file)->required();
  logneg_cmd->add_option("--cut", cut)->required();

  bool force_pure = false;
  bool force_gaussian = false;
  auto* contangle_cmd = app.add_subcommand("contangle", "contangle across a cut");
  contangle_cmd->add_option("file", file)->required();
  contangle_cmd->add_option("--cut", cut)->required();
  auto* pure_flag = contangle_cmd->add_flag("--pure", force_pure, "pure-state formula");
  contangle_cmd->add_flag("--gaussian", force_gaussian, "two-mode Gaussian contangle search")
      ->excludes(pure_flag);

  std::vector<double> three;
  auto* residual_cmd = app.add_subcommand("residual", "residual contangle of a pure three-mode state");
  auto* three_opt = residual_cmd->add_option("--pure-three", three, "a1 a2 a3")->expected(3);
  residual_cmd->add_option("file", file)->excludes(three_opt);

  std::string family;
  double a_from = 0.0, a_to = 0.0;
  int steps = 0;
  std::string measure = "logneg";
  std::string scan_out;
  auto* scan_cmd = app.add_subcommand("scan", "sharing inequality along the symmetric family");
  scan_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"symmetric3"}));
  scan_cmd->add_option("--a-from", a_from)->required();
  scan_cmd->add_option("--a-to", a_to)->required();
  scan_cmd->add_option("--steps", steps)->required();
  scan_cmd->add_option("--measure", measure)->check(CLI::IsMember({"logneg", "contangle"}));
  scan_cmd->add_option("--out", scan_out, "output CSV (default: stdout)");

  MonteCarloArgs mc;
  auto* mc_cmd = app.add_subcommand("montecarlo", "monogamy check on random pure states");
  mc_cmd->add_option("--modes", mc.modes)->required()->check(CLI::Range(2, 64));
  mc_cmd->add_option("--count", mc.count)->required();
  mc_cmd->add_option("--seed", mc.seed)->required();
  mc_cmd->add_option("--jobs", mc.jobs, "worker threads")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--squeeze-max", mc.squeeze_max);
  mc_cmd->add_option("--out", mc.out, "records CSV (default: stdout)");
  mc_cmd->add_option("--summary", mc.summary, "summary JSON file");
  mc_cmd->add_flag("--resume", mc.resume, "continue an interrupted run in --out");

  std::vector<const char*> argv{"cvtangle"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }

  try {
    if (make_cmd->parsed()) {
      const auto cm = make_state(make, *make_cmd);
      Sink sink(make.out, out);
      io::write_cm(sink.stream(), cm);
    } else if (validate_cmd->parsed()) {
      const auto report = validate(io::read_cm_file(file));
      nlohmann::json j{{"symmetric", report.symmetric},
                       {"physical", report.physical},
                       {"pure", report.pure},
                       {"min_symplectic_eigenvalue", report.min_symplectic_eigenvalue}};
      out << j.dump() << '\n';
      if (!report.physical) {
        err << "unphysical: symplectic eigenvalue nu = "
            << io::format_number(report.min_symplectic_eigenvalue) << " < 1\n";
        return 1;
      }
    } else if (spectrum_cmd->parsed()) {
      auto cm = io::read_cm_file(file);
      const auto values = pt.empty() ? symplectic_spectrum(cm).values
                                     : partial_transpose_spectrum(cm, parse_cut(pt)).values;
      for (double v : values) out << io::format_number(v) << '\n';
    } else if (logneg_cmd->parsed()) {
      out << io::format_number(log_negativity(io::read_cm_file(file), parse_cut(cut)).value) << '\n';
    } else if (contangle_cmd->parsed()) {
      const auto cm = io::read_cm_file(file);
      const auto c = parse_cut(cut);
      c.check(cm.modes());
      std::vector<int> modes(c.party_a);
      modes.insert(modes.end(), c.party_b.begin(), c.party_b.end());
      const auto local = reduce(cm, modes);
      const bool use_pure = force_pure || (!force_gaussian && is_pure(local));
      if (use_pure) {
        out << io::format_number(contangle_pure(cm, c).value) << '\n';
      } else {
        if (local.modes() != 2) {
          throw Error(ErrorCode::UnsupportedCut,
                      "mixed-state contangle is only available for two-mode cuts");
        }
        out << io::format_number(gaussian_contangle_two_mode(local).value) << '\n';
      }
    } else if (residual_cmd->parsed()) {
      ThreeModePureSpec spec{};
      if (!three.empty()) {
        spec = {three[0], three[1], three[2]};
      } else if (!file.empty()) {
        const auto cm = io::read_cm_file(file);
        if (cm.modes() != 3) throw Error(ErrorCode::DimensionMismatch, "expected a three-mode state");
        require_physical(cm);
        if (!is_pure(cm)) throw Error(ErrorCode::NotPure, "residual contangle needs a pure state");
        spec = {local_mixedness(cm, 0), local_mixedness(cm, 1), local_mixedness(cm, 2)};
      } else {
        throw Error(ErrorCode::InvalidArgument, "residual needs --pure-three A1 A2 A3 or a FILE");
      }
      const auto result = residual_contangle(spec);
      out << "residual " << io::format_number(result.value) << '\n'
          << "argmin_reference " << result.argmin_reference << '\n';
      for (const auto& r : result.per_reference) print_record(out, r);
    } else if (scan_cmd->parsed()) {
      const auto rows = logneg_violation_scan(
          a_from, a_to, steps,
          measure == "contangle" ? ScanMeasure::Contangle : ScanMeasure::LogNegativity);
      Sink sink(scan_out, out);
      sink.stream() << io::scan_csv_header() << '\n';
      std::size_t violated = 0;
      for (const auto& row : rows) {
        sink.stream() << io::scan_csv_row(row) << '\n';
        violated += row.violated;
      }
      err << violated << " of " << rows.size() << " grid points violate the sharing inequality\n";
    } else if (mc_cmd->parsed()) {
      return run_montecarlo(mc, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace cvtangle::cli
