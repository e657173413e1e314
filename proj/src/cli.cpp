#include "freqfn/cli.hpp"

#include "freqfn/analysis.hpp"
#include "freqfn/checks.hpp"
#include "freqfn/corpus.hpp"
#include "freqfn/frequency.hpp"
#include "freqfn/oracle.hpp"
#include "freqfn/profile.hpp"
#include "freqfn/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace freqfn::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

StepFn load_function(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open function file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_stepfn(text.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Rat rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rat(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

std::vector<Rat> rational_list(const std::string& name, const std::string& text) {
  std::vector<Rat> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(rational_flag(name, item));
  if (out.empty()) throw UsageError("--" + name + ": empty list");
  return out;
}

// Writes to --out when given, otherwise to stdout.
template <class Writer>
void emit(std::ostream& out, const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  write(file);
}

struct Options {
  std::string fn, x, aux, out, format = "csv", N, C, step, suite, id, kind = "line";
  std::string K, k, n_min, eps, M_max;
  bool oracle = false;
  unsigned long long grid = 65536;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
};

int do_eval(const Options& o, std::ostream& out) {
  const StepFn f = load_function(o.fn);
  const Rat x = rational_flag("x", o.x);
  const FreqResult r = frequency(f, x);
  out << "maximal=" << to_string(r.maximal) << '\n';
  out << "frequency=" << to_string(r.frequency) << '\n';
  out << "status=" << status_name(r.status) << '\n';
  if (r.witness) out << "witness=" << to_string(*r.witness) << '\n';
  if (!o.aux.empty()) {
    const auto comma = o.aux.find(',');
    if (comma == std::string::npos) throw UsageError("--aux expects k,l");
    long k = 0, l = 0;
    try {
      k = std::stol(o.aux.substr(0, comma));
      l = std::stol(o.aux.substr(comma + 1));
    } catch (const std::exception&) {
      throw UsageError("--aux expects two positive integers k,l");
    }
    if (k < 1 || l < 1) throw UsageError("--aux expects two positive integers k,l");
    out << "aux_frequency=" << to_string(aux_frequency(f, x, k, l)) << '\n';
  }
  if (o.oracle) {
    const OracleResult orc = oracle_eval(f, x, default_oracle_range(f, x), o.grid);
    out << "oracle_maximal=" << to_string(orc.approx_maximal) << '\n';
    out << "oracle_frequency=" << to_string(orc.approx_frequency) << '\n';
    out << "oracle_error_bound=" << to_string(orc.error_bound) << '\n';
    out << "oracle_r_max=" << to_string(orc.r_max) << '\n';
    out << "oracle_grid_count=" << orc.grid_count << '\n';
  }
  return kOk;
}

void emit_scan(const Options& o, std::ostream& out, const ScanReport& report, PlotKind kind) {
  if (o.format == "svg") {
    if (o.out.empty()) throw UsageError("--format svg requires --out");
    emit_plot(report, o.out, kind);
    return;
  }
  emit(out, o.out, [&](std::ostream& s) { write_scan_csv(s, report); });
}

int do_check(const Options& o, std::ostream& out) {
  const StepFn f = load_function(o.fn);
  bool known = false;
  for (auto name : suite_names()) known = known || name == o.suite;
  if (!known) throw UsageError("unknown suite '" + o.suite + "'");
  const SuiteResult r = run_suite(o.suite, f, o.samples, o.seed);
  for (const std::string& line : r.failures) out << line << '\n';
  out << r.summary() << '\n';
  return r.ok() ? kOk : kViolation;
}

int do_corpus(const Options& o, std::ostream& out) {
  CorpusSpec spec;
  try {
    spec.id = parse_corpus_id(o.id);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::pair<const char*, const std::string*> params[] = {
      {"K", &o.K}, {"k", &o.k}, {"n_min", &o.n_min}, {"eps", &o.eps}, {"M_max", &o.M_max}};
  for (const auto& [name, text] : params)
    if (!text->empty()) spec.params[name] = rational_flag(name, *text);
  StepFn f;
  try {
    f = generate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(out, o.out, [&](std::ostream& s) { s << serialize(f); });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximal and frequency functions of rational step functions"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Mf(x), Tf(x) and attainment status at one point");
  eval->add_option("--fn", o.fn, "step-function file")->required();
  eval->add_option("--x", o.x, "query point p/q")->required();
  eval->add_option("--aux", o.aux, "also print T_{k,l}f(x), given as k,l");
  eval->add_flag("--oracle", o.oracle, "also print the brute-force grid estimate");
  eval->add_option("--grid", o.grid, "oracle grid size")->check(CLI::Range(2ULL, 1ULL << 24));

  auto* profile = app.add_subcommand("profile", "piecewise form of r -> A_r f(x) as CSV");
  profile->add_option("--fn", o.fn)->required();
  profile->add_option("--x", o.x)->required();
  profile->add_option("--out", o.out);

  auto* scan_cmd = app.add_subcommand("scan", "Mf and Tf over the grid [-N, N]");
  auto* density = app.add_subcommand("density", "level-set density of {Tf <= |x|/C} over N values");
  auto* band = app.add_subcommand("band", "points with |x|/2C <= Tf(x) <= |x|/C");
  auto* plot = app.add_subcommand("plot", "SVG plot of a scan (kind line or density)");
  for (auto* cmd : {scan_cmd, density, band, plot}) {
    cmd->add_option("--fn", o.fn)->required();
    cmd->add_option("--N", o.N, "domain bound (density: comma-separated list)")->required();
    cmd->add_option("--step", o.step, "grid step")->required();
    cmd->add_option("--out", o.out);
  }
  for (auto* cmd : {scan_cmd, density, band})
    cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "svg"}));
  for (auto* cmd : {density, band}) cmd->add_option("--C", o.C)->required();
  plot->add_option("--C", o.C, "level constant for kind density (default 2)");
  plot->add_option("--kind", o.kind)->check(CLI::IsMember({"line", "density"}));
  plot->get_option("--out")->required();

  auto* discont = app.add_subcommand("discont", "certified discontinuities of Mf");
  discont->add_option("--fn", o.fn)->required();
  discont->add_option("--out", o.out);

  auto* check = app.add_subcommand("check", "run a sampled invariant suite");
  check->add_option("--suite", o.suite)->required();
  check->add_option("--fn", o.fn)->required();
  check->add_option("--samples", o.samples);
  check->add_option("--seed", o.seed);

  auto* corpus = app.add_subcommand("corpus", "write an example function in step-function format");
  corpus->add_option("--id", o.id, "f1 f2 f3 f4 f5 f7 f8 f9 thm4")->required();
  corpus->add_option("--K", o.K, "truncation level");
  corpus->add_option("--k", o.k, "f4 index");
  corpus->add_option("--n_min", o.n_min, "first f3 index");
  corpus->add_option("--eps", o.eps, "thm4 epsilon");
  corpus->add_option("--M_max", o.M_max, "thm4 last bump index");
  corpus->add_option("--out", o.out);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (eval->parsed()) return do_eval(o, out);
    if (profile->parsed()) {
      const Profile p = build_profile(load_function(o.fn), rational_flag("x", o.x));
      emit(out, o.out, [&](std::ostream& s) { write_profile_csv(s, p); });
      return kOk;
    }
    if (scan_cmd->parsed()) {
      const ScanReport r = scan(load_function(o.fn), rational_flag("N", o.N), rational_flag("step", o.step));
      emit_scan(o, out, r, PlotKind::Line);
      return kOk;
    }
    if (band->parsed()) {
      const ScanReport r = band_extent(load_function(o.fn), rational_flag("C", o.C),
                                       rational_flag("N", o.N), rational_flag("step", o.step));
      emit_scan(o, out, r, PlotKind::Density);
      return kOk;
    }
    if (density->parsed()) {
      const DensityTrend t = density_trend(load_function(o.fn), rational_flag("C", o.C),
                                           rational_list("N", o.N), rational_flag("step", o.step));
      if (o.format == "svg") {
        if (o.out.empty()) throw UsageError("--format svg requires --out");
        emit_plot(t, o.out);
      } else {
        emit(out, o.out, [&](std::ostream& s) { write_density_csv(s, t); });
      }
      return kOk;
    }
    if (plot->parsed()) {
      const StepFn f = load_function(o.fn);
      const Rat N = rational_flag("N", o.N), step = rational_flag("step", o.step);
      if (o.kind == "line") {
        emit_plot(scan(f, N, step), o.out, PlotKind::Line);
      } else {
        const Rat C = o.C.empty() ? Rat(2) : rational_flag("C", o.C);
        emit_plot(level_density(f, C, N, step), o.out, PlotKind::Density);
      }
      return kOk;
    }
    if (discont->parsed()) {
      const auto certs = discontinuities(load_function(o.fn));
      emit(out, o.out, [&](std::ostream& s) { write_discontinuities_csv(s, certs); });
      return kOk;
    }
    if (check->parsed()) return do_check(o, out);
    if (corpus->parsed()) return do_corpus(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace freqfn::cli
