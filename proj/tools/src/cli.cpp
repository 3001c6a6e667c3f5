#include "fock/cli.hpp"

#include <algorithm>
#include <boost/version.hpp>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fock/berezin.hpp"
#include "fock/eigen.hpp"
#include "fock/errors.hpp"
#include "fock/experiments.hpp"
#include "fock/parallel.hpp"
#include "fock/quadrature.hpp"
#include "fock/search.hpp"
#include "fock/serialize.hpp"
#include "fock/spectra.hpp"
#include "fock/symbol_parse.hpp"
#include "fock/toeplitz.hpp"

#ifndef FOCKSCOPE_VERSION
#define FOCKSCOPE_VERSION "0.0.0"
#endif

namespace fock::cli {

const Defaults& defaults() {
  static const Defaults d;
  return d;
}

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Result of a subcommand: the payload plus what goes into the manifest.
struct Outcome {
  std::string payload;
  json config = json::object();
  std::optional<std::uint64_t> seed;
  int exit_code = ExitCode::ok;
  std::string strict_message;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("not a number: '" + std::string(s) + "'");
  return v;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (piece.empty()) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(parse_double(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
  if (!out) throw UsageError("write failed for '" + path + "'");
}

// "s0:s1:n" or "s0:s1:n@theta" (points along a ray), or a file with one
// "re,im" pair per line.
std::vector<cplx> parse_points(const std::string& spec) {
  std::vector<cplx> pts;
  if (std::filesystem::is_regular_file(spec)) {
    std::istringstream in(read_file(spec));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::replace(line.begin(), line.end(), ' ', ',');
      const auto v = parse_list(line);
      if (v.size() != 2) throw UsageError("points file lines must be 're,im'");
      pts.emplace_back(v[0], v[1]);
    }
    if (pts.empty()) throw UsageError("points file '" + spec + "' is empty");
    return pts;
  }
  std::string body = spec;
  double theta = 0.0;
  if (const auto at = body.find('@'); at != std::string::npos) {
    theta = parse_double(body.substr(at + 1));
    body.resize(at);
  }
  std::replace(body.begin(), body.end(), ':', ',');
  const auto v = parse_list(body);
  if (v.size() != 3) throw UsageError("points must be a file or 's0:s1:n[@theta]'");
  const double n = v[2];
  if (n < 1 || n != std::floor(n)) throw UsageError("grid point count must be a positive integer");
  const int count = static_cast<int>(n);
  for (int i = 0; i < count; ++i) {
    const double s = count == 1 ? v[0] : v[0] + (v[1] - v[0]) * i / (count - 1);
    pts.push_back(std::polar(s, theta));
  }
  return pts;
}

std::string values_csv(const std::vector<double>& v) {
  std::ostringstream os;
  write_values_csv(os, v);
  return os.str();
}

// Option storage for every subcommand.
struct Options {
  const Defaults& d = defaults();
  int threads = d.threads;

  std::string symbol;
  std::string in;
  std::string out;
  std::string points;
  std::string method = "auto";
  std::string mode = "radial";
  std::string radii;
  std::string start;
  std::string manifest;
  double t = d.t;
  int dim = 0;
  double tau = d.tau;
  bool strict = false;
  bool with_literature = false;
  bool full = false;
  int theta_count = d.limitops_theta_count;

  int rings = d.search_rings;
  double rmax = d.search_rmax;
  int iters = d.search_iters;
  std::uint64_t seed = d.search_seed;
  double tail = d.search_tail;
};

int dim_or(const Options& o, int fallback) { return o.dim > 0 ? o.dim : fallback; }

Outcome cmd_assemble(const Options& o) {
  const auto p = FockParams(o.t, dim_or(o, o.d.assemble_dim));
  const Symbol s = parse_symbol(o.symbol);
  const auto a = assemble_general(s, p);
  Outcome r;
  r.payload = matrix_to_json(a, p.t()) + "\n";
  r.config = {{"symbol", print_symbol(s)}, {"t", p.t()}, {"dim", p.dim()}};
  return r;
}

Outcome cmd_eigs(const Options& o) {
  const auto loaded = matrix_from_json(read_file(o.in));
  Outcome r;
  const bool herm = loaded.matrix.hermitian();
  r.payload = values_csv(herm ? hermitian_eigs(loaded.matrix) : singular_values(loaded.matrix));
  r.config = {{"in", o.in},
              {"input_hash", hex(fnv1a(read_file(o.in)))},
              {"quantity", herm ? "eigenvalues" : "singular_values"}};
  return r;
}

Outcome cmd_berezin(const Options& o) {
  if (o.symbol.empty() == o.in.empty()) throw UsageError("berezin needs exactly one of --symbol or --in");
  const auto pts = parse_points(o.points);
  std::vector<BerezinSample> samples;
  Outcome r;

  if (!o.in.empty()) {
    const auto loaded = matrix_from_json(read_file(o.in));
    const FockParams p(loaded.t, loaded.matrix.dim());
    for (const cplx& z : pts) samples.push_back({z, berezin_from_matrix(loaded.matrix, z, p)});
    r.config = {{"in", o.in}, {"input_hash", hex(fnv1a(read_file(o.in)))}, {"points", o.points}};
  } else {
    const Symbol s = parse_symbol(o.symbol);
    const FockParams p(o.t, dim_or(o, o.d.berezin_dim));
    std::string method = o.method;
    if (method == "auto") method = s.is<RadialProfile>() ? "series" : "heat";
    if (method == "series") {
      if (!s.is<RadialProfile>()) throw UsageError("--method series needs a radial symbol");
      double s_max = 0.0;
      for (const cplx& z : pts) s_max = std::max(s_max, std::abs(z));
      const int dim = std::max(p.dim(), truncation_dim(s_max, p.t(), 1e-10));
      const auto eig = radial_eigenvalues(s.as<RadialProfile>(), p.with_dim(dim));
      for (const cplx& z : pts) samples.push_back({z, radial_berezin_series(eig, std::abs(z))});
    } else if (method == "heat") {
      for (const cplx& z : pts) samples.push_back({z, heat_transform_symbol(s, z, p)});
    } else if (method == "matrix") {
      const auto a = assemble_general(s, p);
      for (const cplx& z : pts) samples.push_back({z, berezin_from_matrix(a, z, p)});
    } else {
      throw UsageError("unknown method '" + o.method + "'");
    }
    r.config = {{"symbol", print_symbol(s)}, {"t", p.t()}, {"dim", p.dim()}, {"points", o.points},
                {"method", method}};
  }
  std::ostringstream os;
  write_berezin_csv(os, samples);
  r.payload = os.str();
  return r;
}

Outcome cmd_esspos(const Options& o) {
  const Symbol s = parse_symbol(o.symbol);
  EssPosReport report;
  int dim = 0;
  if (o.mode == "radial") {
    if (!s.is<RadialProfile>()) throw UsageError("radial mode needs a radial symbol");
    dim = dim_or(o, o.d.esspos_radial_dim);
    report = ess_positivity_radial(s.as<RadialProfile>(), FockParams(o.t, dim), o.tau);
  } else if (o.mode == "vo") {
    dim = dim_or(o, o.d.esspos_vo_dim);
    report = ess_positivity_vo(s, FockParams(o.t, dim), o.d.vo_radii, o.tau);
  } else if (o.mode == "limitops") {
    dim = dim_or(o, o.d.esspos_limitops_dim);
    const auto radii = o.radii.empty() ? o.d.limitops_radii : parse_list(o.radii);
    report = ess_positivity_limitops(s, FockParams(o.t, dim), o.theta_count, radii, o.tau);
  } else {
    throw UsageError("unknown mode '" + o.mode + "'");
  }
  Outcome r;
  r.payload = esspos_to_json(report) + "\n";
  r.config = {{"symbol", print_symbol(s)}, {"mode", o.mode}, {"t", o.t},   {"dim", dim},
              {"tau", o.tau},              {"strict", o.strict}, {"radii", o.radii}, {"theta_count", o.theta_count}};
  if (o.strict && report.verdict == Verdict::inconclusive) {
    r.exit_code = ExitCode::inconclusive;
    r.strict_message = "verdict inconclusive under --strict";
  }
  return r;
}

Outcome cmd_counterexample(const Options& o) {
  const auto radii = o.radii.empty() ? o.d.counterexample_radii : parse_list(o.radii);
  const int dim = dim_or(o, o.d.counterexample_dim);
  const auto rows = counterexample_table(o.t, radii, dim);
  std::ostringstream os;
  if (o.with_literature) {
    os.precision(std::numeric_limits<double>::max_digits10);
    os << "absz,ess_exact,ess_numeric,berezin_sup,ratio,berezin_literature\n";
    for (const auto& row : rows)
      os << row.absz << ',' << row.ess_norm_exact << ',' << row.ess_norm_numeric << ',' << row.berezin_sup << ','
         << row.ratio << ',' << row.berezin_literature << '\n';
  } else {
    write_counterexample_csv(os, rows);
  }
  Outcome r;
  r.payload = os.str();
  r.config = {{"t", o.t},
              {"dim", dim},
              {"radii", radii},
              {"with_literature", o.with_literature},
              {"note", "berezin_sup is measured; the literature value exp(-3|z|^2/(2t)) is listed by "
                       "--with-literature for comparison"}};
  return r;
}

Outcome cmd_search(const Options& o) {
  SearchConfig c;
  c.rings = o.rings;
  c.r_max = o.rmax;
  c.iters = o.iters;
  c.seed = o.seed;
  c.tail = o.tail;
  if (!o.start.empty()) c.start = parse_list(o.start);
  const FockParams p(o.t, dim_or(o, o.d.search_dim));
  const auto result = search_minimize(c, p);
  Outcome r;
  r.payload = search_result_to_json(result) + "\n";
  r.config = {{"rings", c.rings}, {"r_max", c.r_max}, {"iters", c.iters}, {"tail", c.tail},
              {"start", c.start}, {"t", p.t()},      {"dim", p.dim()}};
  r.seed = c.seed;
  return r;
}

Outcome cmd_selftest(const Options& o) {
  std::ostringstream os;
  bool all = true;
  for (const auto& res : run_selftest()) {
    os << (res.pass ? "PASS " : "FAIL ") << res.name << " (" << res.detail << ")\n";
    all = all && res.pass;
  }
  if (o.full) {
    for (const auto& row : consistency_suite(FockParams(o.t, 256), FockParams(o.t, 64), o.tau)) {
      os << (row.pass ? "PASS " : "FAIL ") << "consistency " << row.symbol << ": " << row.check << " ["
         << to_string(row.verdict) << ", " << row.estimate << "]\n";
      all = all && row.pass;
    }
    for (const auto& row : vo_corollary_demo(radial_catalog(), FockParams(o.t, 256), o.tau)) {
      os << (row.agree ? "PASS " : "FAIL ") << "radial/vo agreement " << row.profile << " ["
         << to_string(row.radial.verdict) << ", " << to_string(row.vo.verdict) << "]\n";
      all = all && row.agree;
    }
  }
  Outcome r;
  r.payload = os.str();
  r.config = {{"full", o.full}, {"t", o.t}, {"tau", o.tau}};
  if (!all) {
    r.exit_code = ExitCode::numerical;
    r.strict_message = "selftest failures";
  }
  return r;
}

json manifest_for(const std::vector<std::string>& args, const std::string& command, const Outcome& r) {
  const std::string config_text = r.config.dump();
  json m{{"tool", "fockscope"},
         {"command", command},
         {"argv", args},
         {"config", r.config},
         {"config_hash", hex(fnv1a(config_text))},
         {"seed", r.seed ? json(*r.seed) : json(nullptr)},
         {"output_hash", hex(fnv1a(r.payload))},
         {"versions",
          {{"fockscope", FOCKSCOPE_VERSION},
           {"boost", BOOST_LIB_VERSION},
           {"compiler", __VERSION__},
           {"cplusplus", __cplusplus}}}};
  return m;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message, int code,
                std::optional<std::size_t> position = std::nullopt) {
  json e{{"error", kind}, {"message", message}, {"exit_code", code}};
  if (position) e["position"] = *position;
  err << e.dump() << '\n';
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Re-runs the argv stored in a manifest, optionally redirecting --out.
int replay(const Options& o, std::ostream& out, std::ostream& err) {
  json m;
  try {
    m = json::parse(read_file(o.manifest));
  } catch (const json::exception& e) {
    throw UsageError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!m.contains("argv") || !m["argv"].is_array()) throw UsageError("manifest has no argv");
  auto argv = m["argv"].get<std::vector<std::string>>();
  if (!argv.empty() && argv.front() == "replay") throw UsageError("refusing to replay a replay");
  if (!o.out.empty()) {
    auto it = std::find(argv.begin(), argv.end(), "--out");
    if (it != argv.end() && std::next(it) != argv.end()) {
      *std::next(it) = o.out;
    } else {
      argv.push_back("--out");
      argv.push_back(o.out);
    }
  }
  return dispatch(argv, out, err);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Toeplitz operators on the Fock space: assembly, Berezin transforms, essential spectra.",
               "fockscope"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FOCKSCOPE_VERSION);

  auto common = [&](CLI::App* sub, bool with_t, bool with_dim) {
    sub->add_option("--threads", o.threads, "worker thread cap (0 = hardware)")->capture_default_str();
    if (with_t) sub->add_option("--t", o.t, "Fock parameter t > 0")->capture_default_str();
    if (with_dim) sub->add_option("--dim", o.dim, "truncation dimension M (0 = command default)");
    sub->add_option("--out", o.out, "output path (default: standard output)");
  };

  auto* assemble = app.add_subcommand("assemble", "write the truncated Toeplitz matrix as JSON");
  assemble->add_option("--symbol", o.symbol, "symbol spec")->required();
  common(assemble, true, true);

  auto* eigs = app.add_subcommand("eigs", "eigenvalues (Hermitian) or singular values of a matrix JSON");
  eigs->add_option("--in", o.in, "matrix JSON")->required();
  common(eigs, false, false);

  auto* berezin = app.add_subcommand("berezin", "Berezin transform scan as CSV");
  berezin->add_option("--symbol", o.symbol, "symbol spec");
  berezin->add_option("--in", o.in, "matrix JSON");
  berezin->add_option("--points", o.points, "file of 're,im' lines or 's0:s1:n[@theta]'")->required();
  berezin->add_option("--method", o.method, "auto|series|heat|matrix")->capture_default_str();
  common(berezin, true, true);

  auto* esspos = app.add_subcommand("esspos", "essential positivity verdict as JSON");
  esspos->add_option("--symbol", o.symbol, "symbol spec")->required();
  esspos->add_option("--mode", o.mode, "radial|vo|limitops")->capture_default_str();
  esspos->add_option("--tau", o.tau, "verdict tolerance")->capture_default_str();
  esspos->add_option("--radii", o.radii, "limitops radius tiers, comma separated");
  esspos->add_option("--theta-count", o.theta_count, "limitops directions")->capture_default_str();
  esspos->add_flag("--strict", o.strict, "exit 3 on an inconclusive verdict");
  common(esspos, true, true);

  auto* counter = app.add_subcommand("counterexample", "essential norm versus Berezin supremum for h_z");
  counter->add_option("--radii", o.radii, "|z| values, comma separated");
  counter->add_flag("--with-literature", o.with_literature, "add the literature Berezin value column");
  common(counter, true, true);

  auto* search = app.add_subcommand("search", "ratio-objective search over ring profiles");
  search->add_option("--rings", o.rings)->capture_default_str();
  search->add_option("--rmax", o.rmax)->capture_default_str();
  search->add_option("--iters", o.iters)->capture_default_str();
  search->add_option("--seed", o.seed)->capture_default_str();
  search->add_option("--tail", o.tail, "profile value beyond rmax")->capture_default_str();
  search->add_option("--start", o.start, "initial ring values, comma separated");
  common(search, true, true);

  auto* selftest = app.add_subcommand("selftest", "run the built-in invariant checks");
  selftest->add_flag("--full", o.full, "also run the consistency suite and radial/vo agreement");
  selftest->add_option("--tau", o.tau)->capture_default_str();
  common(selftest, true, false);

  auto* replay_cmd = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  replay_cmd->add_option("--manifest", o.manifest)->required();
  replay_cmd->add_option("--out", o.out, "redirect the output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::CallForVersion&) {
    out << FOCKSCOPE_VERSION << '\n';
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what(), ExitCode::usage);
    return ExitCode::usage;
  }

  if (replay_cmd->parsed()) return replay(o, out, err);
  if (o.threads < 0) throw UsageError("--threads must be >= 0");
  if (o.threads > 0) set_max_threads(o.threads);

  std::string name;
  Outcome r;
  if (assemble->parsed()) {
    name = "assemble";
    r = cmd_assemble(o);
  } else if (eigs->parsed()) {
    name = "eigs";
    r = cmd_eigs(o);
  } else if (berezin->parsed()) {
    name = "berezin";
    r = cmd_berezin(o);
  } else if (esspos->parsed()) {
    name = "esspos";
    r = cmd_esspos(o);
  } else if (counter->parsed()) {
    name = "counterexample";
    r = cmd_counterexample(o);
  } else if (search->parsed()) {
    name = "search";
    r = cmd_search(o);
  } else {
    name = "selftest";
    r = cmd_selftest(o);
  }

  if (o.out.empty()) {
    out << r.payload;
  } else {
    write_file(o.out, r.payload);
    write_file(o.out + ".manifest.json", manifest_for(args, name, r).dump(2) + "\n");
  }
  if (r.exit_code != ExitCode::ok)
    emit_error(err, r.exit_code == ExitCode::inconclusive ? "inconclusive" : "numerical", r.strict_message,
               r.exit_code);
  return r.exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ParseError& e) {
    emit_error(err, "parse", e.message(), ExitCode::usage, e.position());
    return ExitCode::usage;
  } catch (const UsageError& e) {
    emit_error(err, "usage", e.what(), ExitCode::usage);
    return ExitCode::usage;
  } catch (const std::invalid_argument& e) {
    emit_error(err, "usage", e.what(), ExitCode::usage);
    return ExitCode::usage;
  } catch (const NumericalError& e) {
    emit_error(err, "numerical", e.what(), ExitCode::numerical);
    return ExitCode::numerical;
  } catch (const std::exception& e) {
    emit_error(err, "numerical", e.what(), ExitCode::numerical);
    return ExitCode::numerical;
  }
}

}  // namespace fock::cli
