// Command-line front end: samplers, encoders, transfers and Monte-Carlo
// experiments wired into reproducible batch runs with CSV/JSON output.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "shiftcode/errors.hpp"
#include "shiftcode/graphtransfer.hpp"
#include "shiftcode/permtree.hpp"
#include "shiftcode/rankcode.hpp"
#include "shiftcode/sampling.hpp"
#include "shiftcode/serialize.hpp"
#include "shiftcode/stats.hpp"
#include "shiftcode/tableaux.hpp"

namespace sc = shiftcode;
using nlohmann::json;

namespace {

const char* errc_short(sc::errc c) { return sc::errc_name(c); }

struct CommonOpts {
  std::size_t n = 10;
  std::size_t m = 1;
  std::int64_t trials = 0;  // 0 = use default budget
  std::uint64_t seed = 1;
  std::string law = "uniform";
  std::string format = "csv";
  std::string out;
  int iterations = 1;
};

std::int64_t default_trials() {
  if (const char* env = std::getenv("SHIFTCODE_TRIALS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10000;
}

std::int64_t effective_trials(const CommonOpts& o) {
  return o.trials > 0 ? o.trials : default_trials();
}

// Results go to --out or stdout; diagnostics stay on stderr.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw sc::error(sc::errc::parse_error, "cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_line_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw sc::error(sc::errc::parse_error, "cannot open input file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.find_first_not_of(" \t\r\n") != std::string::npos)
      return line;
  }
  throw sc::error(sc::errc::parse_error,
                  "no data in " + path + " (line " + std::to_string(lineno) + ")");
}

sc::StandardTableau tableau_from_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '[') {
    const json j = json::parse(arg);
    sc::StandardTableau t;
    for (const auto& row : j) t.rows.push_back(row.get<std::vector<int>>());
    return t;
  }
  // rows separated by ';' or newlines
  std::string text = arg;
  for (char& ch : text)
    if (ch == ';') ch = '\n';
  return sc::parse_tableau(text);
}

json tableau_json(const sc::StandardTableau& t) {
  json j = json::array();
  for (const auto& row : t.rows) j.push_back(row);
  return j;
}

json tableau_json(const sc::RealTableau& t) {
  json j = json::array();
  for (const auto& row : t.rows) j.push_back(row);
  return j;
}

void run_encode(const CommonOpts& o, const std::string& input,
                const std::string& in_file) {
  sc::RealPrefix x;
  bool sampled = false;
  if (!input.empty())
    x = sc::parse_reals(input);
  else if (!in_file.empty())
    x = sc::parse_reals(read_line_file(in_file));
  else {
    x = sc::sample_prefix(sc::parse_law(o.law), o.n, o.seed);
    sampled = true;
  }
  const sc::RankCode code = sc::encode(x);
  const sc::SimplexWord word = sc::simplex_word(x);
  const sc::SpecialProfile prof = sc::special_profile(code);
  Output out(o.out);
  if (o.format == "json") {
    json j;
    if (sampled) {
      j["seed"] = o.seed;
      j["law"] = o.law;
    }
    j["prefix"] = x;
    j["code"] = code;
    j["word"] = word;
    j["special"] = std::vector<int>(prof.special.begin(), prof.special.end());
    j["d"] = prof.d;
    out.stream() << j.dump() << '\n';
  } else {
    if (sampled)
      out.stream() << "seed," << o.seed << '\n' << "law," << o.law << '\n';
    out.stream() << "prefix," << sc::format_reals(x) << '\n'
                 << "code," << sc::format_ints(code) << '\n'
                 << "word," << sc::format_ints(word) << '\n';
    out.stream() << "special,";
    for (std::size_t i = 0; i < prof.special.size(); ++i)
      out.stream() << (i ? "," : "") << (prof.special[i] ? 1 : 0);
    out.stream() << '\n' << "d,";
    for (std::size_t i = 0; i < prof.d.size(); ++i)
      out.stream() << (i ? "," : "") << prof.d[i];
    out.stream() << '\n';
  }
}

void run_transfer(const CommonOpts& o, const std::string& code_arg,
                  const std::string& in_file) {
  sc::RankCode code;
  if (!code_arg.empty())
    code = sc::parse_ints(code_arg);
  else if (!in_file.empty())
    code = sc::parse_ints(read_line_file(in_file));
  else
    throw sc::error(sc::errc::parse_error, "transfer needs --code or --in-file");
  if (o.iterations < 1)
    throw sc::error(sc::errc::parse_error, "--iterations must be >= 1");
  if (static_cast<std::size_t>(o.iterations) >= code.size())
    throw sc::error(sc::errc::insufficient_data,
                    "cannot transfer a length-" + std::to_string(code.size()) +
                        " code " + std::to_string(o.iterations) + " times");
  Output out(o.out);
  json codes = json::array();
  for (int i = 0; i < o.iterations; ++i) {
    code = sc::transfer(code);
    if (o.format == "json")
      codes.push_back(code);
    else
      out.stream() << sc::format_ints(code) << '\n';
  }
  if (o.format == "json") out.stream() << json{{"codes", codes}}.dump() << '\n';
}

void run_reconstruct(const CommonOpts& o, const std::string& code_arg) {
  sc::RankCode code;
  sc::RealPrefix truth;
  bool sampled = false;
  if (!code_arg.empty()) {
    code = sc::parse_ints(code_arg);
  } else {
    truth = sc::sample_prefix(sc::parse_law(o.law), o.n, o.seed);
    code = sc::encode(truth);
    sampled = true;
  }
  const std::vector<double> est = sc::reconstruct_prefix(code, o.m);
  Output out(o.out);
  char buf[64];
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t j = 0; j < est.size(); ++j) {
      json row{{"j", j + 1}, {"estimate", est[j]}};
      if (sampled) {
        row["true_value"] = truth[j];
        row["abs_error"] = std::abs(est[j] - truth[j]);
      }
      rows.push_back(row);
    }
    json doc{{"rows", rows}};
    if (sampled) doc["seed"] = o.seed;
    out.stream() << doc.dump() << '\n';
  } else {
    if (sampled) out.stream() << "seed," << o.seed << '\n';
    out.stream() << "j,estimate,true_value,abs_error\n";
    for (std::size_t j = 0; j < est.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", est[j]);
      out.stream() << (j + 1) << ',' << buf;
      if (sampled) {
        std::snprintf(buf, sizeof buf, "%.17g", truth[j]);
        out.stream() << ',' << buf;
        std::snprintf(buf, sizeof buf, "%.17g", std::abs(est[j] - truth[j]));
        out.stream() << ',' << buf;
      } else {
        out.stream() << ",,";
      }
      out.stream() << '\n';
    }
  }
}

void run_rsk(const CommonOpts& o, const std::string& word_arg,
             const std::string& input) {
  Output out(o.out);
  if (!word_arg.empty()) {
    const sc::RskPair pq = sc::rsk(sc::parse_ints(word_arg));
    if (o.format == "json")
      out.stream() << json{{"p", tableau_json(pq.p)}, {"q", tableau_json(pq.q)}}.dump()
                   << '\n';
    else
      out.stream() << "P\n"
                   << sc::format_tableau(pq.p) << "\nQ\n"
                   << sc::format_tableau(pq.q) << '\n';
    return;
  }
  sc::RealPrefix x;
  if (!input.empty())
    x = sc::parse_reals(input);
  else
    x = sc::sample_prefix(sc::parse_law(o.law), o.n, o.seed);
  const sc::RealRskPair pq = sc::rsk(x);
  if (o.format == "json")
    out.stream() << json{{"p", tableau_json(pq.p)}, {"q", tableau_json(pq.q)}}.dump()
                 << '\n';
  else
    out.stream() << "P\n"
                 << sc::format_tableau(pq.p) << "\nQ\n"
                 << sc::format_tableau(pq.q) << '\n';
}

void run_jdt(const CommonOpts& o, const std::string& tableau_arg,
             const std::string& in_file) {
  sc::StandardTableau t;
  if (!tableau_arg.empty())
    t = tableau_from_arg(tableau_arg);
  else if (!in_file.empty())
    t = sc::parse_tableau(read_line_file(in_file));
  else
    throw sc::error(sc::errc::parse_error, "jdt needs --tableau or --in-file");
  const sc::StandardTableau promoted = sc::jdt_promotion(t);
  Output out(o.out);
  if (o.format == "json")
    out.stream() << tableau_json(promoted).dump() << '\n';
  else
    out.stream() << sc::format_tableau(promoted) << '\n';
}

void run_experiment_reconstruct(const CommonOpts& o) {
  const std::int64_t trials = effective_trials(o);
  Output out(o.out);
  out.stream() << "n,trial,estimate,true_value,abs_error\n";
  const sc::Law law = sc::parse_law(o.law);
  // trials fan out across workers; rows are emitted in trial order
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<std::vector<std::pair<double, double>>>> futs;
  const std::int64_t chunk = (trials + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min<std::int64_t>(trials, lo + chunk);
    futs.push_back(std::async(std::launch::async, [&, lo, hi] {
      std::vector<std::pair<double, double>> rows;
      for (std::int64_t t = lo; t < hi; ++t) {
        const sc::RealPrefix x =
            sc::sample_prefix(law, o.n, sc::trial_seed(o.seed, t));
        rows.emplace_back(sc::reconstruct_first(sc::encode(x)), x[0]);
      }
      return rows;
    }));
  }
  char buf[64];
  std::int64_t trial = 0;
  for (auto& f : futs)
    for (auto [est, truth] : f.get()) {
      std::snprintf(buf, sizeof buf, "%.17g", est);
      out.stream() << o.n << ',' << trial++ << ',' << buf;
      std::snprintf(buf, sizeof buf, "%.17g", truth);
      out.stream() << ',' << buf;
      std::snprintf(buf, sizeof buf, "%.17g", std::abs(est - truth));
      out.stream() << ',' << buf << '\n';
    }
}

void run_experiment_plancherel(const CommonOpts& o) {
  const std::int64_t trials = effective_trials(o);
  const int n = static_cast<int>(o.n);
  const auto shapes = sc::partitions_of(n);
  std::vector<std::int64_t> counts(shapes.size(), 0);
  const double n_fact = [&] {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  }();
  for (std::int64_t t = 0; t < trials; ++t) {
    const sc::YoungDiagram d = sc::plancherel_sample(n, sc::trial_seed(o.seed, t));
    for (std::size_t i = 0; i < shapes.size(); ++i)
      if (shapes[i] == d) {
        ++counts[i];
        break;
      }
  }
  Output out(o.out);
  out.stream() << "shape,count,frequency,expected_probability\n";
  char buf[64];
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const double f = static_cast<double>(sc::tableaux_count(shapes[i]));
    std::string shape_str = sc::format_ints(shapes[i]);
    for (char& ch : shape_str)
      if (ch == ',') ch = ' ';
    out.stream() << shape_str << ',' << counts[i] << ',';
    std::snprintf(buf, sizeof buf, "%.8g",
                  static_cast<double>(counts[i]) / static_cast<double>(trials));
    out.stream() << buf << ',';
    std::snprintf(buf, sizeof buf, "%.8g", f * f / n_fact);
    out.stream() << buf << '\n';
  }
}

void run_experiment_distinguish(const CommonOpts& o, const std::string& ns_arg,
                                std::int64_t min_accepted) {
  std::vector<int> ns;
  if (!ns_arg.empty())
    ns = sc::parse_ints(ns_arg);
  else
    for (int n = 1; n <= static_cast<int>(o.n); ++n) ns.push_back(n);
  const std::int64_t trials = effective_trials(o);
  const auto report =
      sc::distinguishability_experiment(ns, trials, min_accepted, o.seed);
  Output out(o.out);
  out.stream() << "# conditional spread of x1 given the Q-tableau; "
                  "convergence is very slow in n\n";
  out.stream() << "n,trials,acceptance_rate,iqr_x1\n";
  char buf[64];
  for (const auto& row : report) {
    out.stream() << row.n << ',' << row.trials << ',';
    std::snprintf(buf, sizeof buf, "%.8g", row.acceptance_rate);
    out.stream() << buf << ',';
    if (row.has_data) {
      std::snprintf(buf, sizeof buf, "%.8g", row.iqr_x1);
      out.stream() << buf;
    }  // missing data point: empty cell
    out.stream() << '\n';
  }
}

void run_experiment_jdt_equiv(const CommonOpts& o) {
  const int max_cells = static_cast<int>(o.n);
  const sc::YoungGraph yg;
  Output out(o.out);
  out.stream() << "n_cells,tableaux,mismatches\n";
  for (int n = 2; n <= max_cells; ++n) {
    std::int64_t mismatches = 0;
    const auto all = sc::all_standard_tableaux(n);
    for (const auto& t : all) {
      const auto promoted_path = sc::transfer_path(yg, sc::tableau_as_path(t));
      if (sc::paths_as_tableau(promoted_path) != sc::jdt_promotion(t)) ++mismatches;
    }
    out.stream() << n << ',' << all.size() << ',' << mismatches << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "shiftcode: rank codes on the triangular compactum, RSK tableaux and "
      "graded-graph transfers, with Monte-Carlo experiment drivers"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string input, in_file, code_arg, word_arg, tableau_arg, ns_arg;
  std::int64_t min_accepted = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "prefix length / size parameter");
    cmd->add_option("--m", o.m, "number of coordinates to reconstruct");
    cmd->add_option("--trials", o.trials,
                    "trial budget (default: SHIFTCODE_TRIALS env var or 10000)");
    cmd->add_option("--seed", o.seed, "master seed (per-trial seeds derive from it)");
    cmd->add_option("--law", o.law, "sampling law: uniform | gaussian")
        ->check(CLI::IsMember({"uniform", "gaussian"}));
    cmd->add_option("--format", o.format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "output file (default: stdout)");
    cmd->add_option("--iterations", o.iterations, "transfer iteration count");
  };

  CLI::App* encode = app.add_subcommand("encode", "rank code, word and special profile of a prefix");
  add_common(encode);
  encode->add_option("--input", input, "comma-separated real prefix");
  encode->add_option("--in-file", in_file, "file holding one prefix per line (first used)");

  CLI::App* transfer = app.add_subcommand("transfer", "iterated transfer of a rank code");
  add_common(transfer);
  transfer->add_option("--code", code_arg, "comma-separated rank code");
  transfer->add_option("--in-file", in_file, "file holding the code");

  CLI::App* reconstruct = app.add_subcommand("reconstruct", "coordinate estimates from a rank code");
  add_common(reconstruct);
  reconstruct->add_option("--code", code_arg, "comma-separated rank code");

  CLI::App* rsk_cmd = app.add_subcommand("rsk", "RSK image of a word or real prefix");
  add_common(rsk_cmd);
  rsk_cmd->add_option("--word", word_arg, "comma-separated integer word");
  rsk_cmd->add_option("--input", input, "comma-separated real prefix");

  CLI::App* jdt = app.add_subcommand("jdt", "jeu-de-taquin promotion of a standard tableau");
  add_common(jdt);
  jdt->add_option("--tableau", tableau_arg, "tableau, e.g. [[1,2],[3]] or '1,2;3'");
  jdt->add_option("--in-file", in_file, "file with one row per line");

  CLI::App* experiment = app.add_subcommand("experiment", "Monte-Carlo experiment drivers");
  experiment->require_subcommand(1);
  CLI::App* exp_rec = experiment->add_subcommand("reconstruct", "first-coordinate reconstruction error");
  add_common(exp_rec);
  CLI::App* exp_pl = experiment->add_subcommand("plancherel", "sampled shape frequencies vs Plancherel");
  add_common(exp_pl);
  CLI::App* exp_dist = experiment->add_subcommand("distinguish", "conditional spread of x1 given the Q-tableau");
  add_common(exp_dist);
  exp_dist->add_option("--ns", ns_arg, "comma-separated list of n values (default 1..n)");
  exp_dist->add_option("--min-accepted", min_accepted,
                       "below this acceptance count a row is reported as missing");
  CLI::App* exp_jdt = experiment->add_subcommand("jdt-equiv", "Markov transfer vs jeu de taquin, exhaustive");
  add_common(exp_jdt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*encode) run_encode(o, input, in_file);
    if (*transfer) run_transfer(o, code_arg, in_file);
    if (*reconstruct) run_reconstruct(o, code_arg);
    if (*rsk_cmd) run_rsk(o, word_arg, input);
    if (*jdt) run_jdt(o, tableau_arg, in_file);
    if (*experiment) {
      if (*exp_rec) run_experiment_reconstruct(o);
      if (*exp_pl) run_experiment_plancherel(o);
      if (*exp_dist) run_experiment_distinguish(o, ns_arg, min_accepted);
      if (*exp_jdt) run_experiment_jdt_equiv(o);
    }
  } catch (const sc::error& e) {
    std::cerr << "error:" << errc_short(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error:internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
