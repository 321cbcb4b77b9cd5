// Command-line front end: single evaluations, batch files and the verification suites.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "tribessel/batch.hpp"
#include "tribessel/error.hpp"
#include "tribessel/exact.hpp"
#include "tribessel/legendre.hpp"
#include "tribessel/verify.hpp"

namespace {

using namespace tribessel;

constexpr const char* kTolEnv = "TRIBESSEL_TOL";

struct Config {
  Settings settings;
  int threads = 0;
};

double parse_positive(const std::string& key, const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !(v > 0)) throw InvalidArgument(key + " must be a positive number");
  return v;
}

// key = value lines; '#' starts a comment.
void apply_config_file(Config& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    const auto strip = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    if (strip(line).empty()) continue;
    if (eq == std::string::npos) throw InvalidArgument(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = strip(line.substr(0, eq)), value = strip(line.substr(eq + 1));
    if (key == "tol") {
      c.settings.tol = parse_positive(key, value);
    } else if (key == "oracle.radius_periods") {
      c.settings.oracle.radius_periods = parse_positive(key, value);
    } else if (key == "oracle.panel_fraction") {
      c.settings.oracle.panel_fraction = parse_positive(key, value);
    } else if (key == "oracle.max_panels") {
      c.settings.oracle.max_panels = static_cast<long>(parse_positive(key, value));
    } else if (key == "oracle.richardson_levels") {
      c.settings.oracle.richardson_levels = static_cast<int>(parse_positive(key, value));
    } else if (key == "oracle.tail") {
      if (value == "contour")
        c.settings.oracle.tail = TailMethod::contour;
      else if (value == "windowed")
        c.settings.oracle.tail = TailMethod::windowed;
      else
        throw InvalidArgument("oracle.tail must be contour or windowed");
    } else if (key == "threads") {
      c.threads = static_cast<int>(parse_positive(key, value));
    } else {
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
}

int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::domain_error: return 2;
    case Status::invalid_argument: return 1;
  }
  return 1;
}

int emit_single(const BatchJob& job, const Settings& settings) {
  const auto report = evaluate_job(job, settings);
  std::cout << job_to_json(report) << "\n";
  if (report.status != Status::ok) std::cerr << "error: " << report.message << "\n";
  return exit_code(report.status);
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form and numerical integrals over products of spherical Bessel functions"};
  app.require_subcommand(1);
  std::string config_path;
  int threads = 0;
  app.add_option("--config", config_path, "key = value file: tol, oracle.*, threads")->check(CLI::ExistingFile);
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  // triple
  auto* triple = app.add_subcommand("triple", "I(lambda; l1, l2, l3; k1, k2, k3)");
  int lambda = 0, l1 = 0, l2 = 0, l3 = 0;
  std::string k[4];
  std::string method = "auto", tol_text;
  triple->add_option("--lambda", lambda, "weight exponent, r^(2-lambda)");
  triple->add_option("--l1", l1)->required();
  triple->add_option("--l2", l2)->required();
  triple->add_option("--l3", l3)->required();
  triple->add_option("--k1", k[0])->required();
  triple->add_option("--k2", k[1])->required();
  triple->add_option("--k3", k[2])->required();
  triple->add_option("--method", method, "auto|master|gervois|lambda1|special_case|oracle|all")
      ->check(CLI::IsMember({"auto", "master", "gervois", "lambda1", "special_case", "oracle", "all"}));
  triple->add_option("--tol", tol_text, "oracle tolerance");

  // four
  auto* four = app.add_subcommand("four", "four-Bessel kernel I(L; N+M-L, 0, N, M; k1..k4)");
  int L = 0, N = 0, M = 0;
  std::string four_method = "analytic";
  four->add_option("--L", L)->required();
  four->add_option("--N", N)->required();
  four->add_option("--M", M)->required();
  four->add_option("--k1", k[0])->required();
  four->add_option("--k2", k[1])->required();
  four->add_option("--k3", k[2])->required();
  four->add_option("--k4", k[3])->required();
  four->add_option("--method", four_method, "analytic|oracle|both")->check(CLI::IsMember({"analytic", "oracle", "both"}));
  four->add_option("--tol", tol_text, "oracle tolerance");

  // wigner
  auto* wigner = app.add_subcommand("wigner", "exact 3j or 6j symbol");
  std::string symbol;
  std::vector<int> entries;
  wigner->add_option("symbol", symbol, "3j or 6j")->required()->check(CLI::IsMember({"3j", "6j"}));
  wigner->add_option("entries", entries, "j1 j2 j3 m1 m2 m3, or a b c d e f")->required()->expected(6);

  // legendre
  auto* legendre = app.add_subcommand("legendre", "tabulate P_l^m(x) for rational m");
  int degree = 0;
  std::string order = "0";
  double x_min = -0.9, x_max = 0.9;
  int points = 19;
  std::vector<double> xs;
  std::string legendre_format = "csv";
  legendre->add_option("--l", degree)->required()->check(CLI::NonNegativeNumber);
  legendre->add_option("--m", order, "rational order, e.g. -7/2")->required();
  legendre->add_option("--x", xs, "explicit arguments; overrides the grid");
  legendre->add_option("--x-min", x_min);
  legendre->add_option("--x-max", x_max);
  legendre->add_option("--points", points)->check(CLI::PositiveNumber);
  legendre->add_option("--format", legendre_format)->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
  std::string suite;
  bool quick = false, verbose = false;
  std::uint64_t seed = VerifyOptions{}.seed;
  verify->add_option("suite", suite)->required();
  verify->add_flag("--quick", quick, "fewer samples per case");
  verify->add_flag("--verbose", verbose, "print every case, not only failures");
  verify->add_option("--seed", seed);

  // batch
  auto* batch = app.add_subcommand("batch", "evaluate a JSON or CSV job file");
  std::string input = "-", input_format, output_format = "json", output_path;
  batch->add_option("input", input, "file, or - for stdin");
  batch->add_option("--format", input_format, "json|csv (default: from the file extension)")
      ->check(CLI::IsMember({"json", "csv"}));
  batch->add_option("--output-format", output_format)->check(CLI::IsMember({"json", "csv"}));
  batch->add_option("-o,--output", output_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Config cfg;
  try {
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (const char* env = std::getenv(kTolEnv)) cfg.settings.tol = parse_positive(kTolEnv, env);
    if (!tol_text.empty()) cfg.settings.tol = parse_positive("--tol", tol_text);
    if (threads > 0) cfg.threads = threads;
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*triple) {
      BatchJob job{"triple",
                   {{"lambda", std::to_string(lambda)},
                    {"l1", std::to_string(l1)},
                    {"l2", std::to_string(l2)},
                    {"l3", std::to_string(l3)},
                    {"k1", k[0]},
                    {"k2", k[1]},
                    {"k3", k[2]},
                    {"method", method}}};
      return emit_single(job, cfg.settings);
    }
    if (*four) {
      BatchJob job{"four",
                   {{"L", std::to_string(L)},
                    {"N", std::to_string(N)},
                    {"M", std::to_string(M)},
                    {"k1", k[0]},
                    {"k2", k[1]},
                    {"k3", k[2]},
                    {"k4", k[3]},
                    {"method", four_method}}};
      return emit_single(job, cfg.settings);
    }
    if (*wigner) {
      static const char* names3[] = {"j1", "j2", "j3", "m1", "m2", "m3"};
      static const char* names6[] = {"a", "b", "c", "d", "e", "f"};
      BatchJob job{"wigner", {{"symbol", symbol}}};
      for (int i = 0; i < 6; ++i) job.fields.emplace_back(symbol == "3j" ? names3[i] : names6[i], std::to_string(entries[i]));
      return emit_single(job, cfg.settings);
    }
    if (*legendre) {
      const Rational m = parse_rational(order);
      if (xs.empty()) {
        for (int i = 0; i < points; ++i)
          xs.push_back(points == 1 ? x_min : x_min + (x_max - x_min) * i / (points - 1));
      }
      std::vector<double> values;
      for (double x : xs) values.push_back(assoc_legendre_general(degree, m, x));
      if (legendre_format == "csv") {
        std::cout << "l,m_num,m_den,x,value\n";
        for (std::size_t i = 0; i < xs.size(); ++i)
          std::cout << degree << ',' << m.get_num().get_str() << ',' << m.get_den().get_str() << ','
                    << format_double(xs[i]) << ',' << format_double(values[i]) << '\n';
      } else {
        BatchReport rep;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          JobReport r;
          r.index = i;
          r.kind = "legendre";
          r.inputs = {{"l", std::to_string(degree)}, {"m", m.get_str()}, {"x", format_double(xs[i])}};
          r.value = values[i];
          r.method = "jacobi";
          r.formula = "generalized-associated-legendre";
          rep.results.push_back(r);
        }
        std::cout << report_to_json(rep) << "\n";
      }
      return 0;
    }
    if (*verify) {
      VerifyOptions opts;
      opts.quick = quick;
      opts.seed = seed;
      opts.oracle_tol = std::max(cfg.settings.tol, 1e-10);
      opts.oracle = cfg.settings.oracle;
      std::vector<std::string_view> which;
      if (suite == "all") {
        auto names = suite_names();
        which.assign(names.begin(), names.end());
      } else {
        which.push_back(suite);
      }
      bool all_pass = true;
      for (auto name : which) {
        const auto rep = run_suite(name, opts);
        for (const auto& c : rep.cases)
          if (verbose || !c.pass)
            std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.label << "  deviation " << c.deviation
                      << " (tolerance " << c.tolerance << ")\n";
        std::cout << (rep.pass() ? "PASS " : "FAIL ") << rep.name << ": " << rep.cases.size() - rep.failures << "/"
                  << rep.cases.size() << " cases, max deviation " << rep.max_deviation << ", " << rep.seconds
                  << " s\n";
        all_pass = all_pass && rep.pass();
      }
      return all_pass ? 0 : 2;
    }
    if (*batch) {
      const std::string text = read_input(input);
      if (input_format.empty()) input_format = input.size() > 4 && input.substr(input.size() - 4) == ".csv" ? "csv" : "json";
      const BatchRequest req = input_format == "csv" ? parse_batch_csv(text) : parse_batch_json(text);
      const BatchReport rep = run_batch(req, cfg.settings);
      const std::string out = output_format == "csv" ? report_to_csv(rep) : report_to_json(rep) + "\n";
      if (output_path.empty()) {
        std::cout << out;
      } else {
        std::ofstream f(output_path);
        if (!f) throw InvalidArgument("cannot write " + output_path);
        f << out;
      }
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
