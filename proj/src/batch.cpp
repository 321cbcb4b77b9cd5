#include "tribessel/batch.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "tribessel/error.hpp"
#include "tribessel/four_bessel.hpp"
#include "tribessel/legendre.hpp"
#include "tribessel/triple.hpp"
#include "tribessel/wigner.hpp"

namespace tribessel {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<long long> as_integer(const std::string& s) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end || s.empty()) return std::nullopt;
  return v;
}

std::optional<double> as_real(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

const std::string& required(const BatchJob& job, std::string_view key) {
  const auto* v = job.find(key);
  if (!v) throw InvalidArgument("missing field '" + std::string(key) + "'");
  return *v;
}

int get_int(const BatchJob& job, std::string_view key, std::optional<int> fallback = std::nullopt) {
  const auto* v = job.find(key);
  if (!v) {
    if (fallback) return *fallback;
    throw InvalidArgument("missing field '" + std::string(key) + "'");
  }
  const auto i = as_integer(*v);
  if (!i || *i < -1'000'000 || *i > 1'000'000) throw InvalidArgument("field '" + std::string(key) + "' must be an integer");
  return static_cast<int>(*i);
}

double get_real(const BatchJob& job, std::string_view key, std::optional<double> fallback = std::nullopt) {
  const auto* v = job.find(key);
  if (!v) {
    if (fallback) return *fallback;
    throw InvalidArgument("missing field '" + std::string(key) + "'");
  }
  const auto d = as_real(*v);
  if (!d) throw InvalidArgument("field '" + std::string(key) + "' must be a number");
  return *d;
}

std::string get_text(const BatchJob& job, std::string_view key, std::string fallback) {
  const auto* v = job.find(key);
  return v ? *v : fallback;
}

void fill(JobReport& r, const IntegralResult& res) {
  r.value = res.value;
  r.method = std::string(to_string(res.method));
  r.formula = res.formula;
  r.kinematic_class = std::string(to_string(res.kinematic_class));
  r.error_estimate = res.error_estimate;
  r.outside_closed_form_scope = res.outside_closed_form_scope;
}

double relative_deviation(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Runs every named route, keeps the first success as the headline value.
template <typename Route>
void run_routes(JobReport& r, const std::vector<std::pair<std::string, Route>>& routes) {
  std::optional<IntegralResult> primary;
  std::string first_error;
  Status first_status = Status::ok;
  for (const auto& [name, route] : routes) {
    try {
      const auto res = route();
      r.methods.emplace_back(name, res.value);
      if (!primary) primary = res;
    } catch (const DomainError& e) {
      if (first_error.empty()) {
        first_error = name + ": " + e.what();
        first_status = Status::domain_error;
      }
    }
  }
  if (!primary) {
    r.status = first_status == Status::ok ? Status::domain_error : first_status;
    r.message = first_error;
    r.methods.clear();
    return;
  }
  fill(r, *primary);
  double dev = 0.0;
  for (const auto& [name, v] : r.methods) dev = std::max(dev, relative_deviation(v, primary->value));
  if (r.methods.size() > 1) r.deviation = dev;
  if (!first_error.empty()) r.message = first_error;
}

void evaluate_triple_job(JobReport& r, const BatchJob& job, const Settings& s) {
  TripleJob t;
  t.ang = {get_int(job, "lambda", 0), get_int(job, "l1"), get_int(job, "l2"), get_int(job, "l3")};
  t.k1 = get_real(job, "k1");
  t.k2 = get_real(job, "k2");
  t.k3 = get_real(job, "k3");
  t.tol = get_real(job, "tol", s.tol);
  t.oracle = s.oracle;
  const std::string method = get_text(job, "method", "auto");
  if (method != "all") {
    t.method = parse_triple_method(method);
    fill(r, evaluate_triple(t));
    return;
  }
  using Route = std::function<IntegralResult()>;
  std::vector<std::pair<std::string, Route>> routes;
  const auto add = [&](TripleMethod m) {
    routes.emplace_back(std::string(to_string(m)), [t, m] {
      TripleJob c = t;
      c.method = m;
      return evaluate_triple(c);
    });
  };
  add(TripleMethod::master);
  if (t.ang.lambda == 1) add(TripleMethod::lambda1);
  add(TripleMethod::gervois);
  if (t.ang.l3 == 0 && t.ang.l1 == t.ang.l2) add(TripleMethod::special_case);
  add(TripleMethod::oracle);
  run_routes(r, routes);
}

void evaluate_four_job(JobReport& r, const BatchJob& job, const Settings& s) {
  const KernelIndices idx{get_int(job, "L"), get_int(job, "N"), get_int(job, "M")};
  const double k1 = get_real(job, "k1"), k2 = get_real(job, "k2"), k3 = get_real(job, "k3"), k4 = get_real(job, "k4");
  const double tol = get_real(job, "tol", s.tol);
  const std::string method = get_text(job, "method", "analytic");
  using Route = std::function<IntegralResult()>;
  const Route analytic = [&] { return eval_four_bessel(idx, QuadKinematics::make(k1, k2, k3, k4)); };
  const Route oracle = [&] { return oracle_quadruple(idx.L, idx.N, idx.M, k1, k2, k3, k4, tol, s.oracle); };
  if (method == "analytic") {
    fill(r, analytic());
  } else if (method == "oracle") {
    fill(r, oracle());
  } else if (method == "both") {
    run_routes(r, std::vector<std::pair<std::string, Route>>{{"analytic", analytic}, {"oracle", oracle}});
  } else {
    throw InvalidArgument("unknown four-Bessel method: " + method);
  }
}

void evaluate_wigner_job(JobReport& r, const BatchJob& job) {
  const std::string symbol = get_text(job, "symbol", "3j");
  RadicalRational v;
  if (symbol == "3j") {
    v = three_j({get_int(job, "j1"), get_int(job, "j2"), get_int(job, "j3"), get_int(job, "m1", 0),
                 get_int(job, "m2", 0), get_int(job, "m3", 0)});
  } else if (symbol == "6j") {
    v = six_j({get_int(job, "a"), get_int(job, "b"), get_int(job, "c"), get_int(job, "d"), get_int(job, "e"),
               get_int(job, "f")});
  } else {
    throw InvalidArgument("symbol must be 3j or 6j");
  }
  r.value = v.to_double();
  r.exact = v.to_string();
  r.method = "racah";
  r.formula = symbol == "3j" ? "racah-3j" : "racah-6j";
}

void evaluate_legendre_job(JobReport& r, const BatchJob& job) {
  const int l = get_int(job, "l");
  const Rational m = parse_rational(required(job, "m"));
  const double x = get_real(job, "x");
  r.value = assoc_legendre_general(l, m, x);
  r.method = "jacobi";
  r.formula = "generalized-associated-legendre";
}

json input_value(const std::string& text) {
  if (auto i = as_integer(text)) return *i;
  if (auto d = as_real(text)) return *d;
  return text;
}

std::string field_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number() || v.is_boolean()) return v.dump();
  throw InvalidArgument("job fields must be numbers or strings");
}

BatchJob job_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("each job must be a JSON object");
  BatchJob job;
  if (!j.contains("kind") || !j["kind"].is_string()) throw InvalidArgument("job without a string 'kind'");
  job.kind = j["kind"].get<std::string>();
  const auto take = [&](const json& obj) {
    for (const auto& [k, v] : obj.items()) {
      if (k == "kind" || k == "inputs" || v.is_object() || v.is_array() || v.is_null()) continue;
      job.fields.emplace_back(k, field_text(v));
    }
  };
  if (j.contains("inputs")) {
    take(j["inputs"]);
    // The method that produced a report is a result, not a request.
  } else {
    take(j);
  }
  return job;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(trim(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  out.push_back(trim(cell));
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const std::string* BatchJob::find(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

BatchRequest parse_batch_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  BatchRequest req;
  const json* jobs = nullptr;
  if (doc.is_object() && doc.contains("jobs")) {
    if (doc.contains("schema_version")) {
      if (!doc["schema_version"].is_number_integer()) throw InvalidArgument("schema_version must be an integer");
      req.schema_version = doc["schema_version"].get<int>();
      if (req.schema_version != kSchemaVersion)
        throw InvalidArgument("unsupported schema_version " + std::to_string(req.schema_version));
    }
    jobs = &doc["jobs"];
    if (!jobs->is_array()) throw InvalidArgument("'jobs' must be an array");
  } else if (doc.is_array()) {
    jobs = &doc;
  } else if (doc.is_object()) {
    req.jobs.push_back(job_from_json(doc));
    return req;
  } else {
    throw InvalidArgument("batch input must be an object or an array");
  }
  for (const auto& j : *jobs) req.jobs.push_back(job_from_json(j));
  return req;
}

BatchRequest parse_batch_csv(std::string_view text) {
  BatchRequest req;
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const auto cells = split_csv(line);
    if (header.empty()) {
      header = cells;
      if (std::find(header.begin(), header.end(), "kind") == header.end())
        throw InvalidArgument("CSV header must contain a 'kind' column");
      continue;
    }
    if (cells.size() > header.size()) throw InvalidArgument("CSV row has more cells than the header");
    BatchJob job;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].empty()) continue;
      if (header[i] == "kind")
        job.kind = cells[i];
      else
        job.fields.emplace_back(header[i], cells[i]);
    }
    if (job.kind.empty()) throw InvalidArgument("CSV row without a kind");
    req.jobs.push_back(std::move(job));
  }
  return req;
}

JobReport evaluate_job(const BatchJob& job, const Settings& settings, std::size_t index) {
  JobReport r;
  r.index = index;
  r.kind = job.kind;
  r.inputs = job.fields;
  try {
    if (job.kind == "triple")
      evaluate_triple_job(r, job, settings);
    else if (job.kind == "four")
      evaluate_four_job(r, job, settings);
    else if (job.kind == "wigner")
      evaluate_wigner_job(r, job);
    else if (job.kind == "legendre")
      evaluate_legendre_job(r, job);
    else
      throw InvalidArgument("unknown job kind: " + job.kind);
  } catch (const DomainError& e) {
    r.status = Status::domain_error;
    r.message = e.what();
  } catch (const std::invalid_argument& e) {
    r.status = Status::invalid_argument;
    r.message = e.what();
  }
  return r;
}

BatchReport run_batch(const BatchRequest& request, const Settings& settings) {
  Settings inner = settings;
  if (settings.execution == Execution::parallel) inner.oracle.parallel = false;
  BatchReport report;
  report.schema_version = request.schema_version;
  report.results = run_indexed(
      request.jobs.size(), [&](std::size_t i) { return evaluate_job(request.jobs[i], inner, i); }, settings.execution);
  for (const auto& r : report.results) {
    if (r.status != Status::ok) ++report.failures;
    if (r.deviation) report.max_deviation = std::max(report.max_deviation, *r.deviation);
  }
  return report;
}

namespace {

json job_json(const JobReport& r) {
  json j;
  j["index"] = r.index;
  j["kind"] = r.kind;
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = input_value(v);
  j["inputs"] = inputs;
  j["status"] = std::string(to_string(r.status));
  if (r.value) j["value"] = *r.value;
  if (!r.exact.empty()) j["exact"] = r.exact;
  if (!r.method.empty()) j["method"] = r.method;
  if (!r.formula.empty()) j["formula"] = r.formula;
  if (!r.kinematic_class.empty()) j["kinematic_class"] = r.kinematic_class;
  if (r.error_estimate) j["error_estimate"] = *r.error_estimate;
  if (r.outside_closed_form_scope) j["outside_closed_form_scope"] = true;
  if (!r.methods.empty() && r.methods.size() > 1) {
    json m = json::object();
    for (const auto& [k, v] : r.methods) m[k] = v;
    j["methods"] = m;
  }
  if (r.deviation) j["max_relative_deviation"] = *r.deviation;
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

}  // namespace

std::string job_to_json(const JobReport& r, int indent) { return job_json(r).dump(indent); }

std::string report_to_json(const BatchReport& r, int indent) {
  json j;
  j["schema_version"] = r.schema_version;
  json results = json::array();
  for (const auto& x : r.results) results.push_back(job_json(x));
  j["results"] = results;
  j["summary"] = {{"jobs", r.results.size()}, {"failures", r.failures}, {"max_cross_method_relative_deviation", r.max_deviation}};
  return j.dump(indent);
}

std::string report_to_csv(const BatchReport& r) {
  std::ostringstream out;
  out << "index,kind,inputs,status,value,exact,method,formula,kinematic_class,error_estimate,max_relative_deviation,message\n";
  for (const auto& x : r.results) {
    std::string inputs;
    for (const auto& [k, v] : x.inputs) inputs += (inputs.empty() ? "" : ";") + k + "=" + v;
    out << x.index << ',' << x.kind << ',' << csv_cell(inputs) << ',' << to_string(x.status) << ','
        << (x.value ? format_double(*x.value) : "") << ',' << csv_cell(x.exact) << ',' << x.method << ','
        << x.formula << ',' << x.kinematic_class << ',' << (x.error_estimate ? format_double(*x.error_estimate) : "")
        << ',' << (x.deviation ? format_double(*x.deviation) : "") << ',' << csv_cell(x.message) << '\n';
  }
  return out.str();
}

}  // namespace tribessel
