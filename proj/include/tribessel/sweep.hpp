#pragma once

#include <exception>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tribessel/kinematics.hpp"
#include "tribessel/oracle.hpp"

namespace tribessel {

enum class Execution { serial, parallel };

/// Runs fn(i) for i in [0, n). Results land in slot i, so the output does not
/// depend on scheduling; `serial` is the reference the parallel path is tested against.
/// If fn throws, the exception from the lowest index is rethrown after the loop.
template <typename F>
auto run_indexed(std::size_t n, F&& fn, Execution exec) -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> out(n);
  std::vector<std::exception_ptr> failures(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return out;
}

/// Evaluator selection for one triple integral.
enum class TripleMethod { automatic, master, lambda1, gervois, special_case, oracle };

struct TripleJob {
  AngularIndices ang;
  double k1 = 1, k2 = 1, k3 = 1;
  TripleMethod method = TripleMethod::automatic;
  double tol = 1e-10;
  OracleOptions oracle;
};

/// Error categories as reported in batch output and mapped to exit codes.
enum class Status { ok, domain_error, invalid_argument };

struct Outcome {
  Status status = Status::ok;
  std::optional<IntegralResult> result;
  std::string message;
};

std::string_view to_string(Status s);
std::string_view to_string(TripleMethod m);
TripleMethod parse_triple_method(std::string_view name);

/// Throws on domain or argument errors.
IntegralResult evaluate_triple(const TripleJob& job);

/// Catches per-job errors into the outcome.
Outcome try_evaluate_triple(const TripleJob& job);

std::vector<Outcome> sweep_triple(std::span<const TripleJob> jobs, Execution exec = Execution::parallel);

}  // namespace tribessel
