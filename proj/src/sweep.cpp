#include "tribessel/sweep.hpp"

#include "tribessel/error.hpp"
#include "tribessel/triple.hpp"

namespace tribessel {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::domain_error: return "domain_error";
    case Status::invalid_argument: return "invalid_argument";
  }
  return "?";
}

std::string_view to_string(TripleMethod m) {
  switch (m) {
    case TripleMethod::automatic: return "auto";
    case TripleMethod::master: return "master";
    case TripleMethod::lambda1: return "lambda1";
    case TripleMethod::gervois: return "gervois";
    case TripleMethod::special_case: return "special_case";
    case TripleMethod::oracle: return "oracle";
  }
  return "?";
}

TripleMethod parse_triple_method(std::string_view name) {
  for (auto m : {TripleMethod::automatic, TripleMethod::master, TripleMethod::lambda1, TripleMethod::gervois,
                 TripleMethod::special_case, TripleMethod::oracle})
    if (to_string(m) == name) return m;
  throw InvalidArgument("unknown method: " + std::string(name));
}

IntegralResult evaluate_triple(const TripleJob& job) {
  if (job.method == TripleMethod::oracle) return oracle_triple(job.ang, job.k1, job.k2, job.k3, job.tol, job.oracle);
  if (job.method == TripleMethod::lambda1) {
    if (job.ang.lambda != 1) throw InvalidArgument("the lambda1 method needs lambda = 1");
    return eval_lambda1_general(job.ang.l1, job.ang.l2, job.ang.l3, job.k1, job.k2, job.k3);
  }
  const auto kin = TriangleKinematics::make(job.k1, job.k2, job.k3);
  switch (job.method) {
    case TripleMethod::master: return eval_master(job.ang, kin);
    case TripleMethod::gervois: return eval_gervois(job.ang, kin);
    case TripleMethod::special_case:
      if (job.ang.l3 != 0 || job.ang.l1 != job.ang.l2)
        throw InvalidArgument("the special case needs l1 = l2 and l3 = 0");
      return eval_special_case(job.ang.lambda, job.ang.l1, kin);
    default: return evaluate_analytic(job.ang, kin);
  }
}

Outcome try_evaluate_triple(const TripleJob& job) {
  Outcome o;
  try {
    o.result = evaluate_triple(job);
  } catch (const DomainError& e) {
    o.status = Status::domain_error;
    o.message = e.what();
  } catch (const std::invalid_argument& e) {
    o.status = Status::invalid_argument;
    o.message = e.what();
  }
  return o;
}

std::vector<Outcome> sweep_triple(std::span<const TripleJob> jobs, Execution exec) {
  return run_indexed(jobs.size(), [&](std::size_t i) { return try_evaluate_triple(jobs[i]); }, exec);
}

}  // namespace tribessel
