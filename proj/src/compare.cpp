#include "mcsp/compare.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <thread>
#include <tuple>

#include "mcsp/errors.hpp"
#include "mcsp/io.hpp"
#include "mcsp/solve.hpp"

namespace mcsp {

namespace {

bool uses_epsilon(const std::string& alg) { return alg == "fvs-as" || alg == "cw-as"; }

struct Task {
  std::string instance;
  std::string path;
  std::string algorithm;
  std::optional<Rational> epsilon;
};

std::string status_of(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const ParseError&) {
    return "parse-error";
  } catch (const MalformedInstance&) {
    return "parse-error";
  } catch (const PreconditionError&) {
    return "precondition";
  } catch (const ResourceLimit&) {
    return "resource-limit";
  } catch (...) {
    return "error";
  }
}

CompareRow run_task(const Task& t, const CompareOptions& o) {
  CompareRow row;
  row.instance = t.instance;
  row.algorithm = t.algorithm;
  row.epsilon = t.epsilon ? t.epsilon->to_string() : "";
  Formula f;
  try {
    f = parse_instance(read_text(t.path));
    SolveRequest req;
    req.algorithm = t.algorithm;
    req.epsilon = t.epsilon;
    req.seed = o.seed;
    req.trials = o.trials;
    req.oracle_limit = o.oracle_limit;
    req.l_exponent = o.l_exponent;
    req.strict_epsilon = o.strict_epsilon;
    const SolveReport r = solve(f, req);
    row.value = r.value;
    row.time_ms = r.wall_time_ms;
  } catch (...) {
    row.status = status_of(std::current_exception());
    return row;
  }
  try {
    row.oracle_opt = max_csp_bruteforce(f, o.oracle_limit).opt_value;
    row.ratio = *row.oracle_opt == 0 ? 1.0 : static_cast<double>(*row.value) / *row.oracle_opt;
    row.status = "ok";
  } catch (const ResourceLimit&) {
    row.status = "oracle-unavailable";
  }
  return row;
}

}  // namespace

std::vector<CompareRow> run_compare(const std::string& dir, const CompareOptions& o) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw PreconditionError("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".mcsp") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<Task> tasks;
  for (const auto& p : files) {
    for (const auto& alg : o.algorithms) {
      if (uses_epsilon(alg) && !o.epsilons.empty()) {
        for (const Rational& e : o.epsilons) tasks.push_back({p.filename().string(), p.string(), alg, e});
      } else {
        tasks.push_back({p.filename().string(), p.string(), alg, std::nullopt});
      }
    }
  }

  std::vector<CompareRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) rows[i] = run_task(tasks[i], o);
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(o.jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::sort(rows.begin(), rows.end(), [](const CompareRow& a, const CompareRow& b) {
    return std::tie(a.instance, a.algorithm, a.epsilon) < std::tie(b.instance, b.algorithm, b.epsilon);
  });
  return rows;
}

std::string compare_csv(const std::vector<CompareRow>& rows, bool timing) {
  std::string out = "instance,algorithm,epsilon,status,value,oracle_opt,ratio,time_ms\n";
  char buf[64];
  for (const CompareRow& r : rows) {
    out += r.instance + "," + r.algorithm + "," + r.epsilon + "," + r.status + ",";
    out += (r.value ? std::to_string(*r.value) : "") + ",";
    out += (r.oracle_opt ? std::to_string(*r.oracle_opt) : "") + ",";
    if (r.ratio) {
      std::snprintf(buf, sizeof buf, "%.6f", *r.ratio);
      out += buf;
    }
    out += ",";
    if (timing) {
      std::snprintf(buf, sizeof buf, "%.3f", r.time_ms);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace mcsp
