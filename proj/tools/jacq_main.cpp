#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jacq/errors.hpp"
#include "jacq/generating_matrices.hpp"
#include "jacq/genfunc.hpp"
#include "jacq/jacobsthal_quaternions.hpp"
#include "jacq/sequences.hpp"
#include "verify_driver.hpp"

namespace {

using jacq::CycloRational;
using jacq::Matrix;
using jacq::RatQuaternion;
using jacq::Rational;
using jacq::SeqKind;
using ordered_json = nlohmann::ordered_json;

ordered_json quat_json(const RatQuaternion& q) {
  ordered_json j;
  j["s"] = q.s().str();
  j["i"] = q.i().str();
  j["j"] = q.j().str();
  j["k"] = q.k().str();
  return j;
}

template <typename R, typename F>
ordered_json matrix_json(const Matrix<R>& m, F&& entry) {
  ordered_json entries = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      entries.push_back(entry(m(r, c)));
    }
  }
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  return j;
}

long default_max_r() {
  if (const char* env = std::getenv("JACQ_MAX_R")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return v;
    std::cerr << "warning: ignoring invalid JACQ_MAX_R='" << env << "'\n";
  }
  return 8;
}

int cmd_term(const std::string& seq, long n) {
  const auto kind = jacq::seq_kind_from_name(seq);
  if (!kind) {
    throw jacq::DomainError("term: unknown sequence '" + seq +
                            "' (expected J3, j3, J2 or jL2)");
  }
  ordered_json out;
  out["seq"] = seq;
  out["n"] = n;
  out["value"] = jacq::seq_term(*kind, n).str();
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_qterm(const std::string& seq, long n) {
  RatQuaternion q;
  if (seq == "JQ3") {
    q = jacq::jq_term(n);
  } else if (seq == "jQ3") {
    q = jacq::jlq_term(n);
  } else {
    throw jacq::DomainError("qterm: unknown sequence '" + seq +
                            "' (expected JQ3 or jQ3)");
  }
  ordered_json out;
  out["seq"] = seq;
  out["n"] = n;
  out["value"] = quat_json(q);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_sum(long r, long n) {
  ordered_json out;
  out["r"] = r;
  out["n"] = n;
  out["direct"] = jacq::sum_direct(r, n).str();
  if (r % 3 != 0 && n >= 1) {
    out["closed"] = jacq::sum_closed(r, n).str();
  } else {
    out["closed"] = nullptr;  // formula degenerate or out of domain
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_series(const std::string& seq, long count) {
  jacq::SeriesNumerator num;
  if (seq == "JQ3") {
    num = jacq::jq_series_numerator();
  } else if (seq == "jQ3") {
    num = jacq::jlq_series_numerator();
  } else {
    throw jacq::DomainError("series: unknown sequence '" + seq +
                            "' (expected JQ3 or jQ3)");
  }
  jacq::SeriesStream stream(num);
  for (long i = 0; i < count; ++i) {
    std::cout << quat_json(stream.next()).dump() << "\n";
  }
  return 0;
}

int cmd_matrix(const std::string& name, long r, long n, long power, bool has_r,
               bool has_n, bool has_power) {
  auto rational_entry = [](const Rational& x) { return ordered_json(x.str()); };
  auto cyclo_entry = [](const CycloRational& x) { return ordered_json(x.str()); };
  auto quat_entry = [](const RatQuaternion& q) { return quat_json(q); };

  auto need_r = [&] {
    if (!has_r) throw jacq::DomainError("matrix: --name " + name + " requires --r");
  };
  auto need_n = [&] {
    if (!has_n) throw jacq::DomainError("matrix: --name " + name + " requires --n");
  };

  ordered_json body;
  if (name == "M") {
    body = matrix_json(jacq::mat_power(jacq::build_M(), power), rational_entry);
  } else if (name == "L") {
    need_r();
    body = matrix_json(jacq::mat_power(jacq::build_Lr(r), power), rational_entry);
  } else if (name == "A") {
    need_r();
    body = matrix_json(jacq::mat_power(jacq::build_Ar(r), power), rational_entry);
  } else if (name == "B") {
    need_r();
    body = matrix_json(jacq::mat_power(jacq::build_Br(r), power), cyclo_entry);
  } else if (name == "H") {
    need_r();
    body = matrix_json(jacq::build_Hr(r), cyclo_entry);
  } else if (name == "F") {
    need_r();
    need_n();
    body = matrix_json(jacq::build_Frn(r, n), rational_entry);
  } else if (name == "Q") {
    need_r();
    need_n();
    body = matrix_json(jacq::build_Qrn(r, n), rational_entry);
  } else if (name == "R") {
    // R * M^power, the subject of the quaternion matrix theorem.
    const auto m = jacq::build_Rquat() *
                   jacq::mat_power(jacq::build_M(), power)
                       .map([](const Rational& x) { return RatQuaternion(x); });
    body = matrix_json(m, quat_entry);
  } else {
    throw jacq::DomainError("matrix: unknown name '" + name +
                            "' (expected M, L, F, A, Q, B, H or R)");
  }

  ordered_json out;
  out["name"] = name;
  if (has_r) out["r"] = r;
  if (has_n) out["n"] = n;
  if (has_power) out["power"] = power;
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_verify(const jacq::cli::VerifyOptions& opts) {
  if (opts.from > opts.to) {
    throw jacq::DomainError("verify: --from must be <= --to");
  }
  if (opts.max_r < 1) {
    throw jacq::DomainError("verify: --max-r must be >= 1");
  }
  if (opts.identity != "all" && !jacq::cli::known_identity(opts.identity)) {
    throw jacq::UnknownIdentity("verify: unknown identity '" + opts.identity + "'");
  }
  return jacq::cli::run_verify(opts, std::cout);
}

int cmd_bench(long n, const std::string& methods_csv) {
  if (n < 0) throw jacq::DomainError("bench: --n must be >= 0");

  std::vector<std::string> methods;
  std::stringstream ss(methods_csv);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) methods.push_back(item);
  }
  if (methods.empty()) throw jacq::DomainError("bench: no methods given");

  struct BenchRecord {
    std::string method;
    Rational value;
    long long wall_ns;
  };
  std::vector<BenchRecord> runs;
  for (const auto& m : methods) {
    Rational value;
    const auto t0 = std::chrono::steady_clock::now();
    if (m == "recurrence") {
      value = jacq::seq_term(SeqKind::J3, n);
    } else if (m == "matrix") {
      value = jacq::fast_J3(n);
    } else if (m == "binet") {
      value = jacq::binet_J3(n);
    } else if (m == "closed-form") {
      value = jacq::closed_form_residue(SeqKind::J3, n);
    } else {
      throw jacq::DomainError("bench: unknown method '" + m + "'");
    }
    const auto t1 = std::chrono::steady_clock::now();
    runs.push_back(
        {m, value,
         std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()});
  }

  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].value != runs[0].value) {
      std::cerr << "bench: methods disagree: " << runs[0].method << " vs "
                << runs[i].method << " at n = " << n << "\n";
      return 1;
    }
  }

  for (const auto& run : runs) {
    const std::string digits = run.value.numerator().get_str();
    ordered_json out;
    out["method"] = run.method;
    out["n"] = n;
    out["wall_time_ns"] = run.wall_ns;
    out["value_digits"] =
        static_cast<long>(digits.size()) - (digits.front() == '-' ? 1 : 0);
    std::cout << out.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact third-order Jacobsthal sequence and quaternion toolkit"};
  app.require_subcommand(1);

  std::string seq = "J3";
  std::string qseq = "JQ3";
  long n = 0;
  long r = 1;
  long power = 0;
  long count = 10;
  std::string name;
  std::string methods = "recurrence,matrix,binet,closed-form";
  jacq::cli::VerifyOptions vopts;
  vopts.max_r = default_max_r();

  int exit_code = 0;

  auto* term = app.add_subcommand("term", "Evaluate one sequence term");
  term->add_option("--seq", seq, "Sequence: J3, j3, J2 or jL2")->required();
  term->add_option("--n", n, "Index (J3/j3 accept negative n)")->required();
  term->callback([&] { exit_code = cmd_term(seq, n); });

  auto* qterm = app.add_subcommand("qterm", "Evaluate one quaternion term");
  qterm->add_option("--seq", qseq, "Sequence: JQ3 or jQ3")->required();
  qterm->add_option("--n", n, "Index, n >= 0")->required();
  qterm->callback([&] { exit_code = cmd_qterm(qseq, n); });

  auto* sum = app.add_subcommand("sum", "Partial sum of J3 over stride r");
  sum->add_option("--r", r, "Stride, r >= 1")->required();
  sum->add_option("--n", n, "Last summand index rk with k = n")->required();
  sum->callback([&] { exit_code = cmd_sum(r, n); });

  auto* verify = app.add_subcommand("verify", "Machine-check identities over a range");
  verify->add_option("--identity", vopts.identity, "Identity tag or 'all'")->required();
  verify->add_option("--from", vopts.from, "First index")->required();
  verify->add_option("--to", vopts.to, "Last index")->required();
  verify->add_option("--max-r", vopts.max_r,
                     "Cap for r grids (default 8, env JACQ_MAX_R)");
  verify->add_option("--format", vopts.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->callback([&] { exit_code = cmd_verify(vopts); });

  auto* series = app.add_subcommand("series", "Generating-function coefficients");
  series->add_option("--seq", qseq, "Series: JQ3 or jQ3");
  series->add_option("--count", count, "Number of coefficients to emit");
  series->callback([&] { exit_code = cmd_series(qseq, count); });

  auto* matrix = app.add_subcommand("matrix", "Inspect the generating matrices");
  auto* name_opt =
      matrix->add_option("--name", name, "M, L, F, A, Q, B, H or R")->required();
  auto* r_opt = matrix->add_option("--r", r, "Stride for L/F/A/Q/B/H");
  auto* n_opt = matrix->add_option("--n", n, "Index for F/Q");
  auto* p_opt = matrix->add_option("--power", power,
                                   "Exponent (M/L/A/B powers; R means R*M^power)");
  matrix->callback([&] {
    (void)name_opt;
    const bool has_power = p_opt->count() > 0;
    if (!has_power) power = name == "R" ? 0 : 1;
    exit_code = cmd_matrix(name, r, n, power, r_opt->count() > 0, n_opt->count() > 0,
                           has_power);
  });

  auto* bench = app.add_subcommand("bench", "Time the J3 evaluators against each other");
  bench->add_option("--n", n, "Index, n >= 0")->required();
  bench->add_option("--methods", methods,
                    "Comma list of recurrence,matrix,binet,closed-form");
  bench->callback([&] { exit_code = cmd_bench(n, methods); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage errors map to the exit-code contract
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
