#include "verify_driver.hpp"

#include <json.hpp>

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <ostream>
#include <tuple>

#include "jacq/errors.hpp"
#include "jacq/generating_matrices.hpp"
#include "jacq/genfunc.hpp"
#include "jacq/jacobsthal_quaternions.hpp"
#include "jacq/sequences.hpp"

namespace jacq::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Grid { N, R, RN, RSN };

struct Runner {
  Grid grid;
  std::function<IdentityReport(long r, long s, long n)> fn;
};

IdentityReport run_binet(long n) {
  const Rational bj = binet_J3(n);  // throws DomainError for n < 0
  const Rational bl = binet_j3(n);
  const Rational sj = seq_term(SeqKind::J3, n);
  const Rational sl = seq_term(SeqKind::j3, n);
  IdentityReport rep;
  rep.identity = "binet";
  rep.n = n;
  rep.lhs = "[" + bj.str() + ", " + bl.str() + "]";
  rep.rhs = "[" + sj.str() + ", " + sl.str() + "]";
  rep.pass = bj == sj && bl == sl;
  return rep;
}

IdentityReport run_qbinet(long n) {
  const RatQuaternion bj = jq_binet(n);
  const RatQuaternion bl = jlq_binet(n);
  const RatQuaternion sj = jq_term(n);
  const RatQuaternion sl = jlq_term(n);
  IdentityReport rep;
  rep.identity = "qbinet";
  rep.n = n;
  rep.lhs = "[" + to_string(bj) + ", " + to_string(bl) + "]";
  rep.rhs = "[" + to_string(sj) + ", " + to_string(sl) + "]";
  rep.pass = bj == sj && bl == sl;
  return rep;
}

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> reg = [] {
    std::map<std::string, Runner> m;
    for (const auto& tag : scalar_identity_tags()) {
      m[tag] = Runner{Grid::N, [tag](long, long, long n) {
                        return check_scalar_identity(tag, n);
                      }};
    }
    m["step2r"].grid = Grid::R;  // its index is r, not n

    for (const auto& tag : quat_identity_tags()) {
      m[tag] = Runner{Grid::N, [tag](long, long, long n) {
                        return check_quat_identity(tag, n);
                      }};
    }

    m["lemma1"] = {Grid::RSN, [](long r, long s, long n) { return check_lemma1(r, s, n); }};
    m["g5"] = {Grid::RN, [](long r, long, long n) { return check_sum_formula(r, n); }};
    m["thmLF"] = {Grid::RN, [](long r, long, long n) { return check_theorem_LF(r, n); }};
    m["thmAQ"] = {Grid::RN, [](long r, long, long n) { return check_theorem_AQ(r, n); }};
    m["diag"] = {Grid::RN, [](long r, long, long n) { return check_diagonalization(r, n); }};
    m["thmRM"] = {Grid::N, [](long, long, long n) { return check_theorem_RM(n); }};
    m["corconv"] = {Grid::N, [](long, long, long n) { return check_corollary_conv(n); }};
    m["binet"] = {Grid::N, [](long, long, long n) { return run_binet(n); }};
    m["qbinet"] = {Grid::N, [](long, long, long n) { return run_qbinet(n); }};
    m["genfunc"] = {Grid::N, [](long, long, long n) { return check_genfunc(n); }};
    return m;
  }();
  return reg;
}

void set_indices(IdentityReport& rep, Grid grid, long r, long s, long n) {
  switch (grid) {
    case Grid::N:
      rep.n = n;
      break;
    case Grid::R:
      rep.r = n;  // the loop index plays the role of r
      break;
    case Grid::RN:
      rep.n = n;
      rep.r = r;
      break;
    case Grid::RSN:
      rep.n = n;
      rep.r = r;
      rep.s = s;
      break;
  }
}

IdentityReport run_point(const std::string& tag, const Runner& runner, long r, long s,
                         long n) {
  try {
    return runner.fn(r, s, n);
  } catch (const DegenerateModulus&) {
    IdentityReport rep = make_skipped(tag, "degenerate_modulus");
    set_indices(rep, runner.grid, r, s, n);
    return rep;
  } catch (const DomainError&) {
    IdentityReport rep = make_skipped(tag, "out_of_domain");
    set_indices(rep, runner.grid, r, s, n);
    return rep;
  }
}

void collect(const std::string& tag, const Runner& runner, const VerifyOptions& opts,
             std::vector<IdentityReport>& out) {
  for (long i = opts.from; i <= opts.to; ++i) {
    switch (runner.grid) {
      case Grid::N:
      case Grid::R:
        out.push_back(run_point(tag, runner, 0, 0, i));
        break;
      case Grid::RN:
        for (long r = 1; r <= opts.max_r; ++r) {
          out.push_back(run_point(tag, runner, r, 0, i));
        }
        break;
      case Grid::RSN:
        for (long r = 1; r <= opts.max_r; ++r) {
          for (long s = 0; s < r; ++s) {
            out.push_back(run_point(tag, runner, r, s, i));
          }
        }
        break;
    }
  }
}

ordered_json to_json(const IdentityReport& rep) {
  ordered_json j;
  j["identity"] = rep.identity;
  if (rep.n) j["n"] = *rep.n;
  if (rep.r) j["r"] = *rep.r;
  if (rep.s) j["s"] = *rep.s;
  if (rep.skipped) {
    j["skipped"] = true;
    j["reason"] = rep.reason;
  } else {
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["pass"] = rep.pass;
  }
  return j;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const IdentityReport& rep) {
  auto opt = [](const std::optional<long>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  std::string row = csv_quote(rep.identity) + "," + opt(rep.n) + "," + opt(rep.r) + "," +
                    opt(rep.s) + ",";
  if (rep.skipped) {
    row += ",,,true," + rep.reason;
  } else {
    row += csv_quote(rep.lhs) + "," + csv_quote(rep.rhs) + "," +
           (rep.pass ? "true" : "false") + ",,";
  }
  return row;
}

}  // namespace

const std::vector<std::string>& all_identity_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> t;
    for (const auto& [tag, runner] : registry()) t.push_back(tag);
    return t;  // std::map iteration is already sorted
  }();
  return tags;
}

bool known_identity(const std::string& tag) { return registry().count(tag) != 0; }

int run_verify(const VerifyOptions& opts, std::ostream& out) {
  std::vector<IdentityReport> records;
  if (opts.identity == "all") {
    for (const auto& [tag, runner] : registry()) {
      collect(tag, runner, opts, records);
    }
  } else {
    const auto it = registry().find(opts.identity);
    if (it == registry().end()) {
      throw UnknownIdentity("verify: unknown identity '" + opts.identity + "'");
    }
    collect(it->first, it->second, opts, records);
  }

  auto key = [](const IdentityReport& rep) {
    return std::make_tuple(rep.identity, rep.n.value_or(LONG_MIN),
                           rep.r.value_or(LONG_MIN), rep.s.value_or(LONG_MIN));
  };
  std::stable_sort(records.begin(), records.end(),
                   [&](const IdentityReport& a, const IdentityReport& b) {
                     return key(a) < key(b);
                   });

  const bool csv = opts.format == "csv";
  if (csv) out << "identity,n,r,s,lhs,rhs,pass,skipped,reason\n";

  const IdentityReport* first_failure = nullptr;
  for (const auto& rep : records) {
    out << (csv ? to_csv(rep) : to_json(rep).dump()) << "\n";
    if (!rep.skipped && !rep.pass && first_failure == nullptr) {
      first_failure = &rep;
    }
  }
  if (first_failure != nullptr) {
    out << (csv ? to_csv(*first_failure) : to_json(*first_failure).dump()) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace jacq::cli
