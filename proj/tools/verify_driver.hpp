#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacq::cli {

struct VerifyOptions {
  std::string identity;  // one tag, or "all"
  long from = 0;
  long to = 0;
  long max_r = 8;
  std::string format = "json";  // "json" or "csv"
};

/// All identity tags the verifier drives, lexicographically sorted.
const std::vector<std::string>& all_identity_tags();

bool known_identity(const std::string& tag);

/// Runs the verification grid and emits one record per (identity, index),
/// out-of-domain points included as explicit skip markers. Records are
/// buffered and written sorted by (identity, n, r, s); a run with failures
/// re-prints the first counterexample as the final line.
/// Returns the process exit code: 0 all pass, 1 any failure.
int run_verify(const VerifyOptions& opts, std::ostream& out);

}  // namespace jacq::cli
