#pragma once

#include <optional>
#include <string>
#include <utility>

namespace jacq {

/// Outcome of checking one identity at one grid point. `pass` is defined
/// as exact equality of the serialized sides' underlying values; lhs/rhs
/// keep the canonical string forms for reporting.
struct IdentityReport {
  std::string identity;
  std::optional<long> n;
  std::optional<long> r;
  std::optional<long> s;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  bool skipped = false;
  std::string reason;  // set only when skipped
};

/// Builds a pass/fail report from two comparable, stringifiable values.
template <typename V>
IdentityReport make_report(std::string identity, const V& lhs, const V& rhs) {
  IdentityReport rep;
  rep.identity = std::move(identity);
  rep.lhs = to_string(lhs);
  rep.rhs = to_string(rhs);
  rep.pass = (lhs == rhs);
  return rep;
}

inline IdentityReport make_skipped(std::string identity, std::string reason) {
  IdentityReport rep;
  rep.identity = std::move(identity);
  rep.skipped = true;
  rep.reason = std::move(reason);
  return rep;
}

}  // namespace jacq
