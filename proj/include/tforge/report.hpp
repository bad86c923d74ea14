#ifndef TFORGE_REPORT_HPP
#define TFORGE_REPORT_HPP

#include <optional>
#include <string>

#include "tforge/poly_json.hpp"

namespace tforge {

// Exit codes shared by every command:
//   0 all asserted identities/shapes passed
//   1 a verification failed
//   2 input error (parse failures, wrong degree, reducible input)
//   3 unsupported case (e.g. sextics in characteristic 2)
//   4 a bounded search was exhausted
struct RunReport {
  Json json;
  int exit_code = 0;
};

// which: hermite | joubert | s4 | conditions-tr | group-facts.
// s4 uses the fixture cache directory (TFORGE_CACHE) when available.
RunReport cmd_verify(const std::string& which);

RunReport cmd_transform(const std::string& field, const std::string& poly,
                        const std::string& covariant);

// Exactly one of poly/degree is given; degree picks the first irreducible
// monic of that degree over the (finite) field in enumeration order.
RunReport cmd_normalize(const std::string& field, const std::optional<std::string>& poly,
                        std::optional<int> degree, std::uint64_t seed);

// corrupt_entry is a test hook: index of a table entry to corrupt before
// re-verification (negative control for the reporting path).
RunReport cmd_table(int corrupt_entry = -1);

// Emits a named construction in the polynomial JSON format. what is one of
// hermite-psi1, hermite-phi1, joubert-psi1, joubert-phi1, delta5, delta6, s4
// (s4 is computed on demand or loaded from the fixture cache).
RunReport cmd_export(const std::string& what);

// Deterministic plain-text rendering of a RunReport.
std::string render_human(const Json& report);

// Fixture cache directory from TFORGE_CACHE, empty if unset.
std::string cache_directory();

}  // namespace tforge

#endif
