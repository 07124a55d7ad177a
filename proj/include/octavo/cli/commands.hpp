#pragma once

#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "octavo/enumeration.hpp"
#include "octavo/index_set.hpp"
#include "octavo/polynomial.hpp"
#include "octavo/signed_permutation.hpp"

namespace octavo::cli {

inline constexpr const char* kSchema = "octavo.report/1";

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2 };

struct SweepOptions {
  unsigned jobs = 1;
  EnumerationMode mode = EnumerationMode::pruned;
  // Replaces the product formula; used to exercise the failure path.
  std::function<UniPoly(int, const IndexSet&)> f_override;
};

// Each command returns one JSON document. Every document carries
// "schema", "command" and "overall_pass"; wall-clock data lives under
// "timing" only.
nlohmann::json cmd_verify(int n, const std::optional<IndexSet>& filter, const SweepOptions& opts);
nlohmann::json cmd_conjecture(int n, const std::optional<IndexSet>& filter, const SweepOptions& opts);
nlohmann::json cmd_stats(const SignedPermutation& w);
nlohmann::json cmd_gf(int n, const IndexSet& I, const SweepOptions& opts);
// Runs the lowering/raising round trip over every initially uncanceled
// element of the class with w(j) = n.
nlohmann::json cmd_bijection(int n, const IndexSet& I, int j, bool trace, const SweepOptions& opts);
// Lowering trace of a single element.
nlohmann::json cmd_bijection_single(const SignedPermutation& w, int j, bool trace);
nlohmann::json cmd_swaps(const SignedPermutation& w, int k);

int exit_code(const nlohmann::json& report);

// Human-readable rendering of a command document.
std::string render_text(const nlohmann::json& report);

// Fixed-width matrix of w. A '|' separates column `divider` from the next
// one when divider is in [1, n-1]; marked columns get a '^' underneath.
std::string render_matrix(const SignedPermutation& w, int divider = 0, const std::vector<int>& marked = {});

}  // namespace octavo::cli
