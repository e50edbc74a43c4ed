#ifndef MISERE_CLAIMS_HPP_
#define MISERE_CLAIMS_HPP_

// Executable bounded checks, one per registered claim.
//
// Claims that quantify over the whole dead-ending universe can only be
// checked against finite test sets; their reports say "bounded pass" and
// list the descriptors used. Claims with closed forms are checked
// exhaustively inside the bounds and say "exact within bounds".

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace misere {

struct Bounds {
  unsigned b = 3;         // birthday cap of generated test sets
  unsigned k = 2;         // options per side
  unsigned t = 3;         // summands in closure test sets
  unsigned j = 3;         // dyadic exponent cap
  std::int64_t v = 2;     // |value| cap for dyadics
  unsigned struct_j = 6;  // exponent cap for the arithmetic checks
  unsigned terms = 4;     // summands in number-sum outcome checks
  unsigned samples = 400;
  std::uint64_t seed = 1;

  friend bool operator==(Bounds const&, Bounds const&) = default;
};

enum class ClaimStatus { Pass, Refuted, Skipped };
std::string_view status_name(ClaimStatus s);

struct ClaimWitness {
  std::string role;  // what the witness shows
  std::uint32_t game = 0;
  std::string notation;
  std::string lhs;  // outcome names, when the witness is a context
  std::string rhs;

  friend bool operator==(ClaimWitness const&, ClaimWitness const&) = default;
};

struct ClaimReport {
  std::string id;
  std::string statement;
  Bounds bounds;
  std::vector<std::string> tests;  // descriptors of the test sets used
  ClaimStatus status = ClaimStatus::Pass;
  std::string mode;  // "bounded pass" or "exact within bounds"
  std::uint64_t cases = 0;
  std::uint64_t witnesses_found = 0;
  std::vector<ClaimWitness> witnesses;
  std::vector<std::string> notes;
  std::optional<double> coverage;  // witness-found rate, where reported
  bool partial = false;            // stopped by the wall-clock budget
  double duration_ms = 0;

  friend bool operator==(ClaimReport const&, ClaimReport const&) = default;
};

struct ClaimInfo {
  std::string_view id;
  std::string_view statement;
};

// Registration order is report order.
std::vector<ClaimInfo> const& claim_registry();
bool is_claim(std::string_view id);

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

// Throws std::out_of_range for an unknown id. BudgetExceeded from test-set
// generation propagates.
ClaimReport run_claim(std::string_view id, Bounds const& bounds,
                      Deadline deadline = std::nullopt);

// Runs every claim in registration order, or only `only`. Claims that
// would start after `budget_seconds` are reported as skipped; a claim cut
// short is flagged partial. Generation budget failures become skipped
// reports.
std::vector<ClaimReport> run_all(Bounds const& bounds,
                                 std::optional<double> budget_seconds,
                                 std::optional<std::string_view> only = {});

void to_json(nlohmann::json& j, Bounds const& b);
void from_json(nlohmann::json const& j, Bounds& b);
void to_json(nlohmann::json& j, ClaimWitness const& w);
void from_json(nlohmann::json const& j, ClaimWitness& w);
void to_json(nlohmann::json& j, ClaimReport const& r);
void from_json(nlohmann::json const& j, ClaimReport& r);

}  // namespace misere

#endif  // MISERE_CLAIMS_HPP_
