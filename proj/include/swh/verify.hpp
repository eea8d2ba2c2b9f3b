#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swh/shifts.hpp"

namespace swh {

enum class AnchorStatus { Pass, Fail, Skipped };
const char* anchor_status_name(AnchorStatus s);

struct AnchorResult {
  std::string name;
  std::string description;
  AnchorStatus status = AnchorStatus::Pass;
  std::string expected;
  std::string actual;
};

struct VerifyOptions {
  bool engine = true;
  // replaces the combinatorial shift formula (mutation testing)
  std::optional<ShiftFn> shift_override;
};

struct VerifyReport {
  std::vector<AnchorResult> anchors;
  bool all_passed() const;
};

// Reference examples with known invariants, checked end to end.
VerifyReport verify_reference_examples(const VerifyOptions& opt = {});

}  // namespace swh
