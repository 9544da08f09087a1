#pragma once

#include <string>
#include <vector>

#include "ramikit/linalg.hpp"
#include "ramikit/presentation.hpp"

namespace ramikit {

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  AbelianInvariants abelianization;
  std::vector<ValidationCheck> checks;

  bool passed() const;
  /// First failing check, or nullptr.
  const ValidationCheck *first_failure() const;
};

inline constexpr const char *kCheckAbelianization = "abelianization is Z";
inline constexpr const char *kCheckMeridian = "meridian generates";
inline constexpr const char *kCheckLongitude = "longitude null-homologous";

ValidationReport validate_knot_group(const KnotGroupData &data);

} // namespace ramikit
