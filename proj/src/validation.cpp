#include "ramikit/validation.hpp"

namespace ramikit {

bool ValidationReport::passed() const { return first_failure() == nullptr; }

const ValidationCheck *ValidationReport::first_failure() const {
  for (const auto &c : checks)
    if (!c.passed)
      return &c;
  return nullptr;
}

ValidationReport validate_knot_group(const KnotGroupData &data) {
  const auto &pres = data.presentation;
  const AbelianizationMap ab(pres);
  ValidationReport report;
  report.abelianization = ab.invariants();
  const bool cyclic_z = ab.invariants().is_infinite_cyclic();

  report.checks.push_back({kCheckAbelianization, cyclic_z,
                           "abelianization is " + ab.invariants().to_string()});

  bool bad_letter = false;
  auto in_range = [&](const Word &w) {
    for (const auto &l : w)
      if (l.gen >= pres.generator_count())
        bad_letter = true;
  };
  in_range(data.meridian);
  if (data.longitude)
    in_range(*data.longitude);
  if (bad_letter) {
    report.checks.push_back({kCheckMeridian, false, "word uses an undeclared generator"});
    return report;
  }

  {
    ValidationCheck c{kCheckMeridian, false, ""};
    const auto img = ab.image(data.meridian);
    if (!cyclic_z) {
      c.detail = "abelianization is not infinite cyclic";
    } else {
      const Integer &x = img.free.front();
      c.passed = abs(x) == 1;
      c.detail = "meridian maps to " + x.get_str() + " in Z";
    }
    report.checks.push_back(c);
  }
  if (data.longitude) {
    const auto img = ab.image(*data.longitude);
    report.checks.push_back({kCheckLongitude, img.is_zero(),
                             img.is_zero() ? "longitude maps to 0" : "longitude has nonzero image"});
  }
  return report;
}

} // namespace ramikit
