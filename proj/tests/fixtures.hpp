#pragma once

#include <string>

#include "ramikit/presentation.hpp"

namespace fixtures {

inline const char *const kTrefoil = "gens: a b\nrel: abaBAB\nmeridian: a\nlongitude: baabAAAA\n";
inline const char *const kFigureEight = "gens: a b\nrel: AbaBabABaB\nmeridian: a\n";

inline ramikit::KnotGroupData trefoil() {
  auto k = ramikit::parse_presentation(kTrefoil);
  k.label = "trefoil";
  return k;
}

inline ramikit::KnotGroupData figure_eight() {
  auto k = ramikit::parse_presentation(kFigureEight);
  k.label = "figure-eight";
  return k;
}

inline ramikit::Word w(const ramikit::KnotGroupData &k, const std::string &text) {
  return ramikit::parse_word(text, k.presentation.generators);
}

} // namespace fixtures
