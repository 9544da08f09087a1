#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "ramikit/presentation.hpp"

namespace ramikit {

/// Crossings [i, j, k, l]: incoming under-strand first, then counterclockwise.
struct PdCode {
  std::vector<std::array<long, 4>> crossings;
};

/// Parses "[[1,4,2,5],[3,6,4,1],...]". Throws PdCodeError.
PdCode parse_pd_code(std::string_view text);

struct WirtingerOptions {
  /// Drop the last crossing relator (it follows from the others).
  bool drop_redundant_relator = false;
};

/// Wirtinger presentation: one generator x1, x2, ... per arc (numbered along the knot from strand
/// 1), one relator x_o^e x_in x_o^-e X_out per crossing. The meridian is the arc of strand 1 and the
/// longitude is read off a traversal with writhe correction. Throws PdCodeError for malformed
/// codes and for links.
KnotGroupData wirtinger_from_pd(const PdCode &pd, const WirtingerOptions &options = {});

} // namespace ramikit
