#pragma once

namespace sobolab {

inline constexpr const char* kVersion = "0.1.0";

// Name of the seeded generator used for every random quantity in the
// library.  Recorded in report summaries so that archived results can be
// reproduced bit for bit.
inline constexpr const char* kRngVersion = "splitmix64-v1";

}  // namespace sobolab
