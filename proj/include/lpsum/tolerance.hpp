#pragma once

namespace lpsum {

// The one geometric tolerance. Applied relative to a natural scale (a norm)
// wherever one exists.
inline constexpr double kGeomTol = 1e-9;

// Default tolerance of the minimisation oracle for Birkhoff-James tests.
inline constexpr double kOracleTol = 1e-7;

// Purely relative, so decisions are invariant under rescaling either argument.
inline double relative_slack(double scale) { return kGeomTol * scale; }

}  // namespace lpsum
