#pragma once

namespace graphframes {

// Comparison thresholds used across the library. Every approximate check
// routes through one of these knobs so reports can state the policy in
// effect and tests can tighten or relax it in one place.
struct TolerancePolicy {
  // Orthogonality residuals (max |V^T V - I| entry).
  double orth = 1e-10;
  // Reconstruction / entrywise matrix agreement residuals.
  double recon = 1e-10;
  // Threshold below which an eigenvalue or component counts as zero.
  double zero = 1e-9;
  // Relative slack when comparing frame bounds (tightness, duality).
  double tight = 1e-9;
  // Relative gap that separates distinct eigenvalue clusters.
  double cluster = 1e-6;
};

}  // namespace graphframes
