#pragma once

namespace graphframes {

inline constexpr const char* kToolName = "graph-frames";
inline constexpr const char* kToolVersion = "1.0.0";

// First line of every edge-list/CSV output; readers treat it as a comment.
inline constexpr const char* kFormatComment = "# graph-frames v1";

// "format" field of every JSON report.
inline constexpr int kReportFormat = 1;

// Identifier of the PRNG behind random_graph, recorded in generated files.
inline constexpr const char* kRngAlgorithm = "splitmix64";

}  // namespace graphframes
