#pragma once

namespace kwclass {

// Hard bound imposed by the 32-bit word encoding and 32-bit word ids.
inline constexpr int kAbsoluteMaxN = 28;

// Default word-length cap; the partition engine allocates 2^n entries.
inline constexpr int kDefaultMaxN = 24;

// Adjacency lists cost ~n*2^n entries, so graphs get a tighter cap.
inline constexpr int kDefaultMaxNGraph = 20;

// Largest component the exact canonical-labeling search accepts.
inline constexpr int kDefaultComponentCap = 64;

// Runtime word-length cap: KWCLASS_MAX_N (clamped to [0, kAbsoluteMaxN])
// or kDefaultMaxN. Read once per process.
int max_n();

// min(kDefaultMaxNGraph, max_n())
int max_n_graph();

}  // namespace kwclass
