#pragma once

namespace sgf {

// Selects between the OpenMP kernel and the serial reference path of the
// data-parallel loops (per-degree fiber work, batch scans). Both produce
// identical results.
enum class Execution { Serial, Parallel };

}  // namespace sgf
