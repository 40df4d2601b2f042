#pragma once

#include <string>

#include "focklat/fock.hpp"

namespace focklat {

// Built-in surfaces:
//   "P2"           k=1, gram [[1]]
//   "P1xP1"        k=2, gram [[0,1],[1,0]]
//   "P2-blown-up"  k=2, gram [[1,0],[0,-1]], exceptional slot 2
// Returns nullptr for unknown names.
ModelPtr preset_model(const std::string& name);

// Resolves a preset name, or reads a surface description file (JSON with
// name, mid_rank, gram, and optional 1-based exceptional_slot).  Parse
// failures and invariant violations raise input_error with distinct
// messages.
ModelPtr load_surface(const std::string& path_or_name);

} // namespace focklat
