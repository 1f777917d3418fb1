#pragma once

#include <cstdint>

#include "upw/word.hpp"

namespace upw {

/// Limits for the exact searches. Node budgets are the deterministic
/// reference; a wall-clock limit (seconds > 0) is checked coarsely and makes
/// outcomes machine-dependent. long_run lifts the gates that keep known
/// multi-hour instances (n >= 5) out of default runs.
struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 0.0;
    bool long_run = false;
};

/// Result of an exact search. exhaustive is true only when every shorter
/// candidate was refuted (analytically or by completed enumeration); on
/// budget exhaustion the best known witness is returned with
/// exhaustive=false.
struct SearchOutcome {
    int optimal_length = 0;
    Word witness;
    std::uint64_t nodes_expanded = 0;
    bool exhaustive = false;
};

}  // namespace upw
