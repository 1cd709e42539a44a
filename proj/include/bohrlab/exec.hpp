#pragma once

namespace bohrlab {

// Every sweep kernel ships in two flavors: a plain serial loop that acts as
// the reference implementation, and an OpenMP loop over independent items.
// Results are stored per index and reduced serially, so both flavors return
// identical bytes.
enum class ExecutionPolicy { serial, parallel };

}  // namespace bohrlab
