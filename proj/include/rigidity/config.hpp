#pragma once

namespace rigidity {

/// Maximum universe size accepted by the engines. Defaults to 64 and can be
/// overridden with the RIGIDITY_CAP environment variable (read once).
int universe_cap();

/// Override the cap at runtime (tests, tools).
void set_universe_cap(int cap);

} // namespace rigidity
