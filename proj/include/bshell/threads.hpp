#pragma once

namespace bshell {

// Resolves a worker count: requested > 0 is taken as-is; requested == 0
// falls back to the BSHELL_THREADS environment variable, then to the OpenMP
// default. Always at least 1.
int resolve_threads(int requested);

}  // namespace bshell
