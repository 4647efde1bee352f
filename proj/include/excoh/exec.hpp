#pragma once

namespace excoh {

// Selects the serial reference kernel or the OpenMP kernel.
enum class Exec { Serial, Parallel };

// Applies EXCOH_THREADS (if set) to the OpenMP runtime; returns the thread count in use.
int configure_threads_from_env();

}  // namespace excoh
