#pragma once

#include <string>
#include <string_view>

namespace folast::proc {

enum class RunStatus {
    Exited,      // child ran to completion (any exit code)
    TimedOut,    // killed after the deadline; partial output kept
    SpawnFailed, // command could not be started
};

struct RunResult {
    RunStatus status = RunStatus::SpawnFailed;
    int exit_code = -1;
    std::string output; // stdout and stderr, interleaved by arrival
    long elapsed_ms = 0;
};

/// Runs `command` through /bin/sh -c, writing `input` to its stdin and
/// collecting output until exit or deadline. On timeout the child is killed
/// with SIGKILL and reaped; the call never blocks past the deadline plus a
/// small grace period.
RunResult run_process(const std::string& command, std::string_view input,
                      int timeout_ms);

} // namespace folast::proc
