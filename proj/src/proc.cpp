#include "folast/proc.hpp"

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstring>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace folast::proc {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

void set_nonblocking(int fd) {
    int flags = fcntl(fd, F_GETFL, 0);
    fcntl(fd, F_SETFL, flags | O_NONBLOCK);
}

} // namespace

RunResult run_process(const std::string& command, std::string_view input,
                      int timeout_ms) {
    RunResult result;
    const auto start = Clock::now();

    int in_pipe[2], out_pipe[2];
    if (pipe(in_pipe) != 0) return result;
    if (pipe(out_pipe) != 0) {
        close(in_pipe[0]);
        close(in_pipe[1]);
        return result;
    }

    pid_t pid = fork();
    if (pid < 0) {
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) close(fd);
        return result;
    }

    if (pid == 0) {
        dup2(in_pipe[0], STDIN_FILENO);
        dup2(out_pipe[1], STDOUT_FILENO);
        dup2(out_pipe[1], STDERR_FILENO);
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) close(fd);
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }

    close(in_pipe[0]);
    close(out_pipe[1]);
    set_nonblocking(in_pipe[1]);
    set_nonblocking(out_pipe[0]);
    signal(SIGPIPE, SIG_IGN);

    size_t written = 0;
    bool stdin_open = true;
    bool stdout_open = true;
    bool timed_out = false;

    while (stdout_open || (stdin_open && written < input.size())) {
        long remaining = timeout_ms - ms_since(start);
        if (remaining <= 0) {
            timed_out = true;
            break;
        }

        pollfd fds[2];
        nfds_t nfds = 0;
        int out_idx = -1, in_idx = -1;
        if (stdout_open) {
            out_idx = static_cast<int>(nfds);
            fds[nfds++] = {out_pipe[0], POLLIN, 0};
        }
        if (stdin_open) {
            in_idx = static_cast<int>(nfds);
            short events = written < input.size() ? POLLOUT : 0;
            if (events == 0) {
                // Everything written; close our end so the child sees EOF.
                close(in_pipe[1]);
                stdin_open = false;
                continue;
            }
            fds[nfds++] = {in_pipe[1], events, 0};
        }

        int rc = poll(fds, nfds, static_cast<int>(std::min<long>(remaining, 100)));
        if (rc < 0 && errno != EINTR) break;
        if (rc <= 0) continue;

        if (out_idx >= 0 && (fds[out_idx].revents & (POLLIN | POLLHUP))) {
            char buffer[4096];
            ssize_t n = read(out_pipe[0], buffer, sizeof buffer);
            if (n > 0) {
                result.output.append(buffer, static_cast<size_t>(n));
            } else if (n == 0 || (n < 0 && errno != EAGAIN && errno != EINTR)) {
                close(out_pipe[0]);
                stdout_open = false;
            }
        }
        if (in_idx >= 0 && (fds[in_idx].revents & (POLLOUT | POLLERR | POLLHUP))) {
            if (fds[in_idx].revents & (POLLERR | POLLHUP)) {
                close(in_pipe[1]);
                stdin_open = false;
            } else {
                ssize_t n = write(in_pipe[1], input.data() + written,
                                  input.size() - written);
                if (n > 0) {
                    written += static_cast<size_t>(n);
                } else if (n < 0 && errno != EAGAIN && errno != EINTR) {
                    close(in_pipe[1]);
                    stdin_open = false;
                }
            }
        }
    }

    if (stdin_open) close(in_pipe[1]);
    if (stdout_open) close(out_pipe[0]);

    int status = 0;
    if (timed_out) {
        kill(pid, SIGKILL);
        waitpid(pid, &status, 0);
        result.status = RunStatus::TimedOut;
        result.elapsed_ms = ms_since(start);
        return result;
    }

    // Output pipe is drained/closed; wait with the remaining budget so a
    // child that ignores EOF cannot hang us.
    for (;;) {
        pid_t done = waitpid(pid, &status, WNOHANG);
        if (done == pid) break;
        if (done < 0 && errno != EINTR) break;
        if (ms_since(start) > timeout_ms + 2000) {
            kill(pid, SIGKILL);
            waitpid(pid, &status, 0);
            result.status = RunStatus::TimedOut;
            result.elapsed_ms = ms_since(start);
            return result;
        }
        usleep(2000);
    }

    result.elapsed_ms = ms_since(start);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
        result.status = result.exit_code == 127 ? RunStatus::SpawnFailed
                                                : RunStatus::Exited;
    } else {
        result.exit_code = -1;
        result.status = RunStatus::Exited; // killed by a signal
    }
    return result;
}

} // namespace folast::proc
