// Copyright 2026 The edacsc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edacsc/process_corrector.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <thread>

#include "edacsc/error.h"

extern char** environ;

namespace edacsc {
namespace {

void CloseFd(int* fd) {
  if (*fd >= 0) {
    ::close(*fd);
    *fd = -1;
  }
}

std::string ErrnoText() { return std::strerror(errno); }

std::string DescribeStatus(int status) {
  if (WIFEXITED(status)) {
    return "exited with status " + std::to_string(WEXITSTATUS(status));
  }
  if (WIFSIGNALED(status)) {
    return "killed by signal " + std::to_string(WTERMSIG(status));
  }
  return "stopped";
}

}  // namespace

ProcessCorrector::ProcessCorrector(const std::string& command,
                                   ProcessOptions options)
    : command_(command), options_(options) {
  // Writes to a dead child must surface as EPIPE, not kill us.
  ::signal(SIGPIPE, SIG_IGN);

  int in_pipe[2];   // parent -> child
  int out_pipe[2];  // child -> parent
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) {
    throw IoError("pipe: " + ErrnoText());
  }
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw IoError("pipe: " + ErrnoText());
  }

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in_pipe[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out_pipe[1], STDOUT_FILENO);

  // Own process group, so a kill also reaches whatever the shell started.
  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);

  const char* argv[] = {"/bin/sh", "-c", command_.c_str(), nullptr};
  const int rc = ::posix_spawn(&pid_, "/bin/sh", &actions, &attr,
                               const_cast<char**>(argv), environ);
  posix_spawnattr_destroy(&attr);
  posix_spawn_file_actions_destroy(&actions);
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  if (rc != 0) {
    pid_ = -1;
    CloseFd(&to_child_);
    CloseFd(&from_child_);
    throw IoError("cannot start corrector '" + command_ +
                  "': " + std::strerror(rc));
  }
  ::fcntl(to_child_, F_SETFL, ::fcntl(to_child_, F_GETFL) | O_NONBLOCK);
  ::fcntl(from_child_, F_SETFL, ::fcntl(from_child_, F_GETFL) | O_NONBLOCK);

  const auto lines =
      Transfer(HandshakeLine() + "\n", 1, Clock::now() + options_.timeout);
  try {
    CheckHandshake(lines.front());
  } catch (const Error& e) {
    Fail(e.what());
  }
}

ProcessCorrector::~ProcessCorrector() { Shutdown(); }

void ProcessCorrector::Shutdown() {
  CloseFd(&to_child_);
  CloseFd(&from_child_);
  if (pid_ <= 0) return;
  // Closing stdin is the child's signal to exit; give it a moment.
  int status = 0;
  for (int i = 0; i < 100; ++i) {
    if (::waitpid(pid_, &status, WNOHANG) == pid_) {
      pid_ = -1;
      return;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  ::kill(-pid_, SIGKILL);
  ::waitpid(pid_, &status, 0);
  pid_ = -1;
}

void ProcessCorrector::Fail(const std::string& what) {
  std::string message = "corrector '" + command_ + "': " + what;
  CloseFd(&to_child_);
  CloseFd(&from_child_);
  if (pid_ > 0) {
    int status = 0;
    if (::waitpid(pid_, &status, WNOHANG) == pid_) {
      message += " (process " + DescribeStatus(status) + ")";
    } else {
      ::kill(-pid_, SIGKILL);
      ::waitpid(pid_, &status, 0);
    }
    pid_ = -1;
  }
  throw ProtocolError(message);
}

std::vector<std::string> ProcessCorrector::Transfer(
    const std::string& out, std::size_t lines_wanted,
    Clock::time_point deadline) {
  if (pid_ <= 0) throw ProtocolError("corrector '" + command_ + "' is gone");
  std::vector<std::string> lines;
  std::size_t written = 0;
  char buf[1 << 16];

  auto take_lines = [&] {
    std::size_t start = 0;
    std::size_t nl;
    while (lines.size() < lines_wanted &&
           (nl = pending_.find('\n', start)) != std::string::npos) {
      lines.emplace_back(pending_, start, nl - start);
      start = nl + 1;
    }
    pending_.erase(0, start);
  };
  take_lines();

  while (lines.size() < lines_wanted) {
    const auto now = Clock::now();
    if (now >= deadline) Fail("timed out");
    const auto wait_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now)
            .count();

    pollfd fds[2];
    int nfds = 0;
    fds[nfds++] = {from_child_, POLLIN, 0};
    const bool writing = written < out.size();
    if (writing) fds[nfds++] = {to_child_, POLLOUT, 0};
    const int rc = ::poll(fds, nfds, static_cast<int>(wait_ms) + 1);
    if (rc < 0) {
      if (errno == EINTR) continue;
      Fail("poll: " + ErrnoText());
    }
    if (writing && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t n =
          ::write(to_child_, out.data() + written, out.size() - written);
      if (n < 0 && errno != EAGAIN && errno != EINTR) {
        Fail("write failed: " + ErrnoText());
      }
      if (n > 0) written += static_cast<std::size_t>(n);
    }
    if (fds[0].revents & (POLLIN | POLLERR | POLLHUP)) {
      const ssize_t n = ::read(from_child_, buf, sizeof(buf));
      if (n == 0) Fail("closed its output");
      if (n < 0 && errno != EAGAIN && errno != EINTR) {
        Fail("read failed: " + ErrnoText());
      }
      if (n > 0) {
        pending_.append(buf, static_cast<std::size_t>(n));
        take_lines();
      }
    }
  }
  // The child may answer before it has read everything (it should not).
  while (written < out.size()) {
    if (Clock::now() >= deadline) Fail("timed out");
    pollfd fd{to_child_, POLLOUT, 0};
    ::poll(&fd, 1, 10);
    const ssize_t n =
        ::write(to_child_, out.data() + written, out.size() - written);
    if (n < 0 && errno != EAGAIN && errno != EINTR) {
      Fail("write failed: " + ErrnoText());
    }
    if (n > 0) written += static_cast<std::size_t>(n);
  }
  return lines;
}

std::vector<CorrectorResponse> ProcessCorrector::Exchange(
    const std::vector<CorrectorRequest>& requests) {
  std::string out;
  for (const auto& r : requests) {
    out += FormatMessage(r);
    out += '\n';
  }
  const auto lines =
      Transfer(out, requests.size(), Clock::now() + options_.timeout);
  std::vector<CorrectorResponse> responses;
  responses.reserve(lines.size());
  for (const auto& line : lines) responses.push_back(ParseMessage(line));
  return responses;
}

}  // namespace edacsc
