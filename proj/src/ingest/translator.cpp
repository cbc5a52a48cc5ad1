#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "sscorpus/error.hpp"
#include "sscorpus/ingest.hpp"
#include "sscorpus/unicode.hpp"

extern char** environ;

namespace sscorpus::ingest {

namespace {

class Fd {
 public:
  Fd() = default;
  explicit Fd(int fd) : fd_(fd) {}
  ~Fd() { reset(); }
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;

  int get() const { return fd_; }
  void reset() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_ = -1;
};

std::string errno_text() { return std::strerror(errno); }

std::string batch_label(std::size_t first_line, std::size_t n) {
  return "translator batch at offset " + std::to_string(first_line) + " (" + std::to_string(n) + " lines)";
}

void set_nonblocking(int fd) { ::fcntl(fd, F_SETFL, ::fcntl(fd, F_GETFL) | O_NONBLOCK); }

}  // namespace

std::vector<std::string> run_translator(const std::string& command, std::span<const std::string> lines,
                                        std::chrono::milliseconds timeout, std::size_t first_line) {
  const std::string label = batch_label(first_line, lines.size());

  // A socket for the child's stdin lets us write with MSG_NOSIGNAL, so a child
  // that exits early yields EPIPE rather than SIGPIPE.
  int in_pair[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, in_pair) != 0) {
    throw Error(label + ": socketpair failed: " + errno_text());
  }
  Fd to_child(in_pair[0]);
  Fd child_in(in_pair[1]);
  int out_pipe[2];
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) throw Error(label + ": pipe failed: " + errno_text());
  Fd from_child(out_pipe[0]);
  Fd child_out(out_pipe[1]);

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, child_in.get(), STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, child_out.get(), STDOUT_FILENO);

  const char* argv[] = {"/bin/sh", "-c", command.c_str(), nullptr};
  pid_t pid = 0;
  const int rc =
      ::posix_spawn(&pid, "/bin/sh", &actions, nullptr, const_cast<char* const*>(argv), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) throw Error(label + ": cannot start '" + command + "': " + std::strerror(rc));
  child_in.reset();
  child_out.reset();

  std::string input;
  for (const auto& line : lines) {
    input.append(line);
    input.push_back('\n');
  }
  set_nonblocking(to_child.get());
  set_nonblocking(from_child.get());

  std::string output;
  std::size_t written = 0;
  bool write_open = true;
  if (input.empty()) {
    ::shutdown(to_child.get(), SHUT_WR);
    write_open = false;
  }
  bool timed_out = false;
  std::string io_error;
  const auto deadline = std::chrono::steady_clock::now() + timeout;

  for (;;) {
    pollfd fds[2];
    nfds_t nfds = 0;
    fds[nfds++] = {from_child.get(), POLLIN, 0};
    if (write_open) fds[nfds++] = {to_child.get(), POLLOUT, 0};

    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    const int ready = ::poll(fds, nfds, static_cast<int>(std::min<long long>(left.count(), 1 << 30)));
    if (ready < 0) {
      if (errno == EINTR) continue;
      io_error = "poll failed: " + errno_text();
      break;
    }
    if (ready == 0) continue;

    if (write_open && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t n = ::send(to_child.get(), input.data() + written, input.size() - written, MSG_NOSIGNAL);
      if (n > 0) {
        written += static_cast<std::size_t>(n);
      } else if (n < 0 && errno != EAGAIN && errno != EWOULDBLOCK && errno != EINTR) {
        // The child stopped reading; its exit status and line count decide.
        write_open = false;
      }
      if (written == input.size()) {
        ::shutdown(to_child.get(), SHUT_WR);
        write_open = false;
      }
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      char buffer[1 << 16];
      const ssize_t n = ::read(from_child.get(), buffer, sizeof buffer);
      if (n > 0) {
        output.append(buffer, static_cast<std::size_t>(n));
      } else if (n == 0) {
        break;
      } else if (errno != EAGAIN && errno != EWOULDBLOCK && errno != EINTR) {
        io_error = "read failed: " + errno_text();
        break;
      }
    }
  }

  if (timed_out || !io_error.empty()) ::kill(pid, SIGKILL);
  to_child.reset();
  from_child.reset();
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }

  if (timed_out) {
    throw Error(label + ": timed out after " + std::to_string(timeout.count()) + " ms");
  }
  if (!io_error.empty()) throw Error(label + ": " + io_error);
  if (WIFSIGNALED(status)) {
    throw Error(label + ": translator killed by signal " + std::to_string(WTERMSIG(status)));
  }
  if (WEXITSTATUS(status) != 0) {
    throw Error(label + ": translator exited with status " + std::to_string(WEXITSTATUS(status)));
  }

  std::vector<std::string> result;
  result.reserve(lines.size());
  std::size_t start = 0;
  while (start < output.size()) {
    std::size_t end = output.find('\n', start);
    if (end == std::string::npos) end = output.size();
    std::string line = output.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    result.push_back(std::move(line));
    start = end + 1;
  }
  if (result.size() != lines.size()) {
    throw Error(label + ": translator returned " + std::to_string(result.size()) + " lines for " +
                std::to_string(lines.size()));
  }
  for (std::size_t i = 0; i < result.size(); ++i) {
    if (unicode::find_invalid_utf8(result[i])) {
      throw Error(label + ": invalid UTF-8 in output line " + std::to_string(first_line + i + 1));
    }
    if (!unicode::is_nfc(result[i])) result[i] = unicode::to_nfc(result[i]);
  }
  return result;
}

TranslatedStream::TranslatedStream(const BitextSource& bitext, const TranslationSource& translation)
    : translation_(translation) {
  if (translation_.batch_size == 0) throw Error("translation batch size must be positive");
  const std::size_t targets = count_lines(bitext.target_path);
  const std::size_t bridges = count_lines(bitext.bridge_path);
  if (targets != bridges) {
    throw Error("bitext line count mismatch: " + std::to_string(targets) + " vs " + std::to_string(bridges) + " (" +
                bitext.target_path.string() + ", " + bitext.bridge_path.string() + ")");
  }
  size_ = targets;
  targets_ = std::make_unique<LineReader>(bitext.target_path);
  if (translation_.mode == TranslationSource::Mode::kPrecomputed) {
    const fs::path path = translation_.path_or_cmd;
    const std::size_t translated = count_lines(path);
    if (translated != size_) {
      throw Error("translation line count mismatch: " + std::to_string(size_) + " vs " + std::to_string(translated) +
                  " (" + path.string() + ")");
    }
    precomputed_ = std::make_unique<LineReader>(path);
  } else {
    bridges_ = std::make_unique<LineReader>(bitext.bridge_path);
  }
}

TranslatedStream::TranslatedStream(const fs::path& targets, const TranslationSource& translation)
    : translation_(translation) {
  if (translation_.mode != TranslationSource::Mode::kPrecomputed) {
    throw Error("an external translator needs the bridge-language side of the bitext");
  }
  if (translation_.batch_size == 0) throw Error("translation batch size must be positive");
  const fs::path path = translation_.path_or_cmd;
  size_ = count_lines(targets);
  const std::size_t translated = count_lines(path);
  if (translated != size_) {
    throw Error("translation line count mismatch: " + std::to_string(size_) + " vs " + std::to_string(translated) +
                " (" + path.string() + ")");
  }
  targets_ = std::make_unique<LineReader>(targets);
  precomputed_ = std::make_unique<LineReader>(path);
}

TranslatedStream::~TranslatedStream() {
  if (pending_.valid()) pending_.wait();
}

TranslatedBatch TranslatedStream::load(std::size_t first_index) {
  TranslatedBatch batch;
  batch.first_index = first_index;
  std::vector<std::string> bridges;
  while (batch.targets.size() < translation_.batch_size) {
    auto target = targets_->next();
    if (!target) break;
    batch.targets.push_back(std::move(*target));
    if (bridges_) {
      auto bridge = bridges_->next();
      if (!bridge) throw Error("bridge file ended early at line " + std::to_string(targets_->line_number()));
      bridges.push_back(std::move(*bridge));
    } else {
      auto translated = precomputed_->next();
      if (!translated) {
        throw Error("translation file ended early at line " + std::to_string(targets_->line_number()));
      }
      batch.translations.push_back(std::move(*translated));
    }
  }
  if (bridges_ && !bridges.empty()) {
    batch.translations = run_translator(translation_.path_or_cmd, bridges, translation_.timeout, first_index);
  }
  return batch;
}

void TranslatedStream::prefetch() {
  const std::size_t first = issued_;
  issued_ = std::min(size_, issued_ + translation_.batch_size);
  pending_ = std::async(std::launch::async, [this, first] { return load(first); });
}

std::optional<TranslatedBatch> TranslatedStream::next() {
  if (!pending_.valid()) {
    if (issued_ >= size_) return std::nullopt;
    prefetch();
  }
  TranslatedBatch batch = pending_.get();
  if (batch.targets.empty()) return std::nullopt;
  if (issued_ < size_) prefetch();
  return batch;
}

}  // namespace sscorpus::ingest
