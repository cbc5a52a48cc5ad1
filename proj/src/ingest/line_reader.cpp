#include "sscorpus/error.hpp"
#include "sscorpus/ingest.hpp"
#include "sscorpus/unicode.hpp"

namespace sscorpus::ingest {

LineReader::LineReader(const fs::path& path) : path_(path), in_(path, std::ios::binary) {
  if (!in_) throw IoError("cannot open " + path.string());
}

std::optional<std::string> LineReader::next() {
  std::string line;
  if (!std::getline(in_, line)) {
    if (in_.bad()) throw IoError("read error in " + path_.string());
    return std::nullopt;
  }
  ++line_;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (auto bad = unicode::find_invalid_utf8(line)) {
    throw IoError(path_.string() + ":" + std::to_string(line_) + ": invalid UTF-8 at byte " +
                  std::to_string(*bad + 1));
  }
  // Most lines are already NFC; skip the copy in that case.
  if (!unicode::is_nfc(line)) line = unicode::to_nfc(line);
  return line;
}

std::size_t count_lines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::size_t lines = 0;
  char buffer[1 << 16];
  char last = '\n';
  while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
    const auto n = static_cast<std::size_t>(in.gcount());
    for (std::size_t i = 0; i < n; ++i) lines += buffer[i] == '\n';
    last = buffer[n - 1];
  }
  if (in.bad()) throw IoError("read error in " + path.string());
  if (last != '\n') ++lines;
  return lines;
}

std::vector<std::string> read_lines(const fs::path& path) {
  LineReader reader(path);
  std::vector<std::string> lines;
  while (auto line = reader.next()) lines.push_back(std::move(*line));
  return lines;
}

BitextReader::BitextReader(const BitextSource& source) : target_(source.target_path), bridge_(source.bridge_path) {
  const std::size_t targets = count_lines(source.target_path);
  const std::size_t bridges = count_lines(source.bridge_path);
  if (targets != bridges) {
    throw Error("bitext line count mismatch: " + std::to_string(targets) + " vs " + std::to_string(bridges) + " (" +
                source.target_path.string() + ", " + source.bridge_path.string() + ")");
  }
  size_ = targets;
}

std::size_t BitextReader::read_batch(std::size_t max, std::vector<std::string>& targets,
                                     std::vector<std::string>& bridges) {
  std::size_t n = 0;
  while (n < max) {
    auto target = target_.next();
    auto bridge = bridge_.next();
    if (!target || !bridge) break;
    targets.push_back(std::move(*target));
    bridges.push_back(std::move(*bridge));
    ++n;
  }
  return n;
}

BitextReader open_bitext(const BitextSource& source) { return BitextReader(source); }

}  // namespace sscorpus::ingest
