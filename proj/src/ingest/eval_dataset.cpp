#include "sscorpus/error.hpp"
#include "sscorpus/ingest.hpp"

namespace sscorpus::ingest {

EvalDataset read_eval_files(const fs::path& sources, std::span<const fs::path> references) {
  if (references.empty()) throw Error("evaluation data needs at least one reference file");
  EvalDataset data;
  data.sources = read_lines(sources);
  data.num_references = references.size();
  data.references.resize(data.sources.size());
  for (const auto& path : references) {
    auto lines = read_lines(path);
    if (lines.size() != data.sources.size()) {
      throw Error("reference file " + path.string() + " has " + std::to_string(lines.size()) + " lines, " +
                  sources.string() + " has " + std::to_string(data.sources.size()));
    }
    for (std::size_t i = 0; i < lines.size(); ++i) data.references[i].push_back(std::move(lines[i]));
  }
  return data;
}

EvalDataset read_eval_dataset(const fs::path& dir, const std::string& name) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::string stem = name;
  if (stem.empty()) {
    std::vector<std::string> found;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".src") found.push_back(entry.path().stem().string());
    }
    if (found.size() != 1) {
      throw Error(dir.string() + ": expected exactly one *.src file, found " + std::to_string(found.size()));
    }
    stem = found.front();
  }
  const fs::path sources = dir / (stem + ".src");
  if (!fs::exists(sources)) throw IoError("missing source file " + sources.string());

  std::vector<fs::path> references;
  for (std::size_t i = 0;; ++i) {
    fs::path ref = dir / (stem + ".ref." + std::to_string(i));
    if (!fs::exists(ref)) break;
    references.push_back(std::move(ref));
  }
  if (references.empty()) throw IoError("missing reference file " + (dir / (stem + ".ref.0")).string());
  return read_eval_files(sources, references);
}

}  // namespace sscorpus::ingest
