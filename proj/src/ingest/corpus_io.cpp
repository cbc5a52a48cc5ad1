#include <charconv>
#include <cmath>

#include "sscorpus/error.hpp"
#include "sscorpus/ingest.hpp"

namespace sscorpus::ingest {

using pipeline::LabeledPair;
using pipeline::SimplificationCorpus;

const char* const kTsvHeader = "complex\tsimple\tbleu\tfres_complex\tfres_simple\tfres_gap";

std::string to_string(CorpusFormat format) { return format == CorpusFormat::kTsv ? "tsv" : "plain"; }

CorpusFormat corpus_format_from_string(std::string_view text) {
  if (text == "plain") return CorpusFormat::kPlain;
  if (text == "tsv") return CorpusFormat::kTsv;
  throw Error("unknown corpus format '" + std::string(text) + "' (expected plain or tsv)");
}

namespace {

fs::path with_suffix(const fs::path& prefix, const std::string& suffix) {
  fs::path out = prefix;
  out += suffix;
  return out;
}

std::string format_number(const std::optional<double>& value) {
  if (!value) return "";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, *value);
  return std::string(buffer, result.ptr);
}

std::optional<double> parse_number(std::string_view field, const fs::path& path, std::size_t line) {
  if (field.empty()) return std::nullopt;
  double value = 0.0;
  const auto result = std::from_chars(field.data(), field.data() + field.size(), value);
  if (result.ec != std::errc() || result.ptr != field.data() + field.size()) {
    throw IoError(path.string() + ":" + std::to_string(line) + ": bad number '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

void open_for_write(std::ofstream& out, const fs::path& path) {
  out.open(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
}

void check_plain_line(const std::string& text) {
  if (text.find_first_of("\r\n") != std::string::npos) {
    throw Error("plain corpus format cannot hold line breaks inside a sentence; use --format tsv");
  }
}

}  // namespace

std::vector<fs::path> corpus_data_files(const fs::path& prefix, CorpusFormat format) {
  if (format == CorpusFormat::kTsv) return {with_suffix(prefix, ".tsv")};
  return {with_suffix(prefix, ".complex"), with_suffix(prefix, ".simple")};
}

fs::path corpus_meta_file(const fs::path& prefix) { return with_suffix(prefix, ".meta.json"); }

std::string escape_tsv_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_tsv_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\' || i + 1 == text.size()) {
      out.push_back(text[i]);
      continue;
    }
    switch (text[++i]) {
      case '\\': out.push_back('\\'); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      default:
        out.push_back('\\');
        out.push_back(text[i]);
    }
  }
  return out;
}

CorpusWriter::CorpusWriter(const fs::path& prefix, CorpusFormat format)
    : prefix_(prefix), format_(format), paths_(corpus_data_files(prefix, format)) {
  if (prefix.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(prefix.parent_path(), ec);
    if (ec) throw IoError("cannot create " + prefix.parent_path().string() + ": " + ec.message());
  }
  open_for_write(first_, paths_[0]);
  if (format_ == CorpusFormat::kPlain) {
    open_for_write(second_, paths_[1]);
  } else {
    first_ << kTsvHeader << '\n';
    check(first_, paths_[0]);
  }
}

void CorpusWriter::check(std::ofstream& out, const fs::path& path) {
  if (!out) throw IoError("write failed: " + path.string());
}

void CorpusWriter::write(std::span<const LabeledPair> pairs) {
  for (const auto& pair : pairs) {
    if (format_ == CorpusFormat::kPlain) {
      check_plain_line(pair.complex);
      check_plain_line(pair.simple);
      first_ << pair.complex << '\n';
      second_ << pair.simple << '\n';
    } else {
      first_ << escape_tsv_field(pair.complex) << '\t' << escape_tsv_field(pair.simple) << '\t'
             << format_number(pair.bleu) << '\t' << format_number(pair.fres_complex) << '\t'
             << format_number(pair.fres_simple) << '\t' << format_number(pair.fres_gap) << '\n';
    }
  }
  check(first_, paths_[0]);
  if (format_ == CorpusFormat::kPlain) check(second_, paths_[1]);
}

void CorpusWriter::finish(const std::string& lang, const pipeline::SelectorConfig& config,
                          const pipeline::CorpusStats& stats, const pipeline::DropTally& tally,
                          const nlohmann::json& extra) {
  first_.close();
  check(first_, paths_[0]);
  if (format_ == CorpusFormat::kPlain) {
    second_.close();
    check(second_, paths_[1]);
  }

  nlohmann::json files = nlohmann::json::array();
  for (const auto& path : paths_) files.push_back(path.filename().string());
  nlohmann::json meta = {
      {"format", to_string(format_)},
      {"lang", lang},
      {"files", files},
      {"config", pipeline::to_json(config)},
      {"stats", pipeline::to_json(stats)},
      {"tally", pipeline::to_json(tally)},
  };
  for (const auto& [key, value] : extra.items()) meta[key] = value;

  const fs::path meta_path = corpus_meta_file(prefix_);
  std::ofstream out;
  open_for_write(out, meta_path);
  out << meta.dump(2) << '\n';
  out.close();
  if (!out) throw IoError("write failed: " + meta_path.string());
}

void write_corpus(const SimplificationCorpus& corpus, const fs::path& prefix, CorpusFormat format,
                  const nlohmann::json& extra) {
  CorpusWriter writer(prefix, format);
  writer.write(corpus.pairs);
  writer.finish(corpus.lang, corpus.config_snapshot, corpus.stats, corpus.tally, extra);
}

SimplificationCorpus read_corpus(const fs::path& prefix) {
  const fs::path meta_path = corpus_meta_file(prefix);
  std::ifstream meta_in(meta_path, std::ios::binary);
  if (!meta_in) throw IoError("cannot open " + meta_path.string());
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(meta_in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(meta_path.string() + ": " + e.what());
  }

  SimplificationCorpus corpus;
  CorpusFormat format;
  try {
    format = corpus_format_from_string(meta.at("format").get<std::string>());
    corpus.lang = meta.at("lang").get<std::string>();
    corpus.config_snapshot = pipeline::selector_config_from_json(meta.at("config"));
    corpus.stats = pipeline::corpus_stats_from_json(meta.at("stats"));
    corpus.tally = pipeline::drop_tally_from_json(meta.at("tally"));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(meta_path.string() + ": " + e.what());
  }

  const auto paths = corpus_data_files(prefix, format);
  if (format == CorpusFormat::kPlain) {
    const auto complex = read_lines(paths[0]);
    const auto simple = read_lines(paths[1]);
    if (complex.size() != simple.size()) {
      throw IoError("corpus files differ in length: " + std::to_string(complex.size()) + " vs " +
                    std::to_string(simple.size()) + " (" + paths[0].string() + ", " + paths[1].string() + ")");
    }
    corpus.pairs.resize(complex.size());
    for (std::size_t i = 0; i < complex.size(); ++i) {
      corpus.pairs[i].complex = complex[i];
      corpus.pairs[i].simple = simple[i];
      corpus.pairs[i].index = i;
    }
  } else {
    LineReader reader(paths[0]);
    const auto header = reader.next();
    if (!header || *header != kTsvHeader) throw IoError(paths[0].string() + ": missing or unexpected header");
    while (auto line = reader.next()) {
      const auto fields = split_tabs(*line);
      if (fields.size() != 6) {
        throw IoError(paths[0].string() + ":" + std::to_string(reader.line_number()) + ": expected 6 fields, got " +
                      std::to_string(fields.size()));
      }
      LabeledPair pair;
      pair.complex = unescape_tsv_field(fields[0]);
      pair.simple = unescape_tsv_field(fields[1]);
      pair.bleu = parse_number(fields[2], paths[0], reader.line_number());
      pair.fres_complex = parse_number(fields[3], paths[0], reader.line_number());
      pair.fres_simple = parse_number(fields[4], paths[0], reader.line_number());
      pair.fres_gap = parse_number(fields[5], paths[0], reader.line_number());
      pair.index = corpus.pairs.size();
      corpus.pairs.push_back(std::move(pair));
    }
  }
  return corpus;
}

}  // namespace sscorpus::ingest
