#include <CLI11.hpp>
#include <fstream>
#include <iomanip>

#include "sscorpus/cli.hpp"
#include "sscorpus/error.hpp"
#include "sscorpus/evaluation.hpp"
#include "sscorpus/ingest.hpp"
#include "sscorpus/pipeline.hpp"

namespace sscorpus::cli {

namespace {

namespace fs = std::filesystem;
using pipeline::SelectorConfig;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct SelectorFlags {
  double h_bleu = 15.0;
  double h_fres = 10.0;
  bool no_bleu = false;
  bool no_fres = false;
  bool keep_identity = false;
  bool dedup = false;

  SelectorConfig config() const {
    SelectorConfig config;
    config.h_bleu = h_bleu;
    config.h_fres = h_fres;
    config.enable_bleu = !no_bleu;
    config.enable_fres = !no_fres;
    config.drop_identity = !keep_identity;
    config.dedup = dedup;
    return config;
  }
};

struct InputFlags {
  std::string target;
  std::string bridge;
  std::string translations;
  std::string translator_cmd;
  std::size_t batch_size = 1000;
  double timeout_s = 300.0;
};

struct BuildArgs {
  InputFlags input;
  SelectorFlags selectors;
  std::string lang = "en";
  std::string out;
  std::string format = "plain";
  unsigned workers = 1;
};

struct EvalArgs {
  std::string dataset;
  std::string name;
  std::string src;
  std::vector<std::string> refs;
  std::string hyp;
  std::string row;
  bool single_reference = false;
  std::string lang = "en";
  std::string out;
  unsigned workers = 1;
};

struct StatsArgs {
  std::string corpus;
};

struct SubsetArgs {
  std::string corpus;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "plain";
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
  cmd->add_option("--target", flags.target, "Corpus-language side of the bitext, one sentence per line")->required();
  cmd->add_option("--bridge", flags.bridge, "Bridge-language side of the bitext, line-aligned with --target");
  auto* translations =
      cmd->add_option("--translations", flags.translations, "Precomputed translations of the bridge side");
  auto* command = cmd->add_option("--translator-cmd", flags.translator_cmd,
                                  "Shell command translating stdin lines to stdout lines");
  translations->excludes(command);
  cmd->add_option("--batch-size", flags.batch_size, "Sentences per translation batch")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--timeout", flags.timeout_s, "Seconds allowed per translator batch")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_selector_flags(CLI::App* cmd, SelectorFlags& flags) {
  cmd->add_option("--h-bleu", flags.h_bleu, "Minimum BLEU of translation against source")
      ->check(CLI::Range(0.0, 100.0))
      ->capture_default_str();
  cmd->add_option("--h-fres", flags.h_fres, "Minimum reading-ease gap between the sides")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_flag("--no-bleu-selector", flags.no_bleu, "Disable the BLEU selector");
  cmd->add_flag("--no-fres-selector", flags.no_fres, "Disable the reading-ease selector");
  cmd->add_flag("--keep-identity", flags.keep_identity, "Let identical pairs through the BLEU selector");
  cmd->add_flag("--dedup", flags.dedup, "Drop repeated (complex, simple) pairs");
}

void add_lang(CLI::App* cmd, std::string& lang) {
  cmd->add_option("--lang", lang, "Language profile: en, fr, es-paper, es-fh")->capture_default_str();
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Corpus file format")
      ->check(CLI::IsMember({"plain", "tsv"}))
      ->capture_default_str();
}

void add_workers(CLI::App* cmd, unsigned& workers) {
  cmd->add_option("--workers", workers, "Worker threads for scoring")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

const LanguageProfile& profile_or_usage(const std::string& key) {
  try {
    return profile_for(key);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

ingest::TranslationSource translation_source(const InputFlags& flags) {
  ingest::TranslationSource source;
  source.batch_size = flags.batch_size;
  source.timeout = std::chrono::milliseconds(static_cast<long long>(flags.timeout_s * 1000.0));
  if (!flags.translator_cmd.empty()) {
    if (flags.bridge.empty()) throw UsageError("--translator-cmd needs --bridge");
    source.mode = ingest::TranslationSource::Mode::kExternal;
    source.path_or_cmd = flags.translator_cmd;
  } else if (!flags.translations.empty()) {
    source.mode = ingest::TranslationSource::Mode::kPrecomputed;
    source.path_or_cmd = flags.translations;
  } else {
    throw UsageError("one of --translations or --translator-cmd is required");
  }
  return source;
}

std::unique_ptr<ingest::TranslatedStream> open_stream(const InputFlags& flags) {
  const auto source = translation_source(flags);
  if (flags.bridge.empty()) return std::make_unique<ingest::TranslatedStream>(flags.target, source);
  return std::make_unique<ingest::TranslatedStream>(ingest::BitextSource{flags.target, flags.bridge}, source);
}

nlohmann::json input_json(const InputFlags& flags) {
  nlohmann::json doc = {{"target", flags.target}, {"batch_size", flags.batch_size}};
  if (!flags.bridge.empty()) doc["bridge"] = flags.bridge;
  if (!flags.translations.empty()) doc["translations"] = flags.translations;
  if (!flags.translator_cmd.empty()) {
    doc["translator_cmd"] = flags.translator_cmd;
    doc["timeout_s"] = flags.timeout_s;
  }
  return doc;
}

void print_summary(std::ostream& out, const pipeline::DropTally& tally) {
  const std::pair<const char*, std::uint64_t> rows[] = {
      {"input pairs", tally.input},           {"dropped by identity", tally.identity},
      {"dropped by BLEU", tally.bleu},        {"dropped by no words", tally.no_words},
      {"dropped by FRES", tally.fres},        {"dropped by dedup", tally.duplicate},
      {"kept", tally.kept},
  };
  for (const auto& [label, value] : rows) {
    out << std::left << std::setw(22) << label << std::right << std::setw(12) << value << '\n';
  }
}

int cmd_build(const BuildArgs& args, std::ostream& out) {
  const LanguageProfile& profile = profile_or_usage(args.lang);
  const SelectorConfig config = args.selectors.config();
  const auto format = ingest::corpus_format_from_string(args.format);
  auto stream = open_stream(args.input);

  pipeline::CorpusBuilder builder(config, profile, args.workers);
  ingest::CorpusWriter writer(args.out, format);
  while (auto batch = stream->next()) {
    auto pairs = pipeline::generate_pseudo_pairs(batch->targets, batch->translations, batch->first_index);
    writer.write(builder.process(std::move(pairs)));
  }
  nlohmann::json run = {{"command", "build"}, {"input", input_json(args.input)}};
  writer.finish(profile.lang_code, builder.config(), builder.stats(), builder.tally(), {{"run", run}});
  print_summary(out, builder.tally());
  return kExitOk;
}

int cmd_ablate(const BuildArgs& args, std::ostream& out) {
  const LanguageProfile& profile = profile_or_usage(args.lang);
  const SelectorConfig base = args.selectors.config();
  const auto format = ingest::corpus_format_from_string(args.format);
  auto stream = open_stream(args.input);

  std::vector<std::string> targets;
  std::vector<std::string> translations;
  while (auto batch = stream->next()) {
    std::move(batch->targets.begin(), batch->targets.end(), std::back_inserter(targets));
    std::move(batch->translations.begin(), batch->translations.end(), std::back_inserter(translations));
  }
  const auto result = pipeline::ablate(targets, translations, profile, base, args.workers);
  const std::pair<const char*, const pipeline::SimplificationCorpus*> variants[] = {
      {"pseudo", &result.pseudo},
      {"wo_bleu", &result.without_bleu},
      {"wo_fres", &result.without_fres},
      {"full", &result.full},
  };
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [name, corpus] : variants) {
    nlohmann::json run = {{"command", "ablate"}, {"variant", name}, {"input", input_json(args.input)}};
    ingest::write_corpus(*corpus, args.out + "." + name, format, {{"run", run}});
    summary[name] = pipeline::to_json(corpus->tally);
  }
  out << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  const LanguageProfile& profile = profile_or_usage(args.lang);
  if (args.dataset.empty() == args.src.empty()) throw UsageError("give either --dataset or --src with --ref");
  if (!args.src.empty() && args.refs.empty()) throw UsageError("--src needs at least one --ref");
  if (args.hyp.empty() == args.row.empty()) throw UsageError("give either --hyp or --row");

  ingest::EvalDataset data;
  if (!args.dataset.empty()) {
    data = ingest::read_eval_dataset(args.dataset, args.name);
  } else {
    std::vector<fs::path> refs(args.refs.begin(), args.refs.end());
    data = ingest::read_eval_files(args.src, refs);
  }
  if (args.single_reference) {
    for (auto& refs : data.references) refs.resize(1);
    data.num_references = 1;
  }

  metrics::EvalOptions options;
  options.workers = args.workers;
  metrics::EvalReport report;
  if (args.row == "reference") {
    report = metrics::evaluate_reference_row(data.sources, data.references, profile, options);
  } else {
    std::vector<std::string> hypotheses;
    if (args.row == "source") {
      hypotheses = data.sources;
    } else {
      hypotheses = ingest::read_lines(args.hyp);
      if (hypotheses.size() != data.sources.size()) {
        throw Error("hypothesis file " + args.hyp + " has " + std::to_string(hypotheses.size()) +
                    " lines, sources have " + std::to_string(data.sources.size()));
      }
    }
    report = metrics::evaluate(data.sources, hypotheses, data.references, profile, options);
  }

  nlohmann::json doc = metrics::to_json(report);
  doc["num_references"] = data.num_references;
  doc["lang"] = profile.lang_code;
  const std::string text = doc.dump(2);
  out << text << '\n';
  if (!args.out.empty()) {
    std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
    file << text << '\n';
    if (!file) throw IoError("write failed: " + args.out);
  }
  return kExitOk;
}

int cmd_stats(const StatsArgs& args, std::ostream& out) {
  const auto corpus = ingest::read_corpus(args.corpus);
  nlohmann::json doc = pipeline::to_json(pipeline::corpus_stats(corpus));
  doc["lang"] = corpus.lang;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_subset(const SubsetArgs& args, std::ostream& out) {
  const auto corpus = ingest::read_corpus(args.corpus);
  const auto format = ingest::corpus_format_from_string(args.format);
  const auto sample = pipeline::subset(corpus, args.n, args.seed);
  nlohmann::json run = {{"command", "subset"}, {"corpus", args.corpus}, {"n", args.n}, {"seed", args.seed}};
  ingest::write_corpus(sample, args.out, format, {{"run", run}});
  out << pipeline::to_json(sample.stats).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build and evaluate sentence simplification corpora from translated bitexts", "sscorpus"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Select simplification pairs and write a corpus");
  add_input_flags(build_cmd, build.input);
  add_selector_flags(build_cmd, build.selectors);
  add_lang(build_cmd, build.lang);
  build_cmd->add_option("--out", build.out, "Output prefix")->required();
  add_format(build_cmd, build.format);
  add_workers(build_cmd, build.workers);

  BuildArgs ablate;
  auto* ablate_cmd = app.add_subcommand("ablate", "Write the four selector variants of a corpus");
  add_input_flags(ablate_cmd, ablate.input);
  add_selector_flags(ablate_cmd, ablate.selectors);
  add_lang(ablate_cmd, ablate.lang);
  ablate_cmd->add_option("--out", ablate.out, "Output prefix; variants get .pseudo, .wo_bleu, .wo_fres, .full")
      ->required();
  add_format(ablate_cmd, ablate.format);
  add_workers(ablate_cmd, ablate.workers);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Score hypotheses with SARI, BLEU, FKGL and FRES");
  eval_cmd->add_option("--dataset", eval.dataset, "Directory holding <name>.src and <name>.ref.<i>");
  eval_cmd->add_option("--name", eval.name, "Dataset file stem inside --dataset");
  eval_cmd->add_option("--src", eval.src, "Source sentences");
  eval_cmd->add_option("--ref", eval.refs, "Reference file (repeat for several)");
  eval_cmd->add_option("--hyp", eval.hyp, "System outputs, one per source line");
  eval_cmd->add_option("--row", eval.row, "Score a fixed row: the sources, or the references leave-one-out")
      ->check(CLI::IsMember({"source", "reference"}));
  eval_cmd->add_flag("--single-reference", eval.single_reference, "Use only the first reference of each item");
  add_lang(eval_cmd, eval.lang);
  eval_cmd->add_option("--out", eval.out, "Also write the report to this file");
  add_workers(eval_cmd, eval.workers);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Vocabulary and length statistics of a corpus");
  stats_cmd->add_option("--corpus", stats.corpus, "Corpus prefix")->required();

  SubsetArgs subset;
  auto* subset_cmd = app.add_subcommand("subset", "Deterministic random sample of a corpus");
  subset_cmd->add_option("--corpus", subset.corpus, "Corpus prefix")->required();
  subset_cmd->add_option("-n,--size", subset.n, "Number of pairs")->required();
  subset_cmd->add_option("--seed", subset.seed, "Sampling seed")->capture_default_str();
  subset_cmd->add_option("--out", subset.out, "Output prefix")->required();
  add_format(subset_cmd, subset.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build_cmd) return cmd_build(build, out);
    if (*ablate_cmd) return cmd_ablate(ablate, out);
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*stats_cmd) return cmd_stats(stats, out);
    if (*subset_cmd) return cmd_subset(subset, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace sscorpus::cli
