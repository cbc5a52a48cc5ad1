#include "sscorpus/evaluation.hpp"

#include "sscorpus/bleu.hpp"
#include "sscorpus/error.hpp"
#include "sscorpus/readability.hpp"

namespace sscorpus::metrics {

EvalReport evaluate(std::span<const std::string> sources, std::span<const std::string> hypotheses,
                    std::span<const std::vector<std::string>> references, const LanguageProfile& profile,
                    const EvalOptions& options) {
  if (hypotheses.empty()) throw Error("evaluate: empty hypothesis list");
  EvalReport report;
  report.sari = sari(sources, hypotheses, references, options.max_order, options.workers);
  report.bleu = corpus_bleu(hypotheses, references, options.max_order, options.workers);
  report.fkgl = corpus_fkgl(hypotheses);
  report.fres = corpus_fres(hypotheses, profile);
  report.n_items = hypotheses.size();
  return report;
}

EvalReport evaluate_reference_row(std::span<const std::string> sources,
                                  std::span<const std::vector<std::string>> references,
                                  const LanguageProfile& profile, const EvalOptions& options) {
  if (sources.empty()) throw Error("evaluate: empty source list");
  if (sources.size() != references.size()) throw Error("evaluate: sources and reference sets differ in length");
  std::size_t num_refs = references.front().size();
  for (const auto& refs : references) {
    if (refs.size() != num_refs) throw Error("evaluate: reference row needs the same reference count per item");
  }
  if (num_refs < 2) throw Error("evaluate: reference row needs at least two references per item");

  EvalReport mean;
  std::vector<std::string> hypotheses(sources.size());
  std::vector<std::vector<std::string>> held_out(sources.size());
  for (std::size_t j = 0; j < num_refs; ++j) {
    for (std::size_t i = 0; i < sources.size(); ++i) {
      hypotheses[i] = references[i][j];
      held_out[i].clear();
      for (std::size_t k = 0; k < num_refs; ++k) {
        if (k != j) held_out[i].push_back(references[i][k]);
      }
    }
    const EvalReport r = evaluate(sources, hypotheses, held_out, profile, options);
    mean.sari.f_keep += r.sari.f_keep;
    mean.sari.f_add += r.sari.f_add;
    mean.sari.f_delete += r.sari.f_delete;
    mean.fkgl += r.fkgl;
    mean.fres += r.fres;
    mean.bleu += r.bleu;
  }
  const auto n = static_cast<double>(num_refs);
  mean.sari.f_keep /= n;
  mean.sari.f_add /= n;
  mean.sari.f_delete /= n;
  mean.sari.sari = (mean.sari.f_keep + mean.sari.f_add + mean.sari.f_delete) / 3.0;
  mean.sari.max_ngram_order = options.max_order;
  mean.fkgl /= n;
  mean.fres /= n;
  mean.bleu /= n;
  mean.n_items = sources.size();
  return mean;
}

nlohmann::json to_json(const EvalReport& report) {
  return nlohmann::json{
      {"sari", report.sari.sari},
      {"f_keep", report.sari.f_keep},
      {"f_add", report.sari.f_add},
      {"f_delete", report.sari.f_delete},
      {"fkgl", report.fkgl},
      {"fres", report.fres},
      {"bleu", report.bleu},
      {"n_items", report.n_items},
  };
}

EvalReport eval_report_from_json(const nlohmann::json& doc) {
  EvalReport report;
  report.sari.sari = doc.at("sari").get<double>();
  report.sari.f_keep = doc.at("f_keep").get<double>();
  report.sari.f_add = doc.at("f_add").get<double>();
  report.sari.f_delete = doc.at("f_delete").get<double>();
  report.fkgl = doc.at("fkgl").get<double>();
  report.fres = doc.at("fres").get<double>();
  report.bleu = doc.at("bleu").get<double>();
  report.n_items = doc.at("n_items").get<std::size_t>();
  return report;
}

}  // namespace sscorpus::metrics
