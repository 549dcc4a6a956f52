#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualtap/core/types.hpp"
#include "dualtap/metrics/embedder.hpp"

namespace dualtap::metrics {

/// Lowercase, drop punctuation (everything that is not alphanumeric or
/// space), collapse whitespace runs, trim. Shared by the text metrics.
std::string normalize_text(const std::string& s);

/// normalize_text plus removal of the articles "a", "an", "the".
std::string normalize_answer(const std::string& s);

std::vector<std::string> whitespace_tokens(const std::string& s);

/// Character-level match score: LCS(pred, ref) / |ref| after normalization,
/// capped at 1. Rejects refs that are empty after normalization.
Real match_score(const std::string& pred, const std::string& ref);

/// Fraction of entries strictly greater than 0.6.
Real leakage_rate(const std::vector<Real>& ms_list);

/// Sentence-level BLEU-4: uniform weights, standard brevity penalty.
/// 1-gram precision is used raw; for n >= 2 a zero match count is smoothed
/// add-onection ((m+1)/(c+1), and orders with no possible n-grams count as 1).
/// Zero 1-gram precision gives BLEU 0. Empty ref is rejected.
Real bleu(const std::string& pred, const std::string& ref);

/// ROUGE-L F-measure (beta = 1) over whitespace tokens. Empty side gives 0.
Real rouge_l(const std::string& pred, const std::string& ref);

struct EmbeddingScores {
  Real bertscore_f1 = 0;
  Real cosine = 0;
};

/// Greedy token-level cosine-matching F1 (similarities clamped to [0,1])
/// plus whole-string embedding cosine. Zero-norm embeddings give cosine 0.
EmbeddingScores embedding_scores(const std::string& pred, const std::string& ref,
                                 const Embedder& embedder);

/// Normalized exact match rate; rejects length-mismatched inputs.
Real task_accuracy(const std::vector<std::string>& preds, const std::vector<std::string>& golds);

/// Aggregated seven-metric record for one (protector, target) pair.
struct MetricsRecord {
  std::optional<Real> acc;
  std::optional<Real> lr;
  std::optional<Real> ms_mean;
  std::optional<Real> bleu;
  std::optional<Real> rouge_l;
  std::optional<Real> bertscore_f1;
  std::optional<Real> cosine;
  int n_samples = 0;
  std::vector<Real> ms_list;  // per-sample match scores backing `lr`
};

}  // namespace dualtap::metrics
