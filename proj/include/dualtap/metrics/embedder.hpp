#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "dualtap/core/types.hpp"

namespace dualtap::metrics {

/// Text embedding backend for the semantic-level metrics. The default is a
/// deterministic hashed character-n-gram vectorizer so no model downloads are
/// ever needed; contextual embedders can be plugged in through the registry.
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::string id() const = 0;
  virtual int dim() const = 0;
  virtual VectorR embed(const std::string& text) const = 0;
};

class HashedNgramEmbedder final : public Embedder {
 public:
  explicit HashedNgramEmbedder(int dim = 256, int max_n = 3) : dim_(dim), max_n_(max_n) {}
  std::string id() const override { return "hashed-ngram-v1"; }
  int dim() const override { return dim_; }
  VectorR embed(const std::string& text) const override;

 private:
  int dim_;
  int max_n_;
};

using EmbedderFactory = std::function<std::unique_ptr<Embedder>()>;
std::map<std::string, EmbedderFactory>& embedder_registry();
std::unique_ptr<Embedder> make_embedder(const std::string& name);

}  // namespace dualtap::metrics
