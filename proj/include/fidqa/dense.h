/*
 * Copyright (c) 2026, the fidqa authors.  All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fidqa/corpus.h"
#include "fidqa/retrieval.h"

namespace fidqa {

/// Fixed-dimension embedding source. Implementations must be deterministic
/// for fixed inputs and always return vectors of length dim().
class EmbeddingProvider {
  public:
    virtual ~EmbeddingProvider() = default;
    virtual const std::string& name() const = 0;
    virtual int dim() const = 0;
    virtual std::vector<float> embed_question(const std::string& text) const = 0;
    virtual std::vector<float> embed_passage(const std::string& title,
                                             const std::string& text) const = 0;
};

/// Baseline embedder: for each analyzed term, add +1 or -1 (sign from bit
/// 63 of the seeded FNV-1a hash) at index hash % dim, then L2-normalize.
/// A text with no terms stays the zero vector. Passages embed
/// `title + " " + text`, mirroring the BM25 analyzed field.
class HashedBowProvider : public EmbeddingProvider {
  public:
    HashedBowProvider(int dim, uint64_t seed);

    const std::string& name() const override { return name_; }
    int dim() const override { return dim_; }
    uint64_t seed() const { return seed_; }
    std::vector<float> embed_question(const std::string& text) const override;
    std::vector<float> embed_passage(const std::string& title,
                                     const std::string& text) const override;

  private:
    std::vector<float> embed(const std::string& text) const;

    std::string name_ = "hashed_bow";
    int dim_;
    uint64_t seed_;
};

std::vector<float> hashed_bow_embed(const std::string& text, int dim,
                                    uint64_t seed);

/// Exact dot-product search over row-major passage vectors. Immutable after
/// build; concurrent queries are safe.
class DenseIndex {
  public:
    static DenseIndex build(const std::vector<Passage>& passages,
                            const EmbeddingProvider& provider);

    int dim() const { return dim_; }
    size_t num_passages() const { return ids_.size(); }
    const std::string& provider_name() const { return provider_name_; }
    uint64_t provider_seed() const { return provider_seed_; }

    /// Top-k by dot product, exhaustive scan; ties broken by ascending
    /// passage_id; always returns min(k, n) hits. Throws on dimension
    /// mismatch or k < 1.
    RetrievalResult retrieve(const std::string& question_id,
                             const std::string& question,
                             const EmbeddingProvider& provider,
                             size_t k) const;

    // Persistence: header (version, n, dim, provider name+seed), row-major
    // little-endian f32 vectors, id table. See docs/formats.md.
    void save(const std::string& path) const;
    static DenseIndex load(const std::string& path);

  private:
    DenseIndex() = default;

    int dim_ = 0;
    std::string provider_name_;
    uint64_t provider_seed_ = 0;
    std::vector<float> vectors_;  // n x dim row-major
    std::vector<std::string> ids_;
};

}  // namespace fidqa
