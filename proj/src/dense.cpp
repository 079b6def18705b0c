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

#include "fidqa/dense.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "fidqa/io.h"
#include "fidqa/text.h"

namespace fidqa {

namespace {

constexpr char kMagic[8] = {'F', 'I', 'D', 'D', 'N', 'S', 'E', '\0'};
constexpr uint32_t kFormatVersion = 1;

}  // namespace

std::vector<float> hashed_bow_embed(const std::string& text, int dim,
                                    uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
    std::vector<float> v(static_cast<size_t>(dim), 0.0f);
    bool any = false;
    for (const std::string& term : analyze(text)) {
        const uint64_t h = fnv1a64(term, seed);
        const size_t idx = h % static_cast<uint64_t>(dim);
        v[idx] += (h >> 63) ? -1.0f : 1.0f;
        any = true;
    }
    if (!any) return v;  // zero vector stays unnormalized
    double norm_sq = 0.0;
    for (const float x : v) norm_sq += static_cast<double>(x) * x;
    if (norm_sq == 0.0) return v;  // signs can cancel exactly
    const float inv = static_cast<float>(1.0 / std::sqrt(norm_sq));
    for (float& x : v) x *= inv;
    return v;
}

HashedBowProvider::HashedBowProvider(int dim, uint64_t seed)
    : dim_(dim), seed_(seed) {
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
}

std::vector<float> HashedBowProvider::embed(const std::string& text) const {
    return hashed_bow_embed(text, dim_, seed_);
}

std::vector<float> HashedBowProvider::embed_question(
    const std::string& text) const {
    return embed(text);
}

std::vector<float> HashedBowProvider::embed_passage(
    const std::string& title, const std::string& text) const {
    return embed(title + " " + text);
}

DenseIndex DenseIndex::build(const std::vector<Passage>& passages,
                             const EmbeddingProvider& provider) {
    if (passages.empty()) throw DataError("cannot index an empty corpus");
    DenseIndex idx;
    idx.dim_ = provider.dim();
    idx.provider_name_ = provider.name();
    idx.provider_seed_ = 0;
    if (const auto* hb = dynamic_cast<const HashedBowProvider*>(&provider)) {
        idx.provider_seed_ = hb->seed();
    }
    idx.ids_.reserve(passages.size());
    idx.vectors_.reserve(passages.size() * static_cast<size_t>(idx.dim_));
    for (const Passage& p : passages) {
        const std::vector<float> v = provider.embed_passage(p.title, p.text);
        if (static_cast<int>(v.size()) != idx.dim_) {
            throw NumericError("provider returned a vector of wrong length");
        }
        idx.ids_.push_back(p.id);
        idx.vectors_.insert(idx.vectors_.end(), v.begin(), v.end());
    }
    return idx;
}

RetrievalResult DenseIndex::retrieve(const std::string& question_id,
                                     const std::string& question,
                                     const EmbeddingProvider& provider,
                                     size_t k) const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (provider.dim() != dim_) {
        throw std::invalid_argument(
            "provider dim " + std::to_string(provider.dim()) +
            " does not match index dim " + std::to_string(dim_));
    }
    const std::vector<float> q = provider.embed_question(question);

    // Exhaustive scan; double accumulator in fixed order keeps the scores
    // bit-exact run to run.
    std::vector<std::pair<double, size_t>> scored(num_passages());
    for (size_t row = 0; row < num_passages(); ++row) {
        const float* v = &vectors_[row * static_cast<size_t>(dim_)];
        double dot = 0.0;
        for (int j = 0; j < dim_; ++j) {
            dot += static_cast<double>(q[static_cast<size_t>(j)]) * v[j];
        }
        scored[row] = {dot, row};
    }
    std::sort(scored.begin(), scored.end(),
              [&](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first > b.first;
                  return ids_[a.second] < ids_[b.second];
              });

    RetrievalResult result;
    result.question_id = question_id;
    const size_t want = std::min(k, num_passages());
    result.hits.reserve(want);
    for (size_t i = 0; i < want; ++i) {
        result.hits.push_back({ids_[scored[i].second], scored[i].first});
    }
    return result;
}

void DenseIndex::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path);
    out.write(kMagic, sizeof(kMagic));
    put_u32(out, kFormatVersion);
    put_u64(out, num_passages());
    put_u32(out, static_cast<uint32_t>(dim_));
    put_bytes(out, provider_name_);
    put_u64(out, provider_seed_);
    put_f32_array(out, vectors_.data(), vectors_.size());
    for (const std::string& id : ids_) put_bytes(out, id);
    if (!out) throw DataError("short write to " + path);
}

DenseIndex DenseIndex::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw DataError(path + " is not a dense index file");
    }
    const uint32_t version = get_u32(in);
    if (version != kFormatVersion) {
        throw DataError(path + ": unsupported index format version " +
                        std::to_string(version));
    }
    DenseIndex idx;
    const uint64_t n = get_u64(in);
    idx.dim_ = static_cast<int>(get_u32(in));
    idx.provider_name_ = get_bytes(in);
    idx.provider_seed_ = get_u64(in);
    idx.vectors_.resize(n * static_cast<size_t>(idx.dim_));
    get_f32_array(in, idx.vectors_.data(), idx.vectors_.size());
    idx.ids_.resize(n);
    for (uint64_t i = 0; i < n; ++i) idx.ids_[i] = get_bytes(in);
    return idx;
}

}  // namespace fidqa
