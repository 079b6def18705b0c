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
#include <string>
#include <unordered_map>
#include <vector>

#include "fidqa/corpus.h"
#include "fidqa/retrieval.h"

namespace fidqa {

struct Bm25Params {
    double k1 = 1.2;  // Lucene defaults
    double b = 0.75;
};

struct Posting {
    uint32_t ordinal;  // passage ordinal, ascending within a list
    uint32_t tf;       // >= 1
};

/// Okapi BM25 over an in-memory inverted index. Passages are analyzed as
/// `title + " " + text`; the index is immutable after build and safe for
/// concurrent read-only queries.
///
/// idf(t)   = ln(1 + (N - df + 0.5) / (df + 0.5))          (non-negative)
/// score(p) = sum over distinct matching query terms of
///            idf(t) * tf*(k1+1) / (tf + k1*(1 - b + b*dl/avgdl))
class InvertedIndex {
  public:
    /// Builds from passages in stream order. Throws DataError on an empty
    /// corpus. Deterministic for a given input order.
    static InvertedIndex build(const std::vector<Passage>& passages,
                               Bm25Params params = {});

    size_t num_passages() const { return doc_len_.size(); }
    double avgdl() const { return avgdl_; }
    const Bm25Params& params() const { return params_; }
    const std::string& passage_id(size_t ordinal) const {
        return passage_ids_[ordinal];
    }

    /// Document frequency; 0 for terms absent from the index.
    uint32_t df(const std::string& term) const;
    uint32_t doc_len(size_t ordinal) const { return doc_len_[ordinal]; }
    const std::vector<Posting>* postings(const std::string& term) const;

    double idf(const std::string& term) const;

    /// BM25 score of one passage against analyzed query terms. Repeated
    /// query terms count once; terms absent from the index contribute 0.
    double score(const std::vector<std::string>& query_terms,
                 size_t passage_ordinal) const;

    /// Top-k by BM25 over analyze(question). Positive-score passages are
    /// ranked (score desc, passage_id asc); if fewer than k score > 0, the
    /// result is padded with zero-score passages by ascending ordinal, so
    /// the hit count is always min(k, N). Throws std::invalid_argument for
    /// k < 1.
    RetrievalResult retrieve(const std::string& question_id,
                             const std::string& question, size_t k) const;

    // Single-file persistence; layout documented in docs/formats.md.
    void save(const std::string& path) const;
    static InvertedIndex load(const std::string& path);

  private:
    InvertedIndex() = default;

    Bm25Params params_;
    double avgdl_ = 0.0;
    std::vector<uint32_t> doc_len_;
    std::vector<std::string> passage_ids_;
    std::unordered_map<std::string, std::vector<Posting>> postings_;
};

}  // namespace fidqa
