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

#include <string>
#include <unordered_map>
#include <vector>

namespace fidqa {

struct Document {
    std::string id;     // non-empty, unique within a corpus file
    std::string title;  // may be empty
    std::string text;
};

/// The retrieval and reading unit: a fixed-size word chunk of a document.
/// Text is the word slice re-joined with single spaces (original whitespace
/// is discarded), id is "<doc_id>#<chunk_index>" with a zero-based index.
struct Passage {
    std::string id;
    std::string doc_id;
    std::string title;
    std::string text;
    int word_count = 0;
};

/// Splits a document into contiguous, non-overlapping passages of
/// `words_per_passage` words each; the last passage keeps the remainder
/// (1..words_per_passage words). Zero words yields zero passages.
/// Throws std::invalid_argument for words_per_passage < 1.
std::vector<Passage> chunk_document(const Document& doc,
                                    int words_per_passage = 100);

// JSON-lines IO. Documents carry keys id/title/text, passages
// id/doc_id/title/text. UTF-8 throughout.
std::vector<Document> read_documents_jsonl(const std::string& path);
std::vector<Passage> read_passages_jsonl(const std::string& path);
void write_passages_jsonl(const std::string& path,
                          const std::vector<Passage>& passages);

/// Passage lookup by id for the reader stages.
class PassageStore {
  public:
    explicit PassageStore(std::vector<Passage> passages);

    const Passage& get(const std::string& id) const;  // DataError if absent
    size_t size() const { return passages_.size(); }
    const std::vector<Passage>& all() const { return passages_; }

  private:
    std::vector<Passage> passages_;
    std::unordered_map<std::string, size_t> by_id_;
};

}  // namespace fidqa
