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

#include "fidqa/corpus.h"

#include <fstream>
#include <stdexcept>

#include "fidqa/io.h"
#include "fidqa/text.h"
#include "json.hpp"

namespace fidqa {

std::vector<Passage> chunk_document(const Document& doc,
                                    int words_per_passage) {
    if (words_per_passage < 1) {
        throw std::invalid_argument("words_per_passage must be >= 1");
    }
    const std::vector<std::string> words = split_words(doc.text);
    std::vector<Passage> out;
    for (size_t start = 0; start < words.size();
         start += static_cast<size_t>(words_per_passage)) {
        const size_t end =
            std::min(words.size(), start + static_cast<size_t>(words_per_passage));
        Passage p;
        p.id = doc.id + "#" + std::to_string(out.size());
        p.doc_id = doc.id;
        p.title = doc.title;
        p.word_count = static_cast<int>(end - start);
        std::string text;
        for (size_t i = start; i < end; ++i) {
            if (i > start) text.push_back(' ');
            text += words[i];
        }
        p.text = std::move(text);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Document> read_documents_jsonl(const std::string& path) {
    std::vector<Document> docs;
    for_each_jsonl(path, [&](size_t line, const nlohmann::json& j) {
        Document d;
        d.id = jsonl_string(j, "id", line);
        d.title = jsonl_string(j, "title", line);
        d.text = jsonl_string(j, "text", line);
        if (d.id.empty()) {
            throw DataError("line " + std::to_string(line) + ": empty id");
        }
        docs.push_back(std::move(d));
    });
    return docs;
}

std::vector<Passage> read_passages_jsonl(const std::string& path) {
    std::vector<Passage> passages;
    for_each_jsonl(path, [&](size_t line, const nlohmann::json& j) {
        Passage p;
        p.id = jsonl_string(j, "id", line);
        p.doc_id = jsonl_string(j, "doc_id", line);
        p.title = jsonl_string(j, "title", line);
        p.text = jsonl_string(j, "text", line);
        p.word_count = static_cast<int>(split_words(p.text).size());
        passages.push_back(std::move(p));
    });
    return passages;
}

void write_passages_jsonl(const std::string& path,
                          const std::vector<Passage>& passages) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path);
    for (const Passage& p : passages) {
        nlohmann::json j;
        j["id"] = p.id;
        j["doc_id"] = p.doc_id;
        j["title"] = p.title;
        j["text"] = p.text;
        out << j.dump() << '\n';
    }
}

PassageStore::PassageStore(std::vector<Passage> passages)
    : passages_(std::move(passages)) {
    by_id_.reserve(passages_.size());
    for (size_t i = 0; i < passages_.size(); ++i) {
        by_id_.emplace(passages_[i].id, i);
    }
}

const Passage& PassageStore::get(const std::string& id) const {
    const auto it = by_id_.find(id);
    if (it == by_id_.end()) throw DataError("unknown passage id: " + id);
    return passages_[it->second];
}

}  // namespace fidqa
