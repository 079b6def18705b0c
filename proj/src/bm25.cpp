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

#include "fidqa/bm25.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <stdexcept>

#include "fidqa/io.h"
#include "fidqa/text.h"

namespace fidqa {

namespace {

constexpr char kMagic[8] = {'F', 'I', 'D', 'B', 'M', '2', '5', '\0'};
constexpr uint32_t kFormatVersion = 1;

// Sorted, de-duplicated query terms: fixes the summation order so scores
// are bit-exact across runs.
std::vector<std::string> unique_terms(std::vector<std::string> terms) {
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    return terms;
}

}  // namespace

InvertedIndex InvertedIndex::build(const std::vector<Passage>& passages,
                                   Bm25Params params) {
    if (passages.empty()) throw DataError("cannot index an empty corpus");
    InvertedIndex idx;
    idx.params_ = params;
    idx.doc_len_.reserve(passages.size());
    idx.passage_ids_.reserve(passages.size());

    uint64_t total_len = 0;
    for (size_t ord = 0; ord < passages.size(); ++ord) {
        const Passage& p = passages[ord];
        const std::vector<std::string> terms = analyze(p.title + " " + p.text);
        idx.passage_ids_.push_back(p.id);
        idx.doc_len_.push_back(static_cast<uint32_t>(terms.size()));
        total_len += terms.size();

        std::map<std::string, uint32_t> tf;  // ordered for determinism
        for (const std::string& t : terms) ++tf[t];
        for (const auto& [term, freq] : tf) {
            // Build order is ascending ordinal, so lists stay sorted.
            idx.postings_[term].push_back(
                {static_cast<uint32_t>(ord), freq});
        }
    }
    idx.avgdl_ = static_cast<double>(total_len) /
                 static_cast<double>(passages.size());
    return idx;
}

uint32_t InvertedIndex::df(const std::string& term) const {
    const auto it = postings_.find(term);
    return it == postings_.end() ? 0
                                 : static_cast<uint32_t>(it->second.size());
}

const std::vector<Posting>* InvertedIndex::postings(
    const std::string& term) const {
    const auto it = postings_.find(term);
    return it == postings_.end() ? nullptr : &it->second;
}

double InvertedIndex::idf(const std::string& term) const {
    const double n = static_cast<double>(num_passages());
    const double d = static_cast<double>(df(term));
    return std::log(1.0 + (n - d + 0.5) / (d + 0.5));
}

double InvertedIndex::score(const std::vector<std::string>& query_terms,
                            size_t passage_ordinal) const {
    if (passage_ordinal >= num_passages()) {
        throw std::invalid_argument("passage ordinal out of range");
    }
    const double dl = doc_len_[passage_ordinal];
    double total = 0.0;
    for (const std::string& term : unique_terms(query_terms)) {
        const std::vector<Posting>* list = postings(term);
        if (list == nullptr) continue;
        const auto it = std::lower_bound(
            list->begin(), list->end(), passage_ordinal,
            [](const Posting& p, size_t ord) { return p.ordinal < ord; });
        if (it == list->end() || it->ordinal != passage_ordinal) continue;
        const double tf = it->tf;
        const double norm =
            tf + params_.k1 * (1.0 - params_.b + params_.b * dl / avgdl_);
        total += idf(term) * tf * (params_.k1 + 1.0) / norm;
    }
    return total;
}

RetrievalResult InvertedIndex::retrieve(const std::string& question_id,
                                        const std::string& question,
                                        size_t k) const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const std::vector<std::string> terms = unique_terms(analyze(question));

    // Accumulate term-at-a-time; ordinal-indexed so the order of addition
    // per passage is the sorted term order.
    std::vector<double> acc(num_passages(), 0.0);
    std::vector<uint8_t> touched(num_passages(), 0);
    for (const std::string& term : terms) {
        const std::vector<Posting>* list = postings(term);
        if (list == nullptr) continue;
        const double term_idf = idf(term);
        for (const Posting& p : *list) {
            const double tf = p.tf;
            const double dl = doc_len_[p.ordinal];
            const double norm =
                tf + params_.k1 * (1.0 - params_.b + params_.b * dl / avgdl_);
            acc[p.ordinal] += term_idf * tf * (params_.k1 + 1.0) / norm;
            touched[p.ordinal] = 1;
        }
    }

    std::vector<size_t> matched;
    for (size_t ord = 0; ord < acc.size(); ++ord) {
        if (touched[ord] && acc[ord] > 0.0) matched.push_back(ord);
    }
    std::sort(matched.begin(), matched.end(), [&](size_t a, size_t b) {
        if (acc[a] != acc[b]) return acc[a] > acc[b];
        return passage_ids_[a] < passage_ids_[b];
    });

    const size_t want = std::min(k, num_passages());
    RetrievalResult result;
    result.question_id = question_id;
    for (size_t i = 0; i < matched.size() && result.hits.size() < want; ++i) {
        result.hits.push_back({passage_ids_[matched[i]], acc[matched[i]]});
    }
    // Pad with zero-score passages by ascending ordinal up to min(k, N).
    for (size_t ord = 0; ord < acc.size() && result.hits.size() < want;
         ++ord) {
        if (!touched[ord] || acc[ord] <= 0.0) {
            result.hits.push_back({passage_ids_[ord], 0.0});
        }
    }
    return result;
}

void InvertedIndex::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path);
    out.write(kMagic, sizeof(kMagic));
    put_u32(out, kFormatVersion);
    put_u64(out, num_passages());
    put_f64(out, params_.k1);
    put_f64(out, params_.b);
    put_f64(out, avgdl_);
    for (const uint32_t dl : doc_len_) put_u32(out, dl);
    for (const std::string& id : passage_ids_) put_bytes(out, id);

    // Terms sorted so the file bytes are deterministic.
    std::vector<const std::string*> terms;
    terms.reserve(postings_.size());
    for (const auto& [term, list] : postings_) terms.push_back(&term);
    std::sort(terms.begin(), terms.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });

    put_u64(out, terms.size());
    for (const std::string* term : terms) {
        const std::vector<Posting>& list = postings_.at(*term);
        put_bytes(out, *term);
        put_u64(out, list.size());
        for (const Posting& p : list) {
            put_u32(out, p.ordinal);
            put_u32(out, p.tf);
        }
    }
    if (!out) throw DataError("short write to " + path);
}

InvertedIndex InvertedIndex::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw DataError(path + " is not a BM25 index file");
    }
    const uint32_t version = get_u32(in);
    if (version != kFormatVersion) {
        throw DataError(path + ": unsupported index format version " +
                        std::to_string(version));
    }
    InvertedIndex idx;
    const uint64_t n = get_u64(in);
    idx.params_.k1 = get_f64(in);
    idx.params_.b = get_f64(in);
    idx.avgdl_ = get_f64(in);
    idx.doc_len_.resize(n);
    for (uint64_t i = 0; i < n; ++i) idx.doc_len_[i] = get_u32(in);
    idx.passage_ids_.resize(n);
    for (uint64_t i = 0; i < n; ++i) idx.passage_ids_[i] = get_bytes(in);
    const uint64_t n_terms = get_u64(in);
    idx.postings_.reserve(n_terms);
    for (uint64_t t = 0; t < n_terms; ++t) {
        const std::string term = get_bytes(in);
        const uint64_t len = get_u64(in);
        std::vector<Posting> list(len);
        for (uint64_t i = 0; i < len; ++i) {
            list[i].ordinal = get_u32(in);
            list[i].tf = get_u32(in);
        }
        idx.postings_.emplace(term, std::move(list));
    }
    return idx;
}

}  // namespace fidqa
