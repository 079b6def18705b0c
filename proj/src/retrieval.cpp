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

#include "fidqa/retrieval.h"

#include <fstream>

#include "fidqa/io.h"
#include "json.hpp"

namespace fidqa {

void write_retrieval_jsonl(const std::string& path,
                           const std::vector<RetrievalResult>& results) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path);
    for (const RetrievalResult& r : results) {
        nlohmann::json j;
        j["question_id"] = r.question_id;
        nlohmann::json hits = nlohmann::json::array();
        for (const Hit& h : r.hits) {
            hits.push_back({{"passage_id", h.passage_id}, {"score", h.score}});
        }
        j["hits"] = std::move(hits);
        out << j.dump() << '\n';
    }
}

std::vector<RetrievalResult> read_retrieval_jsonl(const std::string& path) {
    std::vector<RetrievalResult> results;
    for_each_jsonl(path, [&](size_t line, const nlohmann::json& j) {
        RetrievalResult r;
        r.question_id = jsonl_string(j, "question_id", line);
        const auto it = j.find("hits");
        if (it == j.end() || !it->is_array()) {
            throw DataError("line " + std::to_string(line) +
                            ": missing \"hits\" array");
        }
        for (const auto& hj : *it) {
            Hit h;
            h.passage_id = jsonl_string(hj, "passage_id", line);
            const auto sj = hj.find("score");
            if (sj == hj.end() || !sj->is_number()) {
                throw DataError("line " + std::to_string(line) +
                                ": hit without numeric score");
            }
            h.score = sj->get<double>();
            r.hits.push_back(std::move(h));
        }
        results.push_back(std::move(r));
    });
    return results;
}

RetrievedTable to_table(const std::vector<RetrievalResult>& results) {
    RetrievedTable table;
    table.reserve(results.size());
    for (const RetrievalResult& r : results) {
        if (!table.emplace(r.question_id, r.hits).second) {
            throw DataError("duplicate question_id in retrieval results: " +
                            r.question_id);
        }
    }
    return table;
}

}  // namespace fidqa
