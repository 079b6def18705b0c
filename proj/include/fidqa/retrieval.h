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

struct Hit {
    std::string passage_id;
    double score = 0.0;
};

/// Ranked passages for one question: scores non-increasing, ties broken by
/// ascending passage_id, no duplicates, at most the requested k entries.
struct RetrievalResult {
    std::string question_id;
    std::vector<Hit> hits;
};

// JSON-lines form: {"question_id":..., "hits":[{"passage_id":...,"score":...}]}
void write_retrieval_jsonl(const std::string& path,
                           const std::vector<RetrievalResult>& results);
std::vector<RetrievalResult> read_retrieval_jsonl(const std::string& path);

/// question_id -> hits, for the trainer and prediction stages.
using RetrievedTable = std::unordered_map<std::string, std::vector<Hit>>;

RetrievedTable to_table(const std::vector<RetrievalResult>& results);

}  // namespace fidqa
