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
#include <vector>

namespace fidqa {

struct Prediction {
    std::string question_id;
    std::string answer;
};

struct Verdict {
    std::string question_id;
    bool correct = false;
};

struct EMReport {
    size_t n_questions = 0;
    size_t n_correct = 0;
    double em = 0.0;  // n_correct / n_questions
    std::vector<Verdict> verdicts;

    /// "EM: <percent, 2 decimals> (<correct>/<total>)"
    std::string summary_line() const;
};

/// Answer normalization: lowercase (Unicode simple mapping), delete
/// punctuation (Unicode classes Pc/Pd/Pe/Pf/Pi/Po/Ps), drop standalone
/// articles a/an/the, collapse whitespace runs to single spaces, trim.
/// Punctuation is deleted (not replaced by a space) and article removal
/// runs after it, matching the published metric's order. Idempotent.
std::string normalize_answer(const std::string& s);

/// 1 iff the normalized prediction equals some normalized gold answer.
/// An empty gold list scores 0.
int exact_match(const std::string& prediction,
                const std::vector<std::string>& gold_answers);

struct ScoredExample {
    std::string question_id;
    std::vector<std::string> gold_answers;
};

/// Aggregates exact_match over questions. Every example id must have
/// exactly one prediction; duplicates or gaps are DataError, not zeros.
EMReport score(const std::vector<Prediction>& predictions,
               const std::vector<ScoredExample>& examples);

// JSON-lines predictions: {"question_id":..., "answer":...}
void write_predictions_jsonl(const std::string& path,
                             const std::vector<Prediction>& predictions);
std::vector<Prediction> read_predictions_jsonl(const std::string& path);

/// Report as a single JSON object (includes per-question verdicts).
std::string report_to_json(const EMReport& report);

}  // namespace fidqa
