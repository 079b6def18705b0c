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

#include "fidqa/eval.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "fidqa/io.h"
#include "fidqa/text.h"
#include "fidqa/unicode_tables.h"
#include "json.hpp"

namespace fidqa {

namespace {

bool is_punct(uint32_t cp) {
    int lo = 0;
    int hi = unicode::kNumPunctRanges - 1;
    while (lo <= hi) {
        const int mid = (lo + hi) / 2;
        const auto& r = unicode::kPunctRanges[mid];
        if (cp < r.lo) {
            hi = mid - 1;
        } else if (cp > r.hi) {
            lo = mid + 1;
        } else {
            return true;
        }
    }
    return false;
}

uint32_t to_lower_cp(uint32_t cp) {
    if (cp < 0x80) {
        return cp >= 'A' && cp <= 'Z' ? cp - 'A' + 'a' : cp;
    }
    int lo = 0;
    int hi = unicode::kNumLowerPairs - 1;
    while (lo <= hi) {
        const int mid = (lo + hi) / 2;
        const auto& p = unicode::kLowerPairs[mid];
        if (cp < p.from) {
            hi = mid - 1;
        } else if (cp > p.from) {
            lo = mid + 1;
        } else {
            return p.to;
        }
    }
    return cp;
}

void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Decode one codepoint; malformed bytes come back verbatim so they are
// preserved (they are neither punctuation nor whitespace).
uint32_t next_cp(const std::string& s, size_t& i, bool& malformed) {
    malformed = false;
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    uint32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        malformed = true;
        return b0;
    }
    if (i + static_cast<size_t>(len) > s.size()) {
        ++i;
        malformed = true;
        return b0;
    }
    for (int k = 1; k < len; ++k) {
        const auto bk = static_cast<unsigned char>(s[i + static_cast<size_t>(k)]);
        if ((bk & 0xC0) != 0x80) {
            ++i;
            malformed = true;
            return b0;
        }
        cp = (cp << 6) | (bk & 0x3F);
    }
    i += static_cast<size_t>(len);
    return cp;
}

}  // namespace

std::string normalize_answer(const std::string& s) {
    // Pass 1: lowercase, delete punctuation, map whitespace to ' '.
    std::string cleaned;
    cleaned.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        bool malformed = false;
        const uint32_t cp = next_cp(s, i, malformed);
        if (malformed) {
            cleaned.push_back(static_cast<char>(cp));
            continue;
        }
        const uint32_t lower = to_lower_cp(cp);
        if (is_punct(lower)) continue;
        if (is_unicode_space(lower)) {
            cleaned.push_back(' ');
        } else {
            append_utf8(cleaned, lower);
        }
    }

    // Pass 2: drop standalone articles, collapse whitespace, trim.
    std::string out;
    out.reserve(cleaned.size());
    size_t pos = 0;
    while (pos < cleaned.size()) {
        while (pos < cleaned.size() && cleaned[pos] == ' ') ++pos;
        const size_t start = pos;
        while (pos < cleaned.size() && cleaned[pos] != ' ') ++pos;
        if (pos == start) break;
        const std::string_view tok(&cleaned[start], pos - start);
        if (tok == "a" || tok == "an" || tok == "the") continue;
        if (!out.empty()) out.push_back(' ');
        out.append(tok);
    }
    return out;
}

int exact_match(const std::string& prediction,
                const std::vector<std::string>& gold_answers) {
    const std::string norm_pred = normalize_answer(prediction);
    for (const std::string& gold : gold_answers) {
        if (norm_pred == normalize_answer(gold)) return 1;
    }
    return 0;
}

EMReport score(const std::vector<Prediction>& predictions,
               const std::vector<ScoredExample>& examples) {
    std::unordered_map<std::string, const Prediction*> by_id;
    for (const Prediction& p : predictions) {
        if (!by_id.emplace(p.question_id, &p).second) {
            throw DataError("duplicate prediction for question_id " +
                            p.question_id);
        }
    }
    EMReport report;
    report.n_questions = examples.size();
    std::unordered_set<std::string> seen;
    for (const ScoredExample& ex : examples) {
        if (!seen.insert(ex.question_id).second) {
            throw DataError("duplicate question_id in examples: " +
                            ex.question_id);
        }
        const auto it = by_id.find(ex.question_id);
        if (it == by_id.end()) {
            throw DataError("missing prediction for question_id " +
                            ex.question_id);
        }
        const bool ok = exact_match(it->second->answer, ex.gold_answers) == 1;
        if (ok) ++report.n_correct;
        report.verdicts.push_back({ex.question_id, ok});
    }
    report.em = report.n_questions == 0
                    ? 0.0
                    : static_cast<double>(report.n_correct) /
                          static_cast<double>(report.n_questions);
    return report;
}

std::string EMReport::summary_line() const {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "EM: %.2f (%zu/%zu)", em * 100.0,
                  n_correct, n_questions);
    return buf;
}

void write_predictions_jsonl(const std::string& path,
                             const std::vector<Prediction>& predictions) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path);
    for (const Prediction& p : predictions) {
        nlohmann::json j;
        j["question_id"] = p.question_id;
        j["answer"] = p.answer;
        out << j.dump() << '\n';
    }
}

std::vector<Prediction> read_predictions_jsonl(const std::string& path) {
    std::vector<Prediction> preds;
    for_each_jsonl(path, [&](size_t line, const nlohmann::json& j) {
        Prediction p;
        p.question_id = jsonl_string(j, "question_id", line);
        p.answer = jsonl_string(j, "answer", line);
        preds.push_back(std::move(p));
    });
    return preds;
}

std::string report_to_json(const EMReport& report) {
    nlohmann::json j;
    j["n_questions"] = report.n_questions;
    j["n_correct"] = report.n_correct;
    j["em"] = report.em;
    nlohmann::json verdicts = nlohmann::json::array();
    for (const Verdict& v : report.verdicts) {
        verdicts.push_back(
            {{"question_id", v.question_id}, {"correct", v.correct}});
    }
    j["verdicts"] = std::move(verdicts);
    return j.dump(2);
}

}  // namespace fidqa
