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
#include <string_view>
#include <vector>

namespace fidqa {

/// Words are maximal runs of non-whitespace after Unicode-whitespace
/// splitting (UTF-8 aware). Invalid UTF-8 bytes count as word content.
std::vector<std::string> split_words(std::string_view text);

/// Index/model analyzer: byte-level lowercasing of ASCII letters, split on
/// anything outside [a-z0-9]. No stemming, no stopwords. Non-ASCII bytes
/// act as separators.
std::vector<std::string> analyze(std::string_view text);

/// ASCII-only lowercasing; bytes >= 0x80 pass through unchanged.
std::string to_lower_ascii(std::string_view s);

bool is_unicode_space(uint32_t cp);

/// FNV-1a 64-bit over bytes, seeded by mixing `seed` (splitmix64 finalizer)
/// into the offset basis. Stable across platforms.
uint64_t fnv1a64(std::string_view bytes, uint64_t seed = 0);

}  // namespace fidqa
