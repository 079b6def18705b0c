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
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace fidqa {

/// Malformed or unreadable input. CLI maps this to exit code 2.
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Non-finite loss/gradient or other numeric breakdown. CLI exit code 3.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Streams a JSON-lines file; calls fn(line_number, parsed) per non-empty
/// line (line numbers are 1-based). Throws DataError naming the line on
/// parse failure, or the path if unreadable.
void for_each_jsonl(const std::string& path,
                    const std::function<void(size_t, const nlohmann::json&)>& fn);

/// Fetches a required string field; DataError names the line and key.
std::string jsonl_string(const nlohmann::json& j, const std::string& key,
                         size_t line);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

/// FNV-1a 64 of the file contents, as a 16-digit hex string (manifests).
std::string file_hash_hex(const std::string& path);

// Little-endian binary primitives for the index and checkpoint formats.
// The in-memory byte order is assumed little-endian (asserted at startup
// of the save/load paths).
void put_u32(std::ostream& os, uint32_t v);
void put_u64(std::ostream& os, uint64_t v);
void put_f32(std::ostream& os, float v);
void put_f64(std::ostream& os, double v);
void put_bytes(std::ostream& os, const std::string& s);  // u32 length prefix

uint32_t get_u32(std::istream& is);
uint64_t get_u64(std::istream& is);
float get_f32(std::istream& is);
double get_f64(std::istream& is);
std::string get_bytes(std::istream& is);

void put_f32_array(std::ostream& os, const float* data, size_t n);
void get_f32_array(std::istream& is, float* data, size_t n);

}  // namespace fidqa
