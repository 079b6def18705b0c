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

#include "fidqa/io.h"

#include <bit>
#include <cstring>
#include <sstream>

#include "fidqa/text.h"

static_assert(std::endian::native == std::endian::little,
              "index/checkpoint formats are little-endian; big-endian hosts "
              "would need byte swapping here");

namespace fidqa {

void for_each_jsonl(const std::string& path,
                    const std::function<void(size_t, const nlohmann::json&)>& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            throw DataError(path + ": malformed JSON at line " +
                            std::to_string(line_no));
        }
        fn(line_no, j);
    }
}

std::string jsonl_string(const nlohmann::json& j, const std::string& key,
                         size_t line) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
        throw DataError("line " + std::to_string(line) +
                        ": missing or non-string field \"" + key + "\"");
    }
    return it->get<std::string>();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw DataError("short write to " + path);
}

std::string file_hash_hex(const std::string& path) {
    const uint64_t h = fnv1a64(read_file(path));
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

namespace {

template <typename T>
void put_raw(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get_raw(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw DataError("unexpected end of binary stream");
    return v;
}

}  // namespace

void put_u32(std::ostream& os, uint32_t v) { put_raw(os, v); }
void put_u64(std::ostream& os, uint64_t v) { put_raw(os, v); }
void put_f32(std::ostream& os, float v) { put_raw(os, v); }
void put_f64(std::ostream& os, double v) { put_raw(os, v); }

void put_bytes(std::ostream& os, const std::string& s) {
    put_u32(os, static_cast<uint32_t>(s.size()));
    os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

uint32_t get_u32(std::istream& is) { return get_raw<uint32_t>(is); }
uint64_t get_u64(std::istream& is) { return get_raw<uint64_t>(is); }
float get_f32(std::istream& is) { return get_raw<float>(is); }
double get_f64(std::istream& is) { return get_raw<double>(is); }

std::string get_bytes(std::istream& is) {
    const uint32_t n = get_u32(is);
    std::string s(n, '\0');
    is.read(s.data(), n);
    if (!is) throw DataError("unexpected end of binary stream");
    return s;
}

void put_f32_array(std::ostream& os, const float* data, size_t n) {
    os.write(reinterpret_cast<const char*>(data),
             static_cast<std::streamsize>(n * sizeof(float)));
}

void get_f32_array(std::istream& is, float* data, size_t n) {
    is.read(reinterpret_cast<char*>(data),
            static_cast<std::streamsize>(n * sizeof(float)));
    if (!is) throw DataError("unexpected end of binary stream");
}

}  // namespace fidqa
