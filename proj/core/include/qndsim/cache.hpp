// Copyright 2026 The qndsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QNDSIM_CACHE_HPP_
#define QNDSIM_CACHE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace qndsim {

// SHA-256 digest as lowercase hex.
std::string sha256_hex(std::string_view bytes);

// Content-addressed single-writer/multi-reader file cache.  Entries are
// published by writing to a temporary file and atomically renaming it, so a
// concurrent reader never observes a partial entry.  A corrupt entry is
// reported as a miss (the caller recomputes and overwrites).
class ResultCache {
 public:
  ResultCache() = default;  // disabled
  explicit ResultCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }

  // Contents stored under the key's digest, or nullopt on miss.
  std::optional<std::string> get(const std::string& canonical_key) const;

  void put(const std::string& canonical_key, std::string_view contents) const;

  static std::string digest(const std::string& canonical_key) {
    return sha256_hex(canonical_key);
  }

  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path entry_path(const std::string& canonical_key) const;
  std::filesystem::path dir_;
};

}  // namespace qndsim

#endif  // QNDSIM_CACHE_HPP_
