// Copyright 2026 The biasaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIASAUDIT_HASH_HPP_
#define BIASAUDIT_HASH_HPP_

#include <filesystem>
#include <string>
#include <string_view>

namespace biasaudit::hash {

// Lowercase hex SHA-256 digest of the bytes.
std::string sha256_hex(std::string_view bytes);

// Digest of a file's contents. Throws IoError if unreadable.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace biasaudit::hash

#endif  // BIASAUDIT_HASH_HPP_
