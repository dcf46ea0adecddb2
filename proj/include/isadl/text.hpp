// Copyright 2026 The isadl Authors
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

#ifndef ISADL_TEXT_HPP_
#define ISADL_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace isadl {

std::string lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_ws(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
bool starts_with_upper(std::string_view s);
bool is_integer_token(std::string_view s);

// First letter uppercased, remainder preserved.
std::string capitalize(std::string_view s);

// Spelled-out form of small non-negative integers ("5" -> "five").
std::string number_to_words(long n);

// Inverse of number_to_words for the supported range; -1 if not a number word.
long words_to_number(std::string_view w);

// Ordinal word to rank ("third" -> 3); -1 if not an ordinal.
long ordinal_to_number(std::string_view w);

}  // namespace isadl

#endif  // ISADL_TEXT_HPP_
