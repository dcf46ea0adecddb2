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

#include "isadl/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace isadl {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t p = s.find(sep, start);
    if (p == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, p - start));
    start = p + 1;
  }
  return out;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

bool starts_with_upper(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string capitalize(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = std::toupper(static_cast<unsigned char>(out[0]));
  return out;
}

namespace {

const char* kOnes[] = {"zero",    "one",      "two",      "three",
                       "four",    "five",     "six",      "seven",
                       "eight",   "nine",     "ten",      "eleven",
                       "twelve",  "thirteen", "fourteen", "fifteen",
                       "sixteen", "seventeen", "eighteen", "nineteen"};
const char* kTens[] = {"",      "",      "twenty",  "thirty", "forty",
                       "fifty", "sixty", "seventy", "eighty", "ninety"};
const char* kOrdinals[] = {"zeroth", "first",   "second",  "third",
                           "fourth", "fifth",   "sixth",   "seventh",
                           "eighth", "ninth",   "tenth",   "eleventh",
                           "twelfth"};

}  // namespace

std::string number_to_words(long n) {
  if (n < 0) return std::to_string(n);
  if (n < 20) return kOnes[n];
  if (n < 100) {
    std::string out = kTens[n / 10];
    if (n % 10) out += std::string("-") + kOnes[n % 10];
    return out;
  }
  return std::to_string(n);
}

long words_to_number(std::string_view w) {
  std::string s = lower(w);
  for (long i = 0; i < 20; ++i)
    if (s == kOnes[i]) return i;
  for (long t = 2; t < 10; ++t) {
    if (s == kTens[t]) return t * 10;
    for (long o = 1; o < 10; ++o)
      if (s == std::string(kTens[t]) + "-" + kOnes[o]) return t * 10 + o;
  }
  return -1;
}

long ordinal_to_number(std::string_view w) {
  std::string s = lower(w);
  for (long i = 1; i < 13; ++i)
    if (s == kOrdinals[i]) return i;
  // "21st", "3rd" style
  if (s.size() > 2 && is_integer_token(s.substr(0, s.size() - 2))) {
    std::string_view suf = std::string_view(s).substr(s.size() - 2);
    if (suf == "st" || suf == "nd" || suf == "rd" || suf == "th")
      return std::stol(s.substr(0, s.size() - 2));
  }
  return -1;
}

}  // namespace isadl
