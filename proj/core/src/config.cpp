/*
 * Copyright (C) 2026 The kernint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "kernint/verify.hpp"

namespace kernint {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("config: bad value for '" + std::string(key) + "': " + std::string(text));
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("config: bad boolean for '" + std::string(key) + "'");
}

}  // namespace

VerifyConfig parse_config(std::string_view text, VerifyConfig cfg) {
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view val = trim(line.substr(eq + 1));

    if (key == "case") cfg.case_name = std::string(val);
    else if (key == "tol") cfg.tol_a = parse_number<double>(key, val);
    else if (key == "tol_series") cfg.tol_series = parse_number<double>(key, val);
    else if (key == "tol_2d") cfg.tol_2d = parse_number<double>(key, val);
    else if (key == "tol_b") cfg.tol_b = parse_number<double>(key, val);
    else if (key == "tol_partial") cfg.tol_partial = parse_number<double>(key, val);
    else if (key == "quad_tol") cfg.quad_tol = parse_number<double>(key, val);
    else if (key == "quad_tol_2d") cfg.quad_tol_2d = parse_number<double>(key, val);
    else if (key == "level") cfg.level = parse_number<int>(key, val);
    else if (key == "level_2d") cfg.level_2d = parse_number<int>(key, val);
    else if (key == "terms") cfg.terms = parse_number<int>(key, val);
    else if (key == "terms_max") cfg.terms_max = parse_number<int>(key, val);
    else if (key == "partial_n") cfg.partial_n = parse_number<long>(key, val);
    else if (key == "jobs") cfg.jobs = parse_number<int>(key, val);
    else if (key == "json") cfg.json = parse_bool(key, val);
    else throw ConfigError("config: unknown key '" + std::string(key) + "'");
  }
  return cfg;
}

VerifyConfig load_config_file(const std::string& path, VerifyConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

}  // namespace kernint
