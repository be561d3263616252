// Copyright 2026 The Railcap Authors
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

#ifndef RAILCAP_SRC_LOG_HPP_
#define RAILCAP_SRC_LOG_HPP_

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <string>

// Minimal stderr logger controlled by the RAILCAP_LOG environment
// variable (error|warn|info|debug, default warn).
namespace railcap::logx {

enum Level { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

inline Level level() {
  static const Level cached = [] {
    const char* env = std::getenv("RAILCAP_LOG");
    if (!env) return kWarn;
    if (std::strcmp(env, "error") == 0) return kError;
    if (std::strcmp(env, "info") == 0) return kInfo;
    if (std::strcmp(env, "debug") == 0) return kDebug;
    return kWarn;
  }();
  return cached;
}

inline void emit(Level lvl, const char* tag, const std::string& message) {
  if (lvl > level()) return;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::fprintf(stderr, "railcap: %s: %s\n", tag, message.c_str());
}

inline void error(const std::string& m) { emit(kError, "error", m); }
inline void warn(const std::string& m) { emit(kWarn, "warn", m); }
inline void info(const std::string& m) { emit(kInfo, "info", m); }
inline void debug(const std::string& m) { emit(kDebug, "debug", m); }

}  // namespace railcap::logx

#endif  // RAILCAP_SRC_LOG_HPP_
