/**************************************************************************
 * Copyright 2026 The algen Authors
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
 **************************************************************************/

#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace algen {

enum class Errc {
  NonPrime,
  BadDegree,
  BadParams,
  DivisionByZero,
  DimensionMismatch,
  ShapeMismatch,
  UnsupportedSize,
  TooLarge,
  DivisionInexact,
  NotDivisible,
  FactorizationIncomplete,
  CertificationFailed,
  DivergentTail,
  UnknownCommand,
  InvalidJSON,
  InternalMismatch,
};

constexpr std::string_view to_string(Errc e) noexcept {
  switch (e) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::BadDegree: return "BadDegree";
    case Errc::BadParams: return "BadParams";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::UnsupportedSize: return "UnsupportedSize";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DivisionInexact: return "DivisionInexact";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::FactorizationIncomplete: return "FactorizationIncomplete";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::DivergentTail: return "DivergentTail";
    case Errc::UnknownCommand: return "UnknownCommand";
    case Errc::InvalidJSON: return "InvalidJSON";
    case Errc::InternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

/// Upper bound on the number of states any exhaustive enumeration may visit.
/// ALGEN_ENUM_CAP overrides the default of 2^30.
inline std::uint64_t enum_cap() {
  constexpr std::uint64_t kDefault = std::uint64_t{1} << 30;
  if (const char* env = std::getenv("ALGEN_ENUM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefault;
}

}  // namespace algen
