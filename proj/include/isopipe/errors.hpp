/* Copyright 2026-present the isopipe authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ISOPIPE_ERRORS_HPP_
#define ISOPIPE_ERRORS_HPP_

#include <cassert>
#include <optional>
#include <string>
#include <utility>

namespace isopipe {

enum class Errc {
  kOk = 0,
  // container / PHV access
  kIndexOutOfRange,
  kValueTooWide,
  kMetadataNotValueContainer,
  // codecs
  kReservedBitsSet,
  kInvalidKind,
  kInvalidOpcode,
  kWidthMismatch,
  kLengthMismatch,
  kUnknownResource,
  kInvalidRange,
  // control plane
  kWriteToReadOnly,
  kDuplicateKey,
  kSlotMismatch,
  kBadIndex,
  kBadEntry,
  kTimeout,
  kRegistryFull,
  kCamCapacity,
  kMemoryCapacity,
  kRouteTableOverflow,
  kSlotInUse,
  kVidInUse,
  // harness
  kMalformedPacket,
  kBadScenario,
};

const char *errc_name(Errc e);

// Small value-or-error carrier. Engine verdicts are plain values; this is
// only for operations whose failure is a caller bug or malformed input.
template <typename T>
class Result {
 public:
  Result(T value) : value_(std::move(value)), errc_(Errc::kOk) {}  // NOLINT
  Result(Errc errc) : errc_(errc) { assert(errc != Errc::kOk); }   // NOLINT

  bool ok() const { return errc_ == Errc::kOk; }
  explicit operator bool() const { return ok(); }
  Errc error() const { return errc_; }

  const T &value() const {
    assert(ok());
    return *value_;
  }
  T &value() {
    assert(ok());
    return *value_;
  }
  T take() {
    assert(ok());
    return std::move(*value_);
  }

 private:
  std::optional<T> value_;
  Errc errc_;
};

}  // namespace isopipe

#endif  // ISOPIPE_ERRORS_HPP_
