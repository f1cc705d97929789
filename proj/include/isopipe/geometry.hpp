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

#ifndef ISOPIPE_GEOMETRY_HPP_
#define ISOPIPE_GEOMETRY_HPP_

#include <cstdint>

namespace isopipe::geometry {

// Pipeline shape. Stages are indexed 0..4 internally; user-facing numbering
// (CLI, reconfiguration resource IDs, docs) is 1..5.
inline constexpr int kNumStages = 5;
inline constexpr int kNumSlots = 32;
inline constexpr int kFirstUserStage = 1;  // stage 2 in 1-based numbering
inline constexpr int kLastUserStage = 3;   // stage 4
inline constexpr int kNumUserStages = kLastUserStage - kFirstUserStage + 1;

// Table depths and entry widths.
inline constexpr int kParserDepth = 32;
inline constexpr int kParserActionsPerEntry = 10;
inline constexpr int kParseActionBits = 16;
inline constexpr int kParserEntryBits = 160;
inline constexpr int kExtractorDepth = 32;
inline constexpr int kExtractorBits = 38;
inline constexpr int kMaskDepth = 32;
inline constexpr int kKeyBits = 193;
inline constexpr int kCamDepth = 16;
inline constexpr int kCamBits = 205;
inline constexpr int kVliwDepth = 16;
inline constexpr int kAluActionBits = 25;
inline constexpr int kNumAlus = 25;
inline constexpr int kVliwBits = 625;
inline constexpr int kPageDepth = 32;
inline constexpr int kPageEntryBits = 16;
inline constexpr int kStatefulWords = 256;

// PHV shape.
inline constexpr int kContainersPerKind = 8;
inline constexpr int kNumValueContainers = 24;
inline constexpr int kMetadataIndex = 24;  // flat index of the metadata block
inline constexpr int kMetadataBytes = 32;
inline constexpr int kPhvBytes = 128;
inline constexpr int kHeaderBytes = 128;  // parse window at packet head

// Packets.
inline constexpr unsigned kDefaultMtu = 1500;
inline constexpr uint16_t kVlanTpid = 0x8100;
inline constexpr uint16_t kReconfigVid = 0xFFF;  // reserved control VID
inline constexpr uint16_t kSystemVid = 0x000;
inline constexpr int kSystemSlot = 0;
inline constexpr uint16_t kReconfigUdpPort = 9966;

// Well-known byte offsets for the Ethernet+802.1Q+IPv4+UDP framing that the
// fixtures and the control protocol use. Parsing itself is table-driven; these
// are only for packet construction and the filter's framing check.
inline constexpr int kOffVlanTci = 14;
inline constexpr int kOffEthertype = 16;
inline constexpr int kOffIpv4 = 18;
inline constexpr int kOffIpProto = 27;
inline constexpr int kOffIpSrc = 30;
inline constexpr int kOffIpDst = 34;
inline constexpr int kOffUdp = 38;
inline constexpr int kOffUdpDst = 40;
inline constexpr int kOffPayload = 46;

// ALU operand selectors. 0..24 select PHV containers (24 = metadata block,
// which reads as zero for value ops); 25..27 expose read-only metadata scalars;
// 31 selects the 11-bit immediate.
inline constexpr unsigned kSelLinkUtil = 25;
inline constexpr unsigned kSelQueueLen = 26;
inline constexpr unsigned kSelVid = 27;
inline constexpr unsigned kSelImm = 31;
inline constexpr unsigned kImmBits = 11;
inline constexpr unsigned kImmMax = (1u << kImmBits) - 1;

// Shared PHV containers pinned for the system-module interface (flat indices).
inline constexpr int kDstIpContainer = 8;    // 4-byte container 0: dst IP
inline constexpr int kPhysIpContainer = 9;   // 4-byte container 1: physical IP
inline constexpr int kSysScratchContainer = 10;  // 4-byte container 2

}  // namespace isopipe::geometry

#endif  // ISOPIPE_GEOMETRY_HPP_
