// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace rsp {

/// Node identifier. Ordinary nodes carry ids 1..N; id 0 is the absorbing
/// destination. The ordering (destination first, then ascending id) is the
/// ordering used by every tie-break rule in the library.
class NodeId {
 public:
  constexpr NodeId() = default;
  constexpr explicit NodeId(int id) : id_(id) {}

  static constexpr NodeId destination() { return NodeId(0); }

  constexpr int id() const { return id_; }
  constexpr bool is_destination() const { return id_ == 0; }
  /// Zero-based index of an ordinary node; do not call for the destination.
  constexpr int index() const { return id_ - 1; }

  friend constexpr bool operator==(NodeId, NodeId) = default;
  friend constexpr auto operator<=>(NodeId, NodeId) = default;

 private:
  int id_ = 0;
};

}  // namespace rsp

template <>
struct std::hash<rsp::NodeId> {
  std::size_t operator()(rsp::NodeId x) const noexcept {
    return std::hash<int>()(x.id());
  }
};
