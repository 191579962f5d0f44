#pragma once

// Finitely presented source groups Γ for epimorphism counting. Every target
// used here is a free product of cyclic groups, so a homomorphism Γ -> H is a
// tuple of elements with prescribed orders. An order constraint of 0 stands
// for an infinite cyclic factor (any element).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reemobius {

enum class TargetGroup {
  F2,
  FreeProd2Inf,
  FreeProd3Inf,
  FreeProd6Inf,
  FreeProd9Inf,
  TripleInvolution,
  C3C3,
  Hecke3,
  Hecke6,
  Hecke9,
};

inline constexpr std::array<TargetGroup, 10> kAllTargets = {
    TargetGroup::F2,           TargetGroup::FreeProd2Inf,
    TargetGroup::FreeProd3Inf, TargetGroup::FreeProd6Inf,
    TargetGroup::FreeProd9Inf, TargetGroup::TripleInvolution,
    TargetGroup::C3C3,         TargetGroup::Hecke3,
    TargetGroup::Hecke6,       TargetGroup::Hecke9,
};

inline constexpr std::string_view target_id(TargetGroup t) {
  switch (t) {
    case TargetGroup::F2:
      return "f2";
    case TargetGroup::FreeProd2Inf:
      return "c2-inf";
    case TargetGroup::FreeProd3Inf:
      return "c3-inf";
    case TargetGroup::FreeProd6Inf:
      return "c6-inf";
    case TargetGroup::FreeProd9Inf:
      return "c9-inf";
    case TargetGroup::TripleInvolution:
      return "c2c2c2";
    case TargetGroup::C3C3:
      return "c3c3";
    case TargetGroup::Hecke3:
      return "hecke3";
    case TargetGroup::Hecke6:
      return "hecke6";
    case TargetGroup::Hecke9:
      return "hecke9";
  }
  return "?";
}

inline std::optional<TargetGroup> parse_target(std::string_view id) {
  for (TargetGroup t : kAllTargets) {
    if (target_id(t) == id) {
      return t;
    }
  }
  return std::nullopt;
}

/// Element-order constraint per generator; 0 means unconstrained.
inline std::vector<unsigned> target_orders(TargetGroup t) {
  switch (t) {
    case TargetGroup::F2:
      return {0, 0};
    case TargetGroup::FreeProd2Inf:
      return {2, 0};
    case TargetGroup::FreeProd3Inf:
      return {3, 0};
    case TargetGroup::FreeProd6Inf:
      return {6, 0};
    case TargetGroup::FreeProd9Inf:
      return {9, 0};
    case TargetGroup::TripleInvolution:
      return {2, 2, 2};
    case TargetGroup::C3C3:
      return {3, 3};
    case TargetGroup::Hecke3:
      return {2, 3};
    case TargetGroup::Hecke6:
      return {2, 6};
    case TargetGroup::Hecke9:
      return {2, 9};
  }
  throw std::invalid_argument("target_orders: unknown target");
}

}  // namespace reemobius
