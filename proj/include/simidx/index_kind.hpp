#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace simidx {

/// The four similarity indices.
///
///   S1  min/max         (Jaccard-style, equals the signed mset Jaccard J_N)
///   S2  2 min/sum       (Dice-style)
///   S3  product/max^2
///   S4  product         (unbounded, inner-product family)
enum class IndexKind { S1, S2, S3, S4 };

inline constexpr std::array<IndexKind, 4> kAllIndexKinds = {IndexKind::S1, IndexKind::S2,
                                                             IndexKind::S3, IndexKind::S4};

/// Which labels/samples enter the interiority index: only those where both
/// operands have the same (nonzero) sign, or all of them.
enum class SupportMode { RestrictedPositive, Full };

/// True for the kinds bounded in [-1, 1].
constexpr bool is_bounded(IndexKind kind) { return kind != IndexKind::S4; }

constexpr std::string_view to_string(IndexKind kind)
{
  switch (kind) {
    case IndexKind::S1: return "s1";
    case IndexKind::S2: return "s2";
    case IndexKind::S3: return "s3";
    case IndexKind::S4: return "s4";
  }
  return "?";
}

constexpr std::string_view to_string(SupportMode mode)
{
  return mode == SupportMode::RestrictedPositive ? "restricted" : "full";
}

inline std::optional<IndexKind> parse_index_kind(std::string_view text)
{
  for (IndexKind kind : kAllIndexKinds) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

inline std::optional<SupportMode> parse_support_mode(std::string_view text)
{
  if (text == "restricted") return SupportMode::RestrictedPositive;
  if (text == "full") return SupportMode::Full;
  return std::nullopt;
}

}  // namespace simidx
