#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace haneat {

/// Index into the closed activation catalog. Linear is reserved for
/// input, bias and output nodes; the other four are the hidden kinds.
enum class ActivationKind : std::uint8_t {
  linear = 0,
  step = 1,
  relu = 2,
  sigmoid = 3,
  gaussian = 4,
};

inline constexpr std::array<ActivationKind, 4> kHiddenCatalog = {
    ActivationKind::step, ActivationKind::relu, ActivationKind::sigmoid,
    ActivationKind::gaussian};

/// Evaluates the transfer function. Throws NumericError on non-finite input.
///
///   linear    x
///   step      1 if x >= 0 else 0
///   relu      max(0, x)
///   sigmoid   1 / (1 + exp(-x))
///   gaussian  exp(-x^2)
double apply(ActivationKind kind, double x);

/// The kinds a hidden node may carry, in stable order.
std::span<const ActivationKind> hidden_catalog();

bool is_hidden_kind(ActivationKind kind);

std::string_view to_string(ActivationKind kind);
std::optional<ActivationKind> parse_activation(std::string_view name);

}  // namespace haneat
