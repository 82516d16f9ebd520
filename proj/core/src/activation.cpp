#include "haneat/activation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "haneat/errors.hpp"

namespace haneat {

double apply(ActivationKind kind, double x) {
  if (!std::isfinite(x)) {
    throw NumericError("non-finite activation input " + std::to_string(x));
  }
  switch (kind) {
    case ActivationKind::linear:
      return x;
    case ActivationKind::step:
      return x >= 0.0 ? 1.0 : 0.0;
    case ActivationKind::relu:
      return std::max(0.0, x);
    case ActivationKind::sigmoid:
      return 1.0 / (1.0 + std::exp(-x));
    case ActivationKind::gaussian:
      return std::exp(-x * x);
  }
  throw InvariantError("unknown activation kind");
}

std::span<const ActivationKind> hidden_catalog() { return kHiddenCatalog; }

bool is_hidden_kind(ActivationKind kind) {
  return std::find(kHiddenCatalog.begin(), kHiddenCatalog.end(), kind) != kHiddenCatalog.end();
}

std::string_view to_string(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::linear:
      return "linear";
    case ActivationKind::step:
      return "step";
    case ActivationKind::relu:
      return "relu";
    case ActivationKind::sigmoid:
      return "sigmoid";
    case ActivationKind::gaussian:
      return "gaussian";
  }
  return "unknown";
}

std::optional<ActivationKind> parse_activation(std::string_view name) {
  for (auto kind : {ActivationKind::linear, ActivationKind::step, ActivationKind::relu,
                    ActivationKind::sigmoid, ActivationKind::gaussian}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

}  // namespace haneat
