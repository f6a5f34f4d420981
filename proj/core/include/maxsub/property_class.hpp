#pragma once

#include <optional>
#include <string_view>

namespace maxsub {

/// Closure law a property obeys.
enum class PropertyClass {
  kHereditary,           // closed under all induced subgraphs
  kConnectedHereditary,  // closed under connected induced subgraphs
  kRootedHereditary,     // closed under rooted induced subgraphs
};

std::string_view to_string(PropertyClass c);
std::optional<PropertyClass> property_class_from_string(std::string_view s);

}  // namespace maxsub
