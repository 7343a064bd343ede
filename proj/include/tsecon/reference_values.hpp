#pragma once

#include <json.hpp>
#include <optional>
#include <string>

namespace tsecon {

/// Published reference values compiled in from data/reference_values.json.
[[nodiscard]] const nlohmann::json& reference_values();

/// Value of a table cell, or nullopt when the table leaves it blank.
[[nodiscard]] std::optional<double> published(const std::string& table, const std::string& row,
                                              const std::string& column);

}  // namespace tsecon
