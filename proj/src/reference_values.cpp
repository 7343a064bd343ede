#include "tsecon/reference_values.hpp"

#include "tsecon/error.hpp"
#include "tsecon/reference_values_data.hpp"

namespace tsecon {

const nlohmann::json& reference_values() {
    static const nlohmann::json doc = nlohmann::json::parse(detail::kReferenceJson);
    return doc;
}

std::optional<double> published(const std::string& table, const std::string& row, const std::string& column) {
    const auto& tables = reference_values().at("tables");
    if (!tables.contains(table)) {
        throw RangeError("unknown table " + table);
    }
    for (const auto& e : tables.at(table).at("entries")) {
        if (e.at("row") == row && e.at("column") == column) {
            return e.at("value").get<double>();
        }
    }
    return std::nullopt;
}

}  // namespace tsecon
