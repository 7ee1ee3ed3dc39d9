#pragma once

#include <string>

#include <json.hpp>

#include "nftk/fuzzy.hpp"

namespace nftk {

/// Stable-field-order JSON form of a FIS; schema in docs/formats.md.
nlohmann::ordered_json fis_to_json(const Fis& fis);
Fis fis_from_json(const nlohmann::json& j);

void save_fis(const Fis& fis, const std::string& path);
Fis load_fis(const std::string& path);

} // namespace nftk
