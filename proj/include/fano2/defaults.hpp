#pragma once

// Embedded default data: the catalog and the external fact table compiled
// into the binaries, with file overrides layered on top.

#include <optional>
#include <string>

#include <fano2/embedded_data.hpp>

#include "fano2/catalog.hpp"
#include "fano2/facts.hpp"

namespace fano2 {

inline catalog::Catalog load_catalog(const std::optional<std::string>& path = std::nullopt) {
    if (path) return catalog::load_catalog_file(*path);
    return catalog::load_catalog_text(embedded::catalog_text());
}

inline facts::FactTable load_facts(const std::optional<std::string>& path = std::nullopt) {
    if (path) return facts::load_facts_file(*path);
    return facts::parse_facts(embedded::facts_text());
}

} // namespace fano2
