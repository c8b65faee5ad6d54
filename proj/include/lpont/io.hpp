#pragma once

#include <lpont/complex.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lpont {

struct FacetFile {
    std::vector<std::vector<Vertex>> rows;
    std::optional<int> dim;
    bool explicit_orientation = false;
};

// One facet per line, whitespace-separated positive labels, '#' comments,
// optional `dim=<n>` and leading `orient=explicit` headers.
FacetFile parse_facet_text(const std::string& text);
FacetFile read_facet_file(const std::filesystem::path& path);

// Oriented by row order when explicit, else by orient() with sign +1.
OrientedComplex to_oriented(const FacetFile& file);
OrientedComplex load_oriented(const std::filesystem::path& path);

std::string format_facets(const OrientedComplex& k);

}  // namespace lpont
