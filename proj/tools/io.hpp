#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "modlat/analysis.hpp"
#include "modlat/bol.hpp"
#include "modlat/lattice.hpp"
#include "modlat/pls.hpp"
#include "modlat/poset.hpp"
#include "modlat/rebuild.hpp"
#include "modlat/wildcard.hpp"

namespace modlat::io {

using Json = nlohmann::ordered_json;
using Lines = std::vector<std::vector<std::size_t>>;

/// Throws Error{ParseError} with the path on unreadable or malformed input.
Json read_json(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

// {"names": [...], "covers": [[lo, hi], ...]}; covers by index or name.
Json to_json(const Lattice& lattice);
Lattice lattice_from_json(const Json& j);
/// One node per element labelled by name, edges drawn upward.
std::string to_dot(const Lattice& lattice, const std::string& graph_name = "L");

// {"points": [names], "order": [[lo, hi], ...]}; entries by index or name.
Json to_json(const Poset& poset);
Poset poset_from_json(const Json& j);
// {"lines": [[...], ...]} or a bare array; entries by index or name.
Json lines_to_json(const Lines& lines, const Poset& poset);
Lines lines_from_json(const Json& j, const Poset& poset);

// {"points": [...], "lines": [[...], ...]} over integer point ids.
Json to_json(const Pls& pls);
Pls pls_from_json(const Json& j);

/// PLS layout plus "tops", "bottoms" and "names" (one per point), all by
/// element index of `lattice`.
Json to_json(const BaseOfLines& bol, const Lattice& lattice);
/// Throws Error{InvalidInput} if a line does not fit the interval under its
/// top.
BaseOfLines bol_from_json(const Json& j, const Lattice& lattice);

// [{"if": [...], "then": [...]}], entries named when names are given.
Json to_json(const ImplicationSet& sigma, const std::vector<std::string>& names = {});
ImplicationSet implications_from_json(const Json& j, const std::vector<std::string>& names = {});

Json to_json(const Row& row);
Json to_json(const RowSet& rows);
/// Cells followed by "final" or "pending: l2 l3" with 1-based line numbers.
std::string row_line(const Row& row);
std::string bitstring_text(const Bitstring& x);

Json to_json(const Verdict& v);
Json to_json(const ParamsReport& report);
std::string params_table(const ParamsReport& report);

}  // namespace modlat::io
