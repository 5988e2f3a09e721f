#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "nw/report.hpp"
#include "nw/wall.hpp"

namespace nw {

using Json = nlohmann::ordered_json;

std::string provenance_name(CellSource s);

Json poly_coeffs_json(const Poly& p);  // low-to-high residue array

/// {modulus, j_range, k_range, cells (row-major), provenance (run-length)}.
Json wall_to_json(const WallRegion& region);

/// Header "j,k,value" then one row per cell.
std::string wall_to_csv(const WallRegion& region);

/// Array of {j_corner, k_corner, size, truncated, q_coeffs}; interior windows
/// carry their normalized convergent denominator, truncated ones an empty list.
Json windows_to_json(const WallRegion& region, const std::vector<Window>& windows);

Json report_to_json(const VerificationReport& report);

/// Binary P6 pixmap, one pixel per cell: zero cells red (255,0,0), residues
/// r in [1, l-1] gray round(255 r/(l-1)), undefined cells blue (0,0,255).
void write_ppm(const WallRegion& region, std::ostream& out);

}  // namespace nw
