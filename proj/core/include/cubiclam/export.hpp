#pragma once

/**
 * @file export.hpp
 * @brief Text serializations: JSON (exact angles as {"num", "den"} integer
 *        pairs), SVG chord diagrams, and CSV traces with a header row.
 */

#include <string>
#include <vector>

#include "cubiclam/contraction.hpp"
#include "cubiclam/cubic_map.hpp"
#include "cubiclam/quad_gap.hpp"
#include "cubiclam/rays.hpp"
#include "cubiclam/thread.hpp"

namespace cubiclam {

std::string gap_to_json(const GapApprox& gap);
std::string pqpg_to_json(const std::vector<PQPGHole>& holes, unsigned max_period);

// Unit circle with edges of the grown gap (class "hole") and its major (class "major").
std::string gap_to_svg(const GapApprox& gap, unsigned size = 800);
// Unit circle with every hole chord (class "hole"), its dual major (class
// "major"), and a period label per hole.
std::string pqpg_to_svg(const std::vector<PQPGHole>& holes, unsigned size = 800);

std::string ray_to_csv(const RayPath& ray);
std::string contraction_to_csv(const ContractionRun& run);
std::string patterns_to_json(unsigned period, const std::vector<PatternInfo>& patterns);
std::string recurrence_to_json(const CubicMap& f, std::uint32_t horizon,
                               const std::vector<RecurrenceRow>& rows);

}  // namespace cubiclam
