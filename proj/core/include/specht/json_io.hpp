#pragma once

#include <string>

#include "specht/classifier.hpp"
#include "specht/partition.hpp"

namespace specht {

// JSON array of parts, e.g. "[7,1,1,1]".
std::string to_json(const Partition& mu);

// Block descriptor with the partition attached:
// {"mu":[...],"p":3,"core":[...],"weight":3,"defect":"Sylow_3(S_9)","abelian_defect":false}
std::string to_json(const Partition& mu, const BlockInfo& block);

/* Classification report with stable key order:
 * {"mu":[...],"p":...,"status":"...","vertex":"...",
 *  "complexity":{"lo":..,"hi":..},
 *  "block":{"core":[...],"weight":..,"defect":"...","abelian_defect":..},
 *  "trivial_source":..,"simple_young":..,"note":"...",
 *  ["feasible_types":[[...],...],]  (undetermined status only)
 *  "citations":[...]}
 */
std::string to_json(const VertexReport& report);

}  // namespace specht
