#pragma once

#include <stdexcept>
#include <string>

#include "specht/modrep.hpp"
#include "specht/partition.hpp"

namespace specht::cli {

// Parse failure with the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_ = 0;
};

/* Partition literals: comma lists "7,1,1,1", bracketed "[7,1,1,1]" or
 * "(7,1,1,1)", and exponent form "7,1^3".  The empty string is the empty
 * partition.  Canonical rendering is to_exponent_string.
 */
Partition parse_partition_literal(const std::string& text);

/* Subgroup specs: products of factors "Vm" or "Vm^k" joined by 'x' or '*',
 * e.g. "V1^3", "V1^2xV2".  Factor blocks take consecutive points from 1.
 */
ElementaryAbelian parse_subgroup_spec(const std::string& text, int p);

}  // namespace specht::cli
