#pragma once

#include <string>
#include <vector>

#include "lwd/relations.hpp"
#include "lwd/tally.hpp"

namespace lwd {

/// One published local weight distribution of a length-127 code: the three
/// primitive BCH codes with k = 36, 43, 50 and the punctured third-order
/// Reed-Muller code with k = 64.
struct Table2Column {
    std::string id;       // "127_36", "127_43", "127_50", "127_64rm"
    std::string family;   // human-readable descriptor
    std::size_t n;
    std::size_t k;
    WeightTally lwd;
};

const std::vector<Table2Column>& table2_columns();

/// Column by id; throws PreconditionError for unknown ids.
const Table2Column& table2_column(const std::string& id);

/// Guards the one-time transcription: per-column entry counts and total
/// neighbor counts must match the frozen checksums.
RelationReport table2_transcription_check();

}  // namespace lwd
