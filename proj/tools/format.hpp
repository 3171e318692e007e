#pragma once

#include <string>
#include <vector>

#include "pjohnson/autom.hpp"
#include "pjohnson/iwasawa.hpp"
#include "pjohnson/massey.hpp"

namespace pjohnson::cli {

// "# p=3 r=2 N=6 m=1", then "X<j>\t<mono>\t<value>" rows.
std::string format_table(const JohnsonTable& t);
// A header object followed by one {"j","mono","value"} line per entry.
std::string format_table_json(const JohnsonTable& t);

// "# p=.. r=.. N=.. mMax=.. dMax=..", an "m\td(m)" block and a "d\tm(d)" block.
std::string format_sequences(const MonodromySequences& s, const GroupContext& ctx);
std::string format_sequences_json(const MonodromySequences& s, const GroupContext& ctx);

// {"d","j","mono","lhs","rhs","equal"} per line.
std::string format_report_json(const std::vector<RelatorCheckReport>& reports);

}  // namespace pjohnson::cli
