#pragma once

#include <sstream>

#include "ramicalc/harmonicity.hpp"

namespace ramicalc {

/*
 * Plot data for the break flows: one block per direction, rows on a linear
 * v-grid over the direction's window (v from window_v0 down to 0, i.e. rho
 * increasing to 1).  All values are exact rationals; the header names the
 * report field holding the exact piece data.
 */
inline std::string export_flows(const std::vector<DirectionData>& data, long grid) {
    if (data.empty()) throw Error(errc::empty_data, "no directions to export");
    if (grid < 2) throw Error(errc::invalid_argument, "grid must be at least 2");
    std::size_t max_flows = 0;
    for (const auto& dd : data) max_flows = std::max(max_flows, dd.flows.size());
    std::ostringstream out;
    out << "# exact pieces: see directions[].flows in the report json\n";
    out << "direction,rho_v";
    for (std::size_t j = 1; j <= max_flows; ++j) out << ",b_" << j << "_v";
    out << "\n";
    for (const auto& dd : data) {
        for (long k = 0; k < grid; ++k) {
            Rat rho_v = dd.window_v0 * Rat(grid - 1 - k) / Rat(grid - 1);
            out << dd.label << "," << rat_str(rho_v);
            for (std::size_t j = 0; j < max_flows; ++j) {
                out << ",";
                if (j < dd.flows.size())
                    out << rat_str(dd.flows[j].coef_v + dd.flows[j].exp * rho_v);
            }
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace ramicalc
