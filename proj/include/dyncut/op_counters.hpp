#pragma once

#include <cstdint>

namespace dyncut {

// Instrumentation tallies. Query procedures report deltas of these so the
// per-query operation-count claims can be checked empirically.
struct OpCounters {
    std::uint64_t dcs_insert_g = 0;
    std::uint64_t dcs_insert_f = 0;
    std::uint64_t dcs_delete_g = 0;
    std::uint64_t dcs_delete_f = 0;
    std::uint64_t dcs_find_cutedge = 0;
    std::uint64_t dsf_insert = 0;
    std::uint64_t dsf_delete = 0;
    std::uint64_t msf_insert = 0;
    std::uint64_t msf_delete = 0;
    std::uint64_t msf_scan_steps = 0;

    std::uint64_t dcs_total() const {
        return dcs_insert_g + dcs_insert_f + dcs_delete_g + dcs_delete_f + dcs_find_cutedge;
    }
    std::uint64_t dsf_total() const { return dsf_insert + dsf_delete; }
    std::uint64_t msf_total() const { return msf_insert + msf_delete + msf_scan_steps; }

    OpCounters operator-(const OpCounters& o) const {
        OpCounters d;
        d.dcs_insert_g = dcs_insert_g - o.dcs_insert_g;
        d.dcs_insert_f = dcs_insert_f - o.dcs_insert_f;
        d.dcs_delete_g = dcs_delete_g - o.dcs_delete_g;
        d.dcs_delete_f = dcs_delete_f - o.dcs_delete_f;
        d.dcs_find_cutedge = dcs_find_cutedge - o.dcs_find_cutedge;
        d.dsf_insert = dsf_insert - o.dsf_insert;
        d.dsf_delete = dsf_delete - o.dsf_delete;
        d.msf_insert = msf_insert - o.msf_insert;
        d.msf_delete = msf_delete - o.msf_delete;
        d.msf_scan_steps = msf_scan_steps - o.msf_scan_steps;
        return d;
    }
};

}  // namespace dyncut
