#pragma once

#include <cstdint>
#include <vector>

namespace ridesim {

enum class ActionKind { Pickup, Dropoff };

struct RouteAction {
    int zone_id = 0;
    ActionKind kind = ActionKind::Pickup;
    std::int64_t request_id = 0;
};

// Taxi status tuple <t,id,l,ca,s> plus per-run accounting.
struct TaxiState {
    std::int64_t t = 0;      // last update time
    int id = 0;
    int location = 0;        // l, zone id
    int capacity_left = 4;   // ca
    std::vector<RouteAction> route;  // s, empty when idle
    int relocation_target = -1;      // pending idle move, -1 when none
    double odometer_cost = 0.0;      // accumulated C_d units
    std::int64_t busy_cycles = 0;    // cycles with a delivery task

    bool idle() const { return route.empty(); }
};

}  // namespace ridesim
