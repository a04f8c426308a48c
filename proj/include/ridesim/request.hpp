#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ridesim {

enum class RequestStatus { Pending, Pooled, Matched, OnBoard, Delivered, Expired };

const char* to_string(RequestStatus s);

// Legal lifecycle edges: pending->pooled->matched->on_board->delivered,
// pending/pooled->expired, and pooled->pending (an unmatched cluster
// dissolves at cycle end and its riders re-pool the next cycle).
bool status_transition_allowed(RequestStatus from, RequestStatus to);

// Trip request tuple <t,id,o,d,p,k> plus fare base and lifecycle bookkeeping.
struct TripRequest {
    std::int64_t t = 0;        // request timestamp, seconds from scenario start
    std::int64_t id = 0;
    int origin = 0;            // o, zone id
    int dest = 0;              // d, zone id
    std::int64_t patience = 1200;  // p, seconds
    int riders = 1;            // k
    double solo_fare = 0.0;    // F(r)
    RequestStatus status = RequestStatus::Pending;
    std::int64_t matched_at = -1;
    std::int64_t picked_up_at = -1;
    std::int64_t delivered_at = -1;

    void transition(RequestStatus to) {
        if (!status_transition_allowed(status, to))
            throw std::logic_error("illegal request status transition " +
                                   std::string(to_string(status)) + " -> " + to_string(to) +
                                   " (request " + std::to_string(id) + ")");
        status = to;
    }

    bool pre_match() const {
        return status == RequestStatus::Pending || status == RequestStatus::Pooled;
    }
};

struct MatchResponse {
    std::int64_t request_id = 0;
    int taxi_id = 0;
    std::int64_t issued_at = 0;
};

}  // namespace ridesim
