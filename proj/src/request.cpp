#include "ridesim/request.hpp"

namespace ridesim {

const char* to_string(RequestStatus s) {
    switch (s) {
        case RequestStatus::Pending: return "pending";
        case RequestStatus::Pooled: return "pooled";
        case RequestStatus::Matched: return "matched";
        case RequestStatus::OnBoard: return "on_board";
        case RequestStatus::Delivered: return "delivered";
        case RequestStatus::Expired: return "expired";
    }
    return "?";
}

bool status_transition_allowed(RequestStatus from, RequestStatus to) {
    using S = RequestStatus;
    switch (from) {
        case S::Pending: return to == S::Pooled || to == S::Expired;
        case S::Pooled: return to == S::Matched || to == S::Pending || to == S::Expired;
        case S::Matched: return to == S::OnBoard;
        case S::OnBoard: return to == S::Delivered;
        case S::Delivered:
        case S::Expired: return false;
    }
    return false;
}

}  // namespace ridesim
