#pragma once

#include <cstdint>
#include <stdexcept>

namespace ridesim {

// Discrete simulation clock. Cycle c covers the half-open interval
// [start_time + c*cycle_length, start_time + (c+1)*cycle_length).
// All times are integer seconds from scenario start.
struct SimClock {
    std::int64_t cycle_index = 0;
    std::int64_t cycle_length = 180;  // delta_t, seconds
    std::int64_t start_time = 0;
    std::int64_t end_time = 0;

    std::int64_t now() const { return start_time + cycle_index * cycle_length; }

    bool past_end() const { return now() > end_time; }

    void advance() { ++cycle_index; }

    static SimClock from_window(std::int64_t window_seconds, std::int64_t cycle_length) {
        if (cycle_length <= 0) throw std::invalid_argument("cycle_length must be positive");
        if (window_seconds < 0) throw std::invalid_argument("window must be non-negative");
        SimClock c;
        c.cycle_length = cycle_length;
        c.start_time = 0;
        c.end_time = window_seconds;
        return c;
    }

    // Number of cycle slots covering the window (ceil division).
    std::int64_t cycles_in_window() const {
        std::int64_t w = end_time - start_time;
        return (w + cycle_length - 1) / cycle_length;
    }
};

}  // namespace ridesim
