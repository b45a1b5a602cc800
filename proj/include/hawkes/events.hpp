#pragma once

#include <Eigen/Core>

#include <filesystem>
#include <string>

namespace hawkes {

/// Strictly increasing event timestamps (seconds) on an observation window
/// [0, T]. Events exactly at 0 or T are allowed.
struct EventSeries {
    Eigen::ArrayXd times;
    double horizon = 0.0;

    Eigen::Index size() const { return times.size(); }
};

/// Validating constructor; throws std::invalid_argument on unsorted times,
/// times outside [0, horizon], or a non-positive horizon.
EventSeries make_event_series(Eigen::ArrayXd times, double horizon);

/// CSV round trip. One column `t_seconds`, preceded by a header comment
/// `# T=<horizon>`. Timestamps are written with round-trip precision.
void write_events_csv(const std::filesystem::path& path, const EventSeries& events);
EventSeries read_events_csv(const std::filesystem::path& path);

} // namespace hawkes
