#include "hawkes/events.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hawkes {

EventSeries make_event_series(Eigen::ArrayXd times, double horizon) {
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw std::invalid_argument("event series horizon must be positive and finite");
    for (Eigen::Index i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]))
            throw std::invalid_argument("event time is not finite");
        if (times[i] < 0.0 || times[i] > horizon)
            throw std::invalid_argument("event time outside [0, T]");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw std::invalid_argument("event times must be strictly increasing");
    }
    return EventSeries{std::move(times), horizon};
}

void write_events_csv(const std::filesystem::path& path, const EventSeries& events) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", events.horizon);
    out << "# T=" << buf << "\n";
    out << "t_seconds\n";
    for (Eigen::Index i = 0; i < events.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", events.times[i]);
        out << buf << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

EventSeries read_events_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("# T=", 0) != 0)
        throw std::runtime_error(path.string() + ": missing `# T=<horizon>` header comment");
    double horizon = 0.0;
    try {
        horizon = std::stod(line.substr(4));
    } catch (const std::exception&) {
        throw std::runtime_error(path.string() + ": unparsable horizon in header");
    }
    if (!std::getline(in, line) || line != "t_seconds")
        throw std::runtime_error(path.string() + ": expected `t_seconds` column header");

    std::vector<double> times;
    std::size_t line_no = 2;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::size_t pos = 0;
        double t = 0.0;
        try {
            t = std::stod(line, &pos);
        } catch (const std::exception&) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": unparsable timestamp");
        }
        if (pos != line.size())
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": trailing characters after timestamp");
        times.push_back(t);
    }
    Eigen::ArrayXd arr = Eigen::Map<Eigen::ArrayXd>(times.data(), static_cast<Eigen::Index>(times.size()));
    return make_event_series(std::move(arr), horizon);
}

} // namespace hawkes
