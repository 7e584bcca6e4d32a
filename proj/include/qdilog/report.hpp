#pragma once

#include "json.hpp"

#include <chrono>
#include <string>

namespace qdl {

using json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Error };

std::string status_str(Status s);

struct Report {
    std::string identity;
    json params = json::object();  // n, D and check-specific parameters
    Status status = Status::Pass;
    json first_discrepancy;  // null iff pass
    double runtime_ms = 0;

    bool passed() const { return status == Status::Pass; }
    json to_json() const;
};

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace qdl
