#include "qdilog/report.hpp"

namespace qdl {

std::string status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
    }
    return "error";
}

json Report::to_json() const {
    json j;
    j["identity"] = identity;
    j["n"] = params.contains("n") ? params["n"] : json(nullptr);
    j["D"] = params.contains("D") ? params["D"] : json(nullptr);
    json extra = json::object();
    for (auto it = params.begin(); it != params.end(); ++it)
        if (it.key() != "n" && it.key() != "D") extra[it.key()] = it.value();
    if (!extra.empty()) j["params"] = extra;
    j["status"] = status_str(status);
    j["first_discrepancy"] = passed() ? json(nullptr) : first_discrepancy;
    j["runtime_ms"] = runtime_ms;
    return j;
}

}  // namespace qdl
