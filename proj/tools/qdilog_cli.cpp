#include "CLI11.hpp"
#include "qdilog/curves.hpp"
#include "qdilog/graphs.hpp"
#include "qdilog/linkskein.hpp"
#include "qdilog/quiver.hpp"
#include "qdilog/torus.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#ifndef QDILOG_DATA_DIR
#define QDILOG_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace qdl;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    int n = 2;
    int degree = 4;
    std::string order = "all";
    std::string sequence = "short";
    std::string out;
    std::string convention_file = std::string(QDILOG_DATA_DIR) + "/defaults.json";
    std::string linkskein_file;
    int jobs = 1;
    bool no_timing = false;
    bool allow_nonadmissible = false;
    std::optional<std::string> coefficient;
    std::optional<int> middle;
    std::optional<int> skein_shift;
};

struct Defaults {
    Conventions conv;
    int order_cap = kDefaultOrderCap;
    std::string linkskein_file;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw ConfigError(path + ": " + ex.what());
    }
}

Defaults load_defaults(const RunConfig& rc) {
    Defaults d;
    json j = read_json(rc.convention_file);
    try {
        d.conv.coefficient = parse_coefficient(j.value("dilog_coefficient", "keller"));
        d.conv.pentagon_middle_halves = j.value("pentagon_middle_halves", 0);
        d.conv.skein_shift_halves = j.value("skein_shift_halves", 0);
        d.order_cap = j.value("order_cap", kDefaultOrderCap);
        if (j.value("pairing_sign", kChainPairingSign) != kChainPairingSign)
            throw ConfigError("pairing_sign must be " + std::to_string(kChainPairingSign));
        fs::path base = fs::path(rc.convention_file).parent_path();
        d.linkskein_file = (base / j.value("linkskein_config", "linkskein_n2.json")).string();
    } catch (const json::exception& ex) {
        throw ConfigError(rc.convention_file + ": " + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ConfigError(ex.what());
    }
    if (rc.coefficient) d.conv.coefficient = parse_coefficient(*rc.coefficient);
    if (rc.middle) d.conv.pentagon_middle_halves = *rc.middle;
    if (rc.skein_shift) d.conv.skein_shift_halves = *rc.skein_shift;
    if (!rc.linkskein_file.empty()) d.linkskein_file = rc.linkskein_file;
    return d;
}

json order_json(const Order& o) {
    json j = json::array();
    for (const Interval& iv : o) j.push_back({iv.lo, iv.hi});
    return j;
}

Order parse_order_json(const std::string& s) {
    json j;
    try {
        j = json::parse(s);
    } catch (const json::exception& ex) {
        throw ConfigError(std::string("--order: ") + ex.what());
    }
    Order o;
    for (const auto& iv : j) {
        if (!iv.is_array() || iv.size() != 2) throw ConfigError("--order: intervals must be [lo, hi]");
        o.push_back({iv[0].get<int>(), iv[1].get<int>()});
    }
    return o;
}

std::vector<Order> select_orders(const RunConfig& rc, const Defaults& d) {
    const std::string& sel = rc.order;
    if (!sel.empty() && (sel.front() == '[')) {
        Order o = parse_order_json(sel);
        if (order_dimension(o) != rc.n) throw ConfigError("--order does not have n(n+1)/2 intervals for --n");
        return {o};
    }
    if (sel == "nonadmissible") {
        if (rc.n > 3) throw ConfigError("--order nonadmissible needs --n <= 3");
        return non_admissible_permutations(rc.n);
    }
    std::vector<Order> all = enumerate_admissible_orders(rc.n, d.order_cap);
    if (sel == "all") return all;
    int idx = 0;
    try {
        idx = std::stoi(sel);
    } catch (const std::exception&) {
        throw ConfigError("--order must be an index, a JSON interval list, \"all\" or \"nonadmissible\"");
    }
    if (idx < 1 || idx > static_cast<int>(all.size()))
        throw ConfigError("--order index out of range 1.." + std::to_string(all.size()));
    return {all[idx - 1]};
}

// Runs tasks on up to `jobs` threads; results keep task order.
std::vector<Report> run_parallel(const std::vector<std::function<Report()>>& tasks, int jobs) {
    std::vector<Report> out(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < tasks.size();) out[i] = tasks[i]();
    };
    int nt = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

void emit(const RunConfig& rc, const json& j) {
    std::string text = j.dump(2) + "\n";
    if (rc.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(rc.out);
    if (!f) throw ConfigError("cannot write " + rc.out);
    f << text;
}

int emit_reports(const RunConfig& rc, std::vector<Report> reports) {
    json arr = json::array();
    bool ok = true;
    for (Report& r : reports) {
        if (rc.no_timing) r.runtime_ms = 0;
        ok = ok && r.passed();
        std::cerr << r.identity << " n=" << (r.params.contains("n") ? r.params["n"].dump() : "-")
                  << " D=" << (r.params.contains("D") ? r.params["D"].dump() : "-") << ": "
                  << status_str(r.status) << "\n";
        arr.push_back(r.to_json());
    }
    emit(rc, arr);
    return ok ? 0 : 1;
}

int run(const RunConfig& rc) {
    if (rc.n < 1) throw ConfigError("--n must be >= 1");
    if (rc.degree < 0) throw ConfigError("--degree must be >= 0");
    if (rc.jobs < 1) throw ConfigError("--jobs must be >= 1");
    Defaults d = load_defaults(rc);
    const std::string& cmd = rc.subcommand;

    if (cmd == "orders") {
        auto orders = enumerate_admissible_orders(rc.n, d.order_cap);
        json list = json::array();
        for (const Order& o : orders) {
            json ts = json::array();
            for (const Tuple& t : order_to_tuple_sequence(o)) ts.push_back(t);
            list.push_back({{"order", order_json(o)}, {"tuples", ts}});
        }
        emit(rc, {{"n", rc.n}, {"count", orders.size()}, {"orders", list}});
        std::cerr << "orders n=" << rc.n << ": " << orders.size() << "\n";
        return 0;
    }
    if (cmd == "census") {
        if (rc.n > d.order_cap) throw ConfigError("--n exceeds the order cap");
        return emit_reports(rc, {verify_order_census(rc.n, d.order_cap)});
    }
    if (cmd == "pentagon") return emit_reports(rc, {verify_pentagon(rc.degree, d.conv)});
    if (cmd == "reineke") {
        std::vector<Order> orders = select_orders(rc, d);
        const bool allow = rc.allow_nonadmissible || rc.order == "nonadmissible";
        for (const Order& o : orders) {
            bool adm;
            try {
                adm = is_admissible_order(o);
            } catch (const NotAPermutation& ex) {
                throw ConfigError(ex.what());
            }
            if (!adm && !allow)
                throw ConfigError("order is not admissible (use --allow-nonadmissible for negative controls)");
        }
        std::vector<std::function<Report()>> tasks;
        for (const Order& o : orders)
            tasks.push_back([&, o] { return verify_reineke(o, rc.degree, d.conv, !allow); });
        return emit_reports(rc, run_parallel(tasks, rc.jobs));
    }
    if (cmd == "mutate") {
        if (rc.sequence == "short") {
            emit(rc, {{"n", rc.n}, {"sequence", "short"}, {"trace", trace_json(short_sequence(rc.n))}});
        } else if (rc.sequence == "long") {
            json traces = json::array();
            for (const Order& o : select_orders(rc, d))
                traces.push_back({{"order", order_json(o)}, {"trace", trace_json(long_sequence(o))}});
            emit(rc, {{"n", rc.n}, {"sequence", "long"}, {"traces", traces}});
        } else {
            throw ConfigError("--sequence must be short or long");
        }
        return 0;
    }
    if (cmd == "equivalence") {
        if (rc.n < 2) throw ConfigError("equivalence needs --n >= 2");
        if (rc.n > d.order_cap) throw ConfigError("--n exceeds the order cap");
        return emit_reports(rc, {verify_mutation_equivalence(rc.n, d.order_cap)});
    }
    if (cmd == "twists") {
        if (rc.n > 8) throw ConfigError("twists supports --n <= 8");
        return emit_reports(rc, {check_twist_consistency(rc.n), verify_twist_identities(rc.n)});
    }
    if (cmd == "conjugation") {
        LinkskeinConfig cfg;
        try {
            cfg = load_linkskein_config(read_json(d.linkskein_file));
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& ex) {
            throw ConfigError(d.linkskein_file + ": " + ex.what());
        }
        int n = cfg.pairing.n;
        Report conj = verify_conjugation(face_operator(cfg.before, n), face_operator(cfg.after, n), cfg.e, cfg.D,
                                         cfg.pairing, d.conv.coefficient);
        return emit_reports(rc, {conj, check_face_sums(cfg)});
    }
    throw ConfigError("unknown subcommand " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks of A_n quantum dilogarithm identities and mutation sequences"};
    app.require_subcommand(1);
    RunConfig rc;
    auto common = [&](CLI::App* sub, bool with_degree, bool with_order) {
        sub->add_option("--n", rc.n, "number of quiver vertices");
        if (with_degree) sub->add_option("--degree", rc.degree, "truncation degree");
        if (with_order) sub->add_option("--order", rc.order, "order index (1-based), JSON interval list, all, or nonadmissible");
        sub->add_option("--out", rc.out, "write JSON here instead of stdout");
        sub->add_option("--convention-file", rc.convention_file, "defaults file with convention constants");
        sub->add_option("--jobs", rc.jobs, "parallel workers");
        sub->add_flag("--no-timing", rc.no_timing, "report runtime_ms as 0 for byte-identical output");
        sub->add_option("--coefficient", rc.coefficient, "dilogarithm coefficient: keller or literal");
        sub->add_option("--middle", rc.middle, "pentagon middle q-power, in halves");
        sub->add_option("--skein-shift", rc.skein_shift, "skein identification q-power, in halves");
    };
    common(app.add_subcommand("orders", "enumerate admissible orders"), false, false);
    common(app.add_subcommand("census", "check order enumeration and the order/tuple bijection"), false, false);
    common(app.add_subcommand("pentagon", "verify the pentagon identity"), true, false);
    auto* rein = app.add_subcommand("reineke", "verify Reineke identities");
    common(rein, true, true);
    rein->add_flag("--allow-nonadmissible", rc.allow_nonadmissible, "accept non-admissible orders");
    auto* mut = app.add_subcommand("mutate", "emit a short or long mutation trace");
    common(mut, false, true);
    mut->add_option("--sequence", rc.sequence, "short or long");
    common(app.add_subcommand("equivalence", "verify mutation equivalence"), false, false);
    common(app.add_subcommand("twists", "check the Dehn twist calculus"), false, false);
    auto* conj = app.add_subcommand("conjugation", "linking-skein conjugation check");
    common(conj, false, false);
    conj->add_option("--config", rc.linkskein_file, "linking-skein configuration file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    rc.subcommand = app.get_subcommands().front()->get_name();
    try {
        return run(rc);
    } catch (const ConfigError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
