#include "qswap/io.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qswap {

namespace {

std::string fmt12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

void write_csv(const SweepSeries& s, std::ostream& out) {
    out << "t_prime,concurrence,bsm_success_prob,defined\n";
    for (const auto& p : s.points) {
        out << fmt12(p.t) << ','
            << (p.concurrence ? fmt12(*p.concurrence) : std::string("nan"))
            << ',' << fmt12(p.success_prob) << ','
            << (p.concurrence ? 1 : 0) << '\n';
    }
}

std::string to_csv(const SweepSeries& s) {
    std::ostringstream oss;
    write_csv(s, oss);
    return oss.str();
}

std::string to_json(const SweepSeries& s) {
    nlohmann::json j;
    j["scenario"] = s.scenario.label;
    j["model"] = to_string(s.scenario.params1.model);
    j["n_fock"] = s.scenario.params1.n_fock;
    j["omega_1"] = s.scenario.params1.cavity_freq;
    j["omega_2"] = s.scenario.params2.cavity_freq;
    j["coupling"] = s.scenario.params1.coupling;

    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : s.points) {
        nlohmann::json jp;
        jp["t_prime"] = p.t;
        if (p.concurrence)
            jp["concurrence"] = *p.concurrence;
        else
            jp["concurrence"] = nullptr;
        jp["bsm_success_prob"] = p.success_prob;
        jp["defined"] = p.concurrence ? 1 : 0;
        points.push_back(std::move(jp));
    }
    j["points"] = std::move(points);
    return j.dump(2) + "\n";
}

}  // namespace qswap
