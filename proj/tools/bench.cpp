#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "yfock/relcheck.hpp"

using namespace yfock;

namespace {

bool same_reports(const std::vector<CheckReport>& a,
                  const std::vector<CheckReport>& b) {
    if (a.size() != b.size())
        return false;
    for (size_t k = 0; k < a.size(); ++k) {
        const auto& x = a[k];
        const auto& y = b[k];
        if (x.instance.id != y.instance.id || x.instance.i != y.instance.i ||
            x.instance.j != y.instance.j ||
            x.instance.modes != y.instance.modes || x.pass != y.pass ||
            x.witness.has_value() != y.witness.has_value())
            return false;
    }
    return true;
}

double run_ms(const std::string& suite, int N, int D, int rmax, int jobs,
              std::vector<CheckReport>& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = run_suite(suite, N, D, rmax, jobs);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int D = argc > 1 ? std::atoi(argv[1]) : 5;
    int rmax = argc > 2 ? std::atoi(argv[2]) : 1;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 2)
        jobs = 2;
    std::cout << "suite runner benchmark: serial reference vs " << jobs
              << " jobs, D=" << D << " rmax=" << rmax << "\n";
    bool ok = true;
    for (int N : {2, 3}) {
        std::vector<CheckReport> serial, parallel;
        double ts = run_ms("all", N, D, rmax, 1, serial);
        double tp = run_ms("all", N, D, rmax, jobs, parallel);
        bool same = same_reports(serial, parallel);
        ok = ok && same;
        int failed = 0;
        for (const auto& rep : serial)
            failed += rep.pass ? 0 : 1;
        std::cout << "N=" << N << "  instances=" << serial.size()
                  << "  failed=" << failed << "  serial=" << ts
                  << "ms  parallel=" << tp << "ms  speedup=" << ts / tp
                  << "  identical=" << (same ? "yes" : "NO") << "\n";
    }
    return ok ? 0 : 1;
}
