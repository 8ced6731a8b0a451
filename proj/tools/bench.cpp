// Compares the serial reference kernels against the OpenMP versions and
// reports timings plus agreement.

#include <chrono>
#include <cstdio>

#include "sqid/identity.hpp"
#include "sqid/pairs.hpp"

using namespace sqid;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
double timed(F&& fn) {
    auto t0 = Clock::now();
    fn();
    return seconds_since(t0);
}

void report(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "DISAGREE");
}

}  // namespace

int main() {
    {
        bool rs = false, rp = false;
        double ts = timed([&] { rs = check_generating_function_serial(Twist::Octonion, 7); });
        double tp = timed([&] { rp = check_generating_function(Twist::Octonion, 7); });
        report("generating function n=7", ts, tp, rs == rp && rs);
    }
    {
        PairSets p = hurwitz_radon_pair(10);
        PairReport s, q;
        double ts = timed([&] { s = is_multiplicative_serial(Twist::Octonion, p.A, p.B); });
        double tp = timed([&] { q = is_multiplicative(Twist::Octonion, p.A, p.B); });
        report("multiplicativity n=10", ts, tp,
               s.multiplicative == q.multiplicative && s.multiplicative);
    }
    {
        PairSets p = hurwitz_radon_pair(10);
        Identity id = build_identity(Twist::Octonion, p.A, p.B);
        VerificationReport s, q;
        double ts = timed([&] { s = verify_symbolic_serial(id); });
        double tp = timed([&] { q = verify_symbolic(id); });
        report("symbolic verify n=10", ts, tp, s.ok == q.ok && s.ok);
    }
    return 0;
}
