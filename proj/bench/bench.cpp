// Serial reference vs OpenMP kernels. Results are compared before timing is
// reported; a mismatch exits 1.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "kunzsg/cross_validate.hpp"
#include "kunzsg/parallel.hpp"

using namespace kunzsg;

namespace {

template <class F>
double best_of(int reps, F&& f)
{
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char* what, int m, Int bound, double serial, double parallel)
{
    std::printf("%-16s m=%d bound=%-3lld serial %9.4fs  parallel %9.4fs  speedup %5.2fx\n", what, m,
                static_cast<long long>(bound), serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"kunzsg benchmark"};
    int reps = 3;
    app.add_option("--reps", reps, "repetitions, best time is reported")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", max_threads());
    int bad = 0;

    for (auto [m, bound] : {std::pair{3, Int{400}}, {4, Int{40}}, {5, Int{14}}, {6, Int{9}}}) {
        const auto a = enumerate_kunz(m, bound);
        const auto b = enumerate_kunz_parallel(m, bound);
        if (a != b) {
            std::printf("enumerate_kunz m=%d bound=%lld: results differ\n", m, static_cast<long long>(bound));
            ++bad;
        }
        row("enumerate_kunz", m, bound, best_of(reps, [&] { (void)enumerate_kunz(m, bound); }),
            best_of(reps, [&] { (void)enumerate_kunz_parallel(m, bound); }));
    }

    for (auto [m, bound] : {std::pair{3, Int{8}}, {4, Int{8}}, {5, Int{6}}, {6, Int{4}}}) {
        const auto a = cross_validate_serial(m, bound);
        const auto b = cross_validate(m, bound);
        if (a.failures != b.failures || a.notes != b.notes || a.vectors != b.vectors) {
            std::printf("cross_validate m=%d bound=%lld: reports differ\n", m, static_cast<long long>(bound));
            ++bad;
        }
        row("cross_validate", m, bound, best_of(reps, [&] { (void)cross_validate_serial(m, bound); }),
            best_of(reps, [&] { (void)cross_validate(m, bound); }));
    }
    return bad == 0 ? 0 : 1;
}
