// Benchmark: OpenMP-parallel enumeration sweeps against the serial
// reference paths, checking that both produce identical results.

#include "suq/classifier.hpp"
#include "suq/paper_props.hpp"
#include "suq/report_json.hpp"

#ifdef SUQ_HAVE_OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <iostream>

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
#ifdef SUQ_HAVE_OPENMP
    std::cout << "OpenMP enabled, max threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP disabled; both runs are serial\n";
#endif

    {
        suq::VerifyOptions serial{6, 3, 4, 0, /*parallel=*/false};
        suq::VerifyOptions parallel{6, 3, 4, 0, /*parallel=*/true};
        std::vector<suq::CounterexampleRecord> a, b;
        const double ts = time_ms([&] { a = suq::verify_esn_es2n_ampl_eson(serial); });
        const double tp = time_ms([&] { b = suq::verify_esn_es2n_ampl_eson(parallel); });
        std::cout << "verify (n<=6):   serial " << ts << " ms, parallel " << tp
                  << " ms, speedup " << (tp > 0 ? ts / tp : 0.0) << "x, records "
                  << a.size() << "/" << b.size()
                  << (a.size() == b.size() ? " (match)" : " (MISMATCH)") << "\n";
    }

    {
        suq::SweepOptions serial{2, 6, 2, suq::kDefaultSearchBudget, false};
        suq::SweepOptions parallel{2, 6, 2, suq::kDefaultSearchBudget, true};
        std::string a, b;
        const double ts = time_ms([&] { a = suq::sweep_csv(suq::sweep(serial)); });
        const double tp = time_ms([&] { b = suq::sweep_csv(suq::sweep(parallel)); });
        std::cout << "sweep (r 2..6):  serial " << ts << " ms, parallel " << tp
                  << " ms, speedup " << (tp > 0 ? ts / tp : 0.0) << "x, output "
                  << (a == b ? "byte-identical" : "MISMATCH") << "\n";
        if (a != b) return 1;
    }
    return 0;
}
