// Compares the serial reference enumeration against the OpenMP kernels:
// MIS subset scans on wide agendas and the lemma sweep over all small
// agendas.

#include <chrono>
#include <iostream>

#include "bba/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bba::Agenda wide_agenda(int worlds, int pairs) {
  bba::Universe u = bba::Universe::of(worlds);
  std::vector<bba::WorldSet> sets;
  bba::WorldSet full = u.full();
  for (bba::WorldSet s = 1; s < full && static_cast<int>(sets.size()) < pairs; ++s)
    if (s < (full & ~s)) sets.push_back(s);
  return bba::make_agenda(u, sets, true);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (no OpenMP)\n";
#endif

  {
    bba::Agenda a = wide_agenda(5, 10);  // 20 issues, 2^20 subsets
    auto t0 = std::chrono::steady_clock::now();
    bba::MisFamily serial = bba::minimally_inconsistent_subsets_serial(a);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    bba::MisFamily parallel = bba::minimally_inconsistent_subsets(a);
    double tp = seconds_since(t0);
    bool same = serial.sets == parallel.sets;
    std::cout << "mis scan (20 issues): serial " << ts << "s, parallel " << tp
              << "s, speedup " << ts / tp << "x, results "
              << (same ? "identical" : "DIFFER") << ", " << serial.sets.size()
              << " sets\n";
    if (!same) return 1;
  }

  {
    auto t0 = std::chrono::steady_clock::now();
    bba::VerificationRun serial = bba::verify_lemmas(4, 3, false);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    bba::VerificationRun parallel = bba::verify_lemmas(4, 3, true);
    double tp = seconds_since(t0);
    bool same = serial.failures == parallel.failures &&
                serial.check_counts == parallel.check_counts;
    std::cout << "lemma sweep (|W|=4, 3 pairs, " << serial.agendas_checked
              << " agendas): serial " << ts << "s, parallel " << tp << "s, speedup "
              << ts / tp << "x, results " << (same ? "identical" : "DIFFER") << "\n";
    if (!same || !serial.ok()) return 1;
  }

  return 0;
}
