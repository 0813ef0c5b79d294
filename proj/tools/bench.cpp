// Serial vs OpenMP timing for the exhaustive-scan kernels on scaled-up
// instances, with agreement checked on every run.

#include <chrono>
#include <cstdio>
#include <string>

#include "gsv/comonad.hpp"
#include "gsv/duplicial.hpp"
#include "gsv/fingroup.hpp"
#include "gsv/scan.hpp"

using namespace gsv;

namespace {

template <class Fn>
double time_of(Fn&& fn, int repeats = 3) {
  double best = 1e30;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::printf("%-42s %10.4fs %10.4fs %7.2fx  %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, agree ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("%-42s %11s %11s %8s\n", "workload", "serial", "openmp", "speedup");

  // Brute cyclicity over a large simplex space.
  {
    const GroupPtr g = dihedral_group(4);
    const GSet l = regular_gset(g);
    const GSet n = regular_gset(g);
    std::vector<int> h(l.size), f(n.size);
    for (int i = 0; i < l.size; ++i) h[i] = i;
    for (int i = 0; i < n.size; ++i) f[i] = i;
    const CoefficientConfig cfg =
        make_config(l, n, h, CodomainAction::translation, f, Group::identity, "bench");
    const DuplicialOp op = make_duplicial(cfg);
    const int cap = 5;  // 8^5 * 8 simplices at the top level
    Verdict vs, vp;
    scan::mode() = scan::Mode::serial;
    const double ts = time_of([&] { vs = cyclicity(op, cap).brute; });
    scan::mode() = scan::Mode::parallel;
    const double tp = time_of([&] { vp = cyclicity(op, cap).brute; });
    row("cyclicity brute D4 x regular, cap 5", ts, tp, vs.pass == vp.pass);
  }

  // Comonad laws over a large probe universe (order-24 group).
  {
    const GroupPtr g = symmetric_group(4);
    ProbeUniverse u;
    u.objects.push_back(regular_gset(g));
    u.objects.push_back(conj_gset(g));
    const Comonad s = build_S(regular_gset(g));
    LawReport rs, rp;
    scan::mode() = scan::Mode::serial;
    const double ts = time_of([&] { rs = check_comonad_laws(s, u); });
    scan::mode() = scan::Mode::parallel;
    const double tp = time_of([&] { rp = check_comonad_laws(s, u); });
    row("comonad laws S(regular) over S4 probes", ts, tp, rs.pass() == rp.pass());
  }

  // Distributive-law diagrams at order 24.
  {
    const GroupPtr g = symmetric_group(4);
    ProbeUniverse u;
    u.objects.push_back(regular_gset(g));
    const GSet l = regular_gset(g);
    auto cand = [&l](const GSet& x) { return chi_inverse_component(l, x); };
    LawReport rs, rp;
    scan::mode() = scan::Mode::serial;
    const double ts = time_of([&] { rs = check_distributive_law(l, cand, u); });
    scan::mode() = scan::Mode::parallel;
    const double tp = time_of([&] { rp = check_distributive_law(l, cand, u); });
    row("distributive diagrams S4, L=regular", ts, tp, rs.pass() == rp.pass());
  }

  scan::mode() = scan::Mode::parallel;
  return 0;
}
