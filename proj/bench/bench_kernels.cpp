// Timing comparison of the serial and OpenMP check kernels on the largest
// object we can comfortably build: U(sl2) twisted by Q8 through the swap
// involution (E <-> F, H -> -H), 280 basis vectors at degree 4.

#include <chrono>
#include <cstdio>
#include <map>

#include "hopfcat/axioms.hpp"
#include "hopfcat/catalog.hpp"
#include "hopfcat/exactness.hpp"

using namespace hopfcat;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/* Q8 acts through its C2 quotient {1, -1, k, -k} -> identity. */
HopfAction q8_on_sl2() {
    FiniteGroup q8 = catalog::quaternion8();
    LieAlgebra sl2 = catalog::sl2();
    std::vector<LinComb> swap = {{{1, rat(1)}}, {{0, rat(1)}}, {{2, rat(-1)}}};
    std::vector<LinComb> id = {{{0, rat(1)}}, {{1, rat(1)}}, {{2, rat(1)}}};
    std::map<std::uint32_t, std::vector<LinComb>> rho;
    for (const char* name : {"i", "ni", "j", "nj"}) rho[*q8.index_of(name)] = swap;
    for (const char* name : {"ne", "k", "nk"}) rho[*q8.index_of(name)] = id;
    return HopfAction::make(std::move(q8), std::move(sl2), std::move(rho));
}

template <typename F>
double timed(const char* label, ExecMode mode, F&& body) {
    const auto t0 = Clock::now();
    body(mode);
    const double ms = ms_since(t0);
    std::printf("%-28s %-8s %9.1f ms\n", label,
                mode == ExecMode::Serial ? "serial" : "parallel", ms);
    return ms;
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    HopfAction action = q8_on_sl2();
    auto h = HopfPresentation::smash(action, 4, "U(sl2) x| K[Q8]");
    std::printf("construction                          %9.1f ms  (dim %u)\n",
                ms_since(t0), h->dim());

    Verdict probe = check_hopf_axioms(*h, ExecMode::Serial);
    std::printf("axiom sweep: %s, %zu associativity instances\n",
                probe.pass ? "pass" : "FAIL", probe.find("associativity")->items);

    for (const char* label : {"axiom sweep", "decompose", "hopf kernel of retraction"}) {
        double serial = 0, parallel = 0;
        auto body = [&](ExecMode mode) {
            if (label[0] == 'a') {
                check_hopf_axioms(*h, mode);
            } else if (label[0] == 'd') {
                decompose(h, mode);
            } else {
                Decomposition dec = decompose(h, mode);
                hkernel(dec.p, mode);
            }
        };
        serial = timed(label, ExecMode::Serial, body);
        parallel = timed(label, ExecMode::Parallel, body);
        std::printf("%-28s speedup  %9.2fx\n", "", serial / parallel);
    }
    return 0;
}
