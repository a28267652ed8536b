#pragma once

#include <ostream>
#include <vector>

#include "arctomo/phantom.hpp"
#include "arctomo/recon.hpp"

namespace arctomo {

// Cartesian parameter study: one phantom/forward/reconstruct/NMSE cycle per
// tuple, iterated lexicographically in the order the lists are declared.
struct SweepConfig {
    int n = 128;
    PhantomSpec phantom = PhantomSpec::derenzo();
    std::vector<double> deltas;
    std::vector<double> x0_maxes;
    std::vector<double> delta_x0s;
    std::vector<double> r_maxes;
    std::vector<double> delta_rs;
    std::vector<double> epsilons;
    double arc_step = 0.5;
    int pad_factor = 2;

    void validate() const;  // throws std::invalid_argument
};

struct SweepRecord {
    double delta;
    double x0_max;
    double delta_x0;
    double r_max;
    double delta_r;
    double epsilon;
    double nmse;
    double seconds;
};

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

// CSV with header delta,x0max,dx0,rmax,dr,epsilon,nmse,seconds; numbers are
// printed with full float64 round-trip precision.
void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out);

}  // namespace arctomo
