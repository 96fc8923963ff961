#pragma once

#include "qcq/channels.hpp"
#include "qcq/qubit_core.hpp"

namespace qcq {

// Holevo information of a unital qubit channel, 1 - h(M_Phi).
double unital_capacity(const PauliChannel& ch);

struct HolevoSolution {
    double chi = 0.0;     // bits per use
    double z_star = 0.0;  // optimal encoding latitude
    BlochVector r_plus;
    BlochVector r_minus;
};

// chi^(1)(A_{p,n}) by direct 1-D maximization over the ensemble latitude z:
// coarse grid at step 1e-3, then golden-section refinement to |dz| < 1e-10.
HolevoSolution gad_holevo(double p, double n);

// The ensemble objective at a fixed latitude z (exposed for oracles).
double gad_holevo_objective(double p, double n, double z);

// Closed-form chi evaluated from a given z_star; cross-check only, not the
// production path.
double gad_holevo_closed_form(double p, double n, double z_star);

struct InducedChannelResult {
    BinaryChannel channel;
    double capacity = 0.0;
};

// N1: computational-basis encoding/decoding; BAC(pn, p(1-n)).
InducedChannelResult induced_n1(double p, double n);

// N2: optimal-axis encoding of the unital construction carried to general n.
InducedChannelResult induced_n2(double p, double n);

struct InducedN3Result {
    double flip = 0.0;  // q = (1 - sqrt(1-p))/2
    double capacity = 0.0;
};

// N3: equatorial ensemble with |x+> decoding; a BSC independent of n.
InducedN3Result induced_n3(double p);

struct InducedChannelReport {
    double c_n1 = 0.0, c_n2 = 0.0, c_n3 = 0.0;
    BinaryChannel n1, n2;
    double n3_flip = 0.0;
    double chi = 0.0;
    double delta = 0.0;  // chi - c_n3
};

InducedChannelReport induced_report(double p, double n);

}  // namespace qcq
