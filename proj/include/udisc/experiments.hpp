#pragma once

#include <string>
#include <vector>

namespace udisc {

// Canned experiments reproducing the toolkit's headline numbers; each prints
// one PASS/FAIL verdict with supporting figures.
struct ExperimentResult {
  std::string id;
  bool pass = false;
  std::vector<std::string> lines;
};

ExperimentResult run_sharp_bounds();
ExperimentResult run_koebe_extremal();
ExperimentResult run_critical_c();
ExperimentResult run_valence_sweep();
ExperimentResult run_horodisc();
ExperimentResult run_distortion_envelopes();
ExperimentResult run_harmonic_reduction();
ExperimentResult run_carleson_profile();

const std::vector<std::string>& experiment_ids();
ExperimentResult run_experiment(const std::string& id);

}  // namespace udisc
