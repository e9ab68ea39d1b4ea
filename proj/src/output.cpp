#include "graddam1d/output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace graddam {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write output file '" + path + "'");
  }
  return out;
}

}  // namespace

void write_load_displacement_csv(const std::string& path,
                                 const std::vector<LoadStepRecord>& records) {
  std::ofstream out = open_output(path);
  out << "step,applied_displacement_mm,reaction_N,iterations\n";
  for (const LoadStepRecord& rec : records) {
    out << rec.step << ',' << format_double(rec.applied_displacement) << ','
        << format_double(rec.reaction) << ',' << rec.iterations << '\n';
  }
}

void write_profile_csv(const std::string& path, const Mesh1D& mesh,
                       const LoadStepRecord& record) {
  std::ofstream out = open_output(path);
  out << "x_mm,strain,eps_bar,kappa,omega\n";
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const Element& el = mesh.element(e);
    const double strain =
        (record.u[el.right_node] - record.u[el.left_node]) /
        mesh.element_length(e);
    out << format_double(mesh.element_centroid(e)) << ','
        << format_double(strain) << ',' << format_double(record.eps_bar[e])
        << ',' << format_double(record.kappa[e]) << ','
        << format_double(record.omega[e]) << '\n';
  }
}

void write_run_summary(const std::string& path,
                       const SimulationResult& result) {
  std::ofstream out = open_output(path);
  if (result.records.empty()) {
    out << "status: failed before the first converged step\n";
    out << "error: " << result.failure_message << "\n";
    return;
  }

  const auto peak = std::max_element(
      result.records.begin(), result.records.end(),
      [](const LoadStepRecord& a, const LoadStepRecord& b) {
        return a.reaction < b.reaction;
      });
  const LoadStepRecord& last = result.records.back();

  out << "status: " << (result.completed ? "completed" : "failed") << "\n";
  if (!result.completed) {
    out << "error: " << result.failure_message << "\n";
  }
  out << "steps_converged: " << result.records.size() << "\n";
  out << "peak_reaction_N: " << format_double(peak->reaction) << "\n";
  out << "peak_step: " << peak->step << "\n";
  out << "peak_applied_displacement_mm: "
      << format_double(peak->applied_displacement) << "\n";
  out << "final_applied_displacement_mm: "
      << format_double(last.applied_displacement) << "\n";
  out << "final_omega_max: " << format_double(last.omega.maxCoeff()) << "\n";
}

void write_plot_script(const std::string& path) {
  std::ofstream out = open_output(path);
  out << R"(#!/usr/bin/env python3
"""Plot load-displacement curves and final profiles from the CSV files
written next to this script."""
import glob
import os
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))


def read_csv(path):
    with open(path) as f:
        header = f.readline().strip().split(",")
        cols = {name: [] for name in header}
        for line in f:
            for name, value in zip(header, line.strip().split(",")):
                cols[name].append(float(value))
    return cols


ld = read_csv(os.path.join(here, "load_displacement.csv"))
fig, ax = plt.subplots()
ax.plot(ld["applied_displacement_mm"], ld["reaction_N"], "-")
ax.set_xlabel("applied displacement [mm]")
ax.set_ylabel("reaction [N]")
ax.grid(True, alpha=0.3)
fig.savefig(os.path.join(here, "load_displacement.png"), dpi=150)

profiles = sorted(glob.glob(os.path.join(here, "profile_*.csv")))
if profiles:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4))
    for path in profiles:
        prof = read_csv(path)
        label = os.path.splitext(os.path.basename(path))[0]
        ax1.plot(prof["x_mm"], prof["omega"], label=label)
        ax2.plot(prof["x_mm"], prof["eps_bar"], label=label)
    ax1.set_xlabel("x [mm]")
    ax1.set_ylabel("damage")
    ax2.set_xlabel("x [mm]")
    ax2.set_ylabel("nonlocal equivalent strain")
    for ax in (ax1, ax2):
        ax.grid(True, alpha=0.3)
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(os.path.join(here, "profiles.png"), dpi=150)

print("wrote figures to", here)
)";
}

}  // namespace graddam
