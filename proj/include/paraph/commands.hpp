#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "paraph/config.hpp"

namespace paraph {

// Parameter sweep description: a dotted config path, the values to try, and
// repetitions per value (seeded seed + rep).
struct SweepSpec {
    std::string param;
    std::vector<double> values;
    int reps = 1;
};

// Renders the configured scene and writes analytic previews (vertical and
// horizontal analyzer images) plus a polarization-degree map; logs mean
// polarization inside and outside the face region.
void cmd_render(const RunConfig& config, std::ostream& log);

// Simulates the alternating-shutter burst and writes the frame files plus a
// capture.json manifest.
void cmd_capture(const RunConfig& config, std::ostream& log);

// Consumes a captured pair and writes the display image, raw 16-bit offset
// values, the diffuse by-product, and a paraph.json manifest.
void cmd_paraph(const RunConfig& config, const std::string& frames_dir, std::ostream& log);

// Scores a processed result and writes detection.json.
void cmd_detect(const RunConfig& config, const std::string& paraph_dir, std::ostream& log);

// Runs capture/process/detect for the four named scenes and prints a decision
// table.
void cmd_demo(const RunConfig& config, std::ostream& log);

// One full in-memory run (scene, capture, pipeline, detector); used by the
// sweep and handy for tests.
DetectionResult run_detection(const RunConfig& config);

// Applies `spec.param = value` style overrides; throws ConfigError for
// unsupported paths.
void apply_sweep_param(RunConfig& config, const std::string& path, double value);

// Writes one CSV row per (value, repetition) to <out>/sweep.csv.
void cmd_sweep(const RunConfig& config, const SweepSpec& spec, std::ostream& log);

}  // namespace paraph
