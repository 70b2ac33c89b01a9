#pragma once

#include <optional>
#include <string>

#include "paraph/canonical.hpp"
#include "paraph/capture.hpp"
#include "paraph/detector.hpp"
#include "paraph/pipeline.hpp"

namespace paraph {

// Full run description. Every field has a documented default; parsing rejects
// unknown keys so typos fail loudly instead of silently using defaults.
struct RunConfig {
    uint64_t seed = 42;
    std::string out_dir = "out";
    SceneSpec scene;
    Illumination illumination;
    CaptureRig rig;               // rng_seed is derived from seed
    int n_frames = 2;
    PipelineConfig pipeline;
    bool floor_auto = true;       // pipeline.floor derived from rig noise model
    DetectorConfig detector;
    bool roi_from_scene = true;   // detector.roi defaults to the scene face region
};

// Calibrated defaults, frozen against the canonical seed-42 scenes.
double default_structure_threshold();
double default_uniformity_threshold();

// Division guard derived from the rig: covers the dark pedestal in both
// frames plus a noise margin, so dark-region read noise cannot blow up the
// normalized difference.
double auto_floor(const CaptureRig& rig);

RunConfig default_run_config();

// Parses the JSON text of a config document; path is used in messages.
RunConfig parse_run_config(const std::string& json_text, const std::string& path);

RunConfig load_run_config(const std::string& path);

// Applies resolved defaults that depend on other fields (rng seed, floor,
// detector roi needs the scene, so it is resolved by callers that built one).
void finalize_config(RunConfig& config);

}  // namespace paraph
