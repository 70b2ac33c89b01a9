#include "paraph/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "paraph/errors.hpp"

namespace paraph {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& section,
                const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ConfigError("config section '" + section + "' must be an object");
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key()))
            throw ConfigError("unknown key '" + item.key() + "' in config section '" + section +
                              "'");
    }
}

double get_number(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw ConfigError(std::string("config key '") + key + "' must be a number");
    return obj[key].get<double>();
}

int get_int(const json& obj, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer())
        throw ConfigError(std::string("config key '") + key + "' must be an integer");
    return obj[key].get<int>();
}

bool get_bool(const json& obj, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_boolean())
        throw ConfigError(std::string("config key '") + key + "' must be a boolean");
    return obj[key].get<bool>();
}

void parse_scene(const json& obj, SceneSpec& scene) {
    check_keys(obj, "scene",
               {"name", "width", "height", "lcd_leakage", "lcd_black_level", "gloss_dop",
                "gloss_phi_deg", "matte_residual_dop", "photo_blur_sigma"});
    if (obj.contains("name")) {
        if (!obj["name"].is_string()) throw ConfigError("scene.name must be a string");
        scene.name = obj["name"].get<std::string>();
    }
    scene.width = get_int(obj, "width", scene.width);
    scene.height = get_int(obj, "height", scene.height);
    scene.lcd_leakage = get_number(obj, "lcd_leakage", scene.lcd_leakage);
    scene.lcd_black_level = get_number(obj, "lcd_black_level", scene.lcd_black_level);
    scene.gloss_dop = get_number(obj, "gloss_dop", scene.gloss_dop);
    scene.gloss_phi_deg = get_number(obj, "gloss_phi_deg", scene.gloss_phi_deg);
    scene.matte_residual_dop = get_number(obj, "matte_residual_dop", scene.matte_residual_dop);
    scene.photo_blur_sigma = get_number(obj, "photo_blur_sigma", scene.photo_blur_sigma);
    if (scene.lcd_leakage < 0.0 || scene.lcd_leakage >= 0.5)
        throw ConfigError("scene.lcd_leakage must lie in [0, 0.5)");
    if (scene.photo_blur_sigma < 0.0)
        throw ConfigError("scene.photo_blur_sigma must be non-negative");
}

void parse_illumination(const json& obj, Illumination& illum) {
    check_keys(obj, "illumination",
               {"direction", "intensity", "ambient", "left_wall_attenuation"});
    if (obj.contains("direction")) {
        const json& d = obj["direction"];
        if (!d.is_array() || d.size() != 3)
            throw ConfigError("illumination.direction must be a 3-element array");
        illum.direction = normalized(Vec3{d[0].get<double>(), d[1].get<double>(), d[2].get<double>()});
    }
    illum.intensity = get_number(obj, "intensity", illum.intensity);
    illum.ambient = get_number(obj, "ambient", illum.ambient);
    illum.left_wall_attenuation =
        get_number(obj, "left_wall_attenuation", illum.left_wall_attenuation);
    if (illum.intensity < 0.0 || illum.ambient < 0.0)
        throw ConfigError("illumination intensity and ambient must be non-negative");
}

void parse_rig(const json& obj, CaptureRig& rig, int& n_frames) {
    check_keys(obj, "rig",
               {"frame_rate", "read_noise_sigma", "dark_floor", "bit_depth", "motion_per_frame",
                "tnlc_contrast", "quantize", "n_frames"});
    rig.frame_rate = get_number(obj, "frame_rate", rig.frame_rate);
    rig.read_noise_sigma = get_number(obj, "read_noise_sigma", rig.read_noise_sigma);
    rig.dark_floor = get_number(obj, "dark_floor", rig.dark_floor);
    rig.bit_depth = get_int(obj, "bit_depth", rig.bit_depth);
    rig.tnlc_contrast = get_number(obj, "tnlc_contrast", rig.tnlc_contrast);
    rig.quantize = get_bool(obj, "quantize", rig.quantize);
    n_frames = get_int(obj, "n_frames", n_frames);
    if (obj.contains("motion_per_frame")) {
        const json& m = obj["motion_per_frame"];
        check_keys(m, "rig.motion_per_frame", {"dx", "dy"});
        rig.motion_dx = get_number(m, "dx", rig.motion_dx);
        rig.motion_dy = get_number(m, "dy", rig.motion_dy);
    }
    if (rig.bit_depth != 8 && rig.bit_depth != 16)
        throw ConfigError("rig.bit_depth must be 8 or 16");
    if (rig.read_noise_sigma < 0.0 || rig.dark_floor < 0.0)
        throw ConfigError("rig noise parameters must be non-negative");
    if (n_frames < 2) throw ConfigError("rig.n_frames must be at least 2");
}

void parse_pipeline(const json& obj, PipelineConfig& pipeline, bool& floor_auto) {
    check_keys(obj, "pipeline", {"sigma", "floor", "align", "max_shift"});
    pipeline.sigma = get_number(obj, "sigma", pipeline.sigma);
    pipeline.align = get_bool(obj, "align", pipeline.align);
    pipeline.max_shift = get_int(obj, "max_shift", pipeline.max_shift);
    if (obj.contains("floor")) {
        const json& f = obj["floor"];
        if (f.is_string() && f.get<std::string>() == "auto") {
            floor_auto = true;
        } else if (f.is_number()) {
            pipeline.floor = f.get<double>();
            floor_auto = false;
            if (pipeline.floor < 0.0) throw ConfigError("pipeline.floor must be non-negative");
        } else {
            throw ConfigError("pipeline.floor must be a number or \"auto\"");
        }
    }
    if (!(pipeline.sigma > 0.0)) throw ConfigError("pipeline.sigma must be positive");
    if (pipeline.max_shift < 0) throw ConfigError("pipeline.max_shift must be non-negative");
}

void parse_detector(const json& obj, DetectorConfig& det, bool& roi_from_scene) {
    check_keys(obj, "detector",
               {"roi", "structure_threshold", "uniformity_threshold", "sigma_fine",
                "sigma_coarse"});
    det.structure_threshold = get_number(obj, "structure_threshold", det.structure_threshold);
    det.uniformity_threshold = get_number(obj, "uniformity_threshold", det.uniformity_threshold);
    det.sigma_fine = get_number(obj, "sigma_fine", det.sigma_fine);
    det.sigma_coarse = get_number(obj, "sigma_coarse", det.sigma_coarse);
    if (obj.contains("roi")) {
        const json& r = obj["roi"];
        if (r.is_string() && r.get<std::string>() == "face") {
            roi_from_scene = true;
        } else if (r.is_array() && r.size() == 4) {
            det.roi = Rect{r[0].get<int>(), r[1].get<int>(), r[2].get<int>(), r[3].get<int>()};
            roi_from_scene = false;
        } else {
            throw ConfigError("detector.roi must be \"face\" or [x, y, w, h]");
        }
    }
    if (!(det.sigma_fine > 0.0) || !(det.sigma_coarse > det.sigma_fine))
        throw ConfigError("detector sigmas must satisfy 0 < sigma_fine < sigma_coarse");
}

}  // namespace

double default_structure_threshold() { return 0.35; }
double default_uniformity_threshold() { return 0.80; }

double auto_floor(const CaptureRig& rig) {
    return 2.0 * rig.dark_floor + 6.0 * rig.read_noise_sigma;
}

RunConfig default_run_config() {
    RunConfig config;
    config.illumination.direction = normalized(Vec3{0.35, -0.30, 0.90});
    config.illumination.intensity = 1.0;
    config.illumination.ambient = 0.015;
    config.illumination.left_wall_attenuation = 0.25;
    config.rig.read_noise_sigma = 0.02;
    config.rig.dark_floor = 0.004;
    config.detector.structure_threshold = default_structure_threshold();
    config.detector.uniformity_threshold = default_uniformity_threshold();
    return config;
}

RunConfig parse_run_config(const std::string& json_text, const std::string& path) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("cannot parse config " + path + ": " + e.what());
    }
    check_keys(doc, "(top level)",
               {"seed", "out", "scene", "illumination", "rig", "pipeline", "detector"});

    RunConfig config = default_run_config();
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
            throw ConfigError("seed must be an integer");
        config.seed = doc["seed"].get<uint64_t>();
    }
    if (doc.contains("out")) {
        if (!doc["out"].is_string()) throw ConfigError("out must be a string");
        config.out_dir = doc["out"].get<std::string>();
    }
    if (doc.contains("scene")) parse_scene(doc["scene"], config.scene);
    if (doc.contains("illumination")) parse_illumination(doc["illumination"], config.illumination);
    if (doc.contains("rig")) parse_rig(doc["rig"], config.rig, config.n_frames);
    if (doc.contains("pipeline")) parse_pipeline(doc["pipeline"], config.pipeline, config.floor_auto);
    if (doc.contains("detector")) parse_detector(doc["detector"], config.detector, config.roi_from_scene);

    finalize_config(config);
    return config;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str(), path);
}

void finalize_config(RunConfig& config) {
    config.rig.rng_seed = config.seed;
    if (config.floor_auto) config.pipeline.floor = auto_floor(config.rig);
}

}  // namespace paraph
