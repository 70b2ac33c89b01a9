#include "paraph/commands.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "paraph/errors.hpp"
#include "paraph/pnm.hpp"

namespace paraph {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
}

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << doc.dump(2) << '\n';
    if (!out) throw IoError("write failure: " + path);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
}

json roi_to_json(Rect r) { return json::array({r.x, r.y, r.w, r.h}); }

Rect roi_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw IoError("malformed roi in manifest");
    return Rect{j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

struct Rendered {
    Scene scene;
    TRSField field;
};

Rendered build_scene(const RunConfig& config) {
    Rendered r;
    r.scene = make_canonical_scene(config.scene, config.illumination, config.seed);
    r.field = render_trs_field(r.scene, config.illumination);
    return r;
}

Rect detector_roi(const RunConfig& config, Rect scene_roi) {
    return config.roi_from_scene ? scene_roi : config.detector.roi;
}

// Mean of a single-channel image inside/outside a region.
std::pair<double, double> mean_in_out(const ImageF& img, Rect roi) {
    double in_sum = 0.0, out_sum = 0.0;
    long long in_n = 0, out_n = 0;
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            if (roi.contains(x, y)) {
                in_sum += img.at(x, y);
                ++in_n;
            } else {
                out_sum += img.at(x, y);
                ++out_n;
            }
        }
    }
    return {in_n ? in_sum / in_n : 0.0, out_n ? out_sum / out_n : 0.0};
}

}  // namespace

void cmd_render(const RunConfig& config, std::ostream& log) {
    Rendered r = build_scene(config);
    ensure_dir(config.out_dir);

    ImageF iv = field_intensity(r.field, Angle{0.0});
    ImageF ih = field_intensity(r.field, Angle{90.0});
    ImageF dop = field_dop(r.field);

    const char* ext = r.field.channels() == 3 ? ".ppm" : ".pgm";
    write_pnm_file(join(config.out_dir, std::string("preview_iv") + ext), from_linear(iv, 255));
    write_pnm_file(join(config.out_dir, std::string("preview_ih") + ext), from_linear(ih, 255));
    write_pnm_file(join(config.out_dir, "dop.pgm"), from_linear(dop, 255));

    auto [mean_in, mean_out] = mean_in_out(dop, r.scene.face_roi);
    log << "scene=" << config.scene.name << " seed=" << config.seed
        << " mean_dop_face=" << format_double(mean_in)
        << " mean_dop_background=" << format_double(mean_out) << "\n";
}

void cmd_capture(const RunConfig& config, std::ostream& log) {
    Rendered r = build_scene(config);
    ensure_dir(config.out_dir);

    std::vector<PolarizedFrame> frames = capture_sequence(r.field, config.rig, config.n_frames);
    int maxval = config.rig.bit_depth == 16 ? 65535 : 255;
    const char* ext = r.field.channels() == 3 ? ".ppm" : ".pgm";

    json manifest;
    manifest["scene"] = config.scene.name;
    manifest["seed"] = config.seed;
    manifest["width"] = r.field.width();
    manifest["height"] = r.field.height();
    manifest["channels"] = r.field.channels();
    manifest["face_roi"] = roi_to_json(r.scene.face_roi);
    manifest["rig"] = {{"read_noise_sigma", config.rig.read_noise_sigma},
                       {"dark_floor", config.rig.dark_floor},
                       {"bit_depth", config.rig.bit_depth},
                       {"tnlc_contrast", config.rig.tnlc_contrast},
                       {"motion_per_frame", {{"dx", config.rig.motion_dx}, {"dy", config.rig.motion_dy}}},
                       {"frame_rate", config.rig.frame_rate},
                       {"quantize", config.rig.quantize}};
    json frame_list = json::array();

    for (const PolarizedFrame& frame : frames) {
        char name[32];
        std::snprintf(name, sizeof(name), "frame_%03d%s", frame.frame_index, ext);
        write_pnm_file(join(config.out_dir, name), from_linear(frame.pixels, maxval));
        frame_list.push_back({{"file", name},
                              {"index", frame.frame_index},
                              {"state", frame.tnlc_state == TnlcState::Unpowered ? "h" : "v"}});
    }
    manifest["frames"] = frame_list;
    write_json_file(join(config.out_dir, "capture.json"), manifest);
    log << "captured " << frames.size() << " frames to " << config.out_dir << "\n";
}

void cmd_paraph(const RunConfig& config, const std::string& frames_dir, std::ostream& log) {
    json manifest = load_json_file(join(frames_dir, "capture.json"));
    if (!manifest.contains("frames") || !manifest["frames"].is_array() ||
        manifest["frames"].empty())
        throw PipelineError("paraph: capture manifest lists no frames");

    std::vector<PolarizedFrame> frames;
    for (const json& entry : manifest["frames"]) {
        PolarizedFrame frame;
        PnmImage pnm = read_pnm_file(join(frames_dir, entry["file"].get<std::string>()));
        frame.pixels = to_linear(pnm);
        frame.frame_index = entry["index"].get<int>();
        frame.tnlc_state =
            entry["state"].get<std::string>() == "h" ? TnlcState::Unpowered : TnlcState::Powered;
        frame.quantized = true;
        frame.bit_depth = pnm.maxval == 65535 ? 16 : 8;
        frames.push_back(std::move(frame));
    }
    for (size_t i = 1; i < frames.size(); ++i)
        if (!frames[i].pixels.same_shape(frames[0].pixels))
            throw PipelineError("paraph: frame dimensions differ");

    PipelineResult result = run_pipeline(frames, config.pipeline);
    ensure_dir(config.out_dir);

    const char* ext = result.paraph.channels() == 3 ? ".ppm" : ".pgm";
    write_pnm_file(join(config.out_dir, std::string("paraph_raw") + ext),
                   encode_signed16(result.paraph));
    write_pnm_file(join(config.out_dir, "paraph_display.pgm"), from_display(result.display));
    write_pnm_file(join(config.out_dir, std::string("diffuse") + ext),
                   from_linear(result.diffuse, 65535));

    json out;
    out["source"] = "capture.json";
    out["face_roi"] = manifest.contains("face_roi") ? manifest["face_roi"] : json();
    out["scene"] = manifest.contains("scene") ? manifest["scene"] : json("unknown");
    out["sigma"] = config.pipeline.sigma;
    out["floor"] = config.pipeline.floor;
    out["align"] = config.pipeline.align;
    out["align_shift"] = {result.align_shift[0], result.align_shift[1]};
    write_json_file(join(config.out_dir, "paraph.json"), out);
    log << "paraph image written to " << config.out_dir << "\n";
}

void cmd_detect(const RunConfig& config, const std::string& paraph_dir, std::ostream& log) {
    json manifest = load_json_file(join(paraph_dir, "paraph.json"));

    std::string raw_path = join(paraph_dir, "paraph_raw.ppm");
    if (!fs::exists(raw_path)) raw_path = join(paraph_dir, "paraph_raw.pgm");
    std::string diffuse_path = join(paraph_dir, "diffuse.ppm");
    if (!fs::exists(diffuse_path)) diffuse_path = join(paraph_dir, "diffuse.pgm");

    ImageF paraph = decode_signed16(read_pnm_file(raw_path));
    ImageF diffuse = to_linear(read_pnm_file(diffuse_path));

    DetectorConfig det = config.detector;
    det.roi = detector_roi(config, manifest["face_roi"].is_null()
                                       ? Rect{0, 0, paraph.width(), paraph.height()}
                                       : roi_from_json(manifest["face_roi"]));

    DetectionResult result = classify(paraph, diffuse, det);
    ensure_dir(config.out_dir);

    json out;
    out["structure_score"] = result.structure_score;
    out["uniformity_score"] = result.uniformity_score;
    out["decision"] = to_string(result.decision);
    out["config"] = {{"roi", roi_to_json(det.roi)},
                     {"structure_threshold", det.structure_threshold},
                     {"uniformity_threshold", det.uniformity_threshold},
                     {"sigma_fine", det.sigma_fine},
                     {"sigma_coarse", det.sigma_coarse}};
    write_json_file(join(config.out_dir, "detection.json"), out);

    log << "decision=" << to_string(result.decision)
        << " structure=" << format_double(result.structure_score)
        << " uniformity=" << format_double(result.uniformity_score) << "\n";
}

void cmd_demo(const RunConfig& config, std::ostream& log) {
    static const char* kScenes[] = {"live", "lcd", "glossy", "matte"};
    ensure_dir(config.out_dir);

    json summary;
    log << "scene     structure   uniformity  decision\n";
    for (const char* name : kScenes) {
        RunConfig scene_config = config;
        scene_config.scene.name = name;
        scene_config.out_dir = join(config.out_dir, name);
        finalize_config(scene_config);

        std::ostringstream devnull;
        cmd_render(scene_config, devnull);
        cmd_capture(scene_config, devnull);
        cmd_paraph(scene_config, scene_config.out_dir, devnull);
        cmd_detect(scene_config, scene_config.out_dir, devnull);

        json detection = load_json_file(join(scene_config.out_dir, "detection.json"));
        summary[name] = detection;

        char row[128];
        std::snprintf(row, sizeof(row), "%-8s %10.6f %11.6f  %s", name,
                      detection["structure_score"].get<double>(),
                      detection["uniformity_score"].get<double>(),
                      detection["decision"].get<std::string>().c_str());
        log << row << "\n";
    }
    write_json_file(join(config.out_dir, "decisions.json"), summary);
}

DetectionResult run_detection(const RunConfig& config) {
    Rendered r = build_scene(config);
    std::vector<PolarizedFrame> frames = capture_sequence(r.field, config.rig, config.n_frames);
    PipelineResult result = run_pipeline(frames, config.pipeline);
    DetectorConfig det = config.detector;
    det.roi = detector_roi(config, r.scene.face_roi);
    return classify(result.paraph, result.diffuse, det);
}

void apply_sweep_param(RunConfig& config, const std::string& path, double value) {
    if (path == "rig.read_noise_sigma") config.rig.read_noise_sigma = value;
    else if (path == "rig.dark_floor") config.rig.dark_floor = value;
    else if (path == "rig.tnlc_contrast") config.rig.tnlc_contrast = value;
    else if (path == "rig.frame_rate") config.rig.frame_rate = value;
    else if (path == "rig.motion_per_frame.dx") config.rig.motion_dx = value;
    else if (path == "rig.motion_per_frame.dy") config.rig.motion_dy = value;
    else if (path == "pipeline.sigma") config.pipeline.sigma = value;
    else if (path == "pipeline.floor") { config.pipeline.floor = value; config.floor_auto = false; }
    else if (path == "illumination.intensity") config.illumination.intensity = value;
    else if (path == "illumination.ambient") config.illumination.ambient = value;
    else if (path == "illumination.left_wall_attenuation") config.illumination.left_wall_attenuation = value;
    else if (path == "scene.lcd_leakage") config.scene.lcd_leakage = value;
    else if (path == "scene.gloss_dop") config.scene.gloss_dop = value;
    else if (path == "scene.gloss_phi_deg") config.scene.gloss_phi_deg = value;
    else if (path == "scene.matte_residual_dop") config.scene.matte_residual_dop = value;
    else if (path == "scene.photo_blur_sigma") config.scene.photo_blur_sigma = value;
    else if (path == "detector.structure_threshold") config.detector.structure_threshold = value;
    else if (path == "detector.uniformity_threshold") config.detector.uniformity_threshold = value;
    else throw ConfigError("unknown sweep parameter path: " + path);
}

void cmd_sweep(const RunConfig& config, const SweepSpec& spec, std::ostream& log) {
    if (spec.values.empty()) throw ConfigError("sweep: empty value list");
    if (spec.reps < 1) throw ConfigError("sweep: reps must be at least 1");

    ensure_dir(config.out_dir);
    std::string path = join(config.out_dir, "sweep.csv");
    std::ofstream csv(path, std::ios::binary);
    if (!csv) throw IoError("cannot open for writing: " + path);
    csv << "param,value,rep,seed,structure_score,uniformity_score,decision\n";

    for (double value : spec.values) {
        for (int rep = 0; rep < spec.reps; ++rep) {
            RunConfig run = config;
            run.seed = config.seed + static_cast<uint64_t>(rep);
            apply_sweep_param(run, spec.param, value);
            finalize_config(run);
            DetectionResult result = run_detection(run);

            char row[256];
            std::snprintf(row, sizeof(row), "%s,%.10g,%d,%" PRIu64 ",%.9f,%.9f,%s\n",
                          spec.param.c_str(), value, rep, run.seed, result.structure_score,
                          result.uniformity_score, to_string(result.decision));
            csv << row;
        }
    }
    if (!csv) throw IoError("write failure: " + path);
    log << "sweep written to " << path << "\n";
}

}  // namespace paraph
