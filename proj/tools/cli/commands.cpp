// Copyright 2026 The flexrow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/border_io.hpp"
#include "flexrow/corpus.hpp"
#include "flexrow/errors.hpp"
#include "flexrow/pipeline.hpp"
#include "flexrow/raster.hpp"
#include "flexrow/segment.hpp"

namespace flexrow::cli {

namespace {

// Flag values rejected after parsing (exit 2).
struct InvalidFlag : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input that cannot be read or decoded (exit 2).
struct UnreadableInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int threshold = 128;
  double skew_range_deg = 10.0;
  double skew_step_deg = 0.25;
  int smooth_window = 9;
  double band_threshold = 0.2;
  double epsilon = 2.0;
  int lookahead = 3;
  bool interior_first = false;

  void add_to(CLI::App& app) {
    app.add_option("--threshold", threshold, "Ink iff gray sample < threshold (0..255)")
        ->capture_default_str();
    app.add_option("--skew-range", skew_range_deg, "Skew search range in degrees (0..10)")
        ->capture_default_str();
    app.add_option("--skew-step", skew_step_deg, "Skew search step in degrees")
        ->capture_default_str();
    app.add_option("--smooth-window", smooth_window, "Profile smoothing window (odd)")
        ->capture_default_str();
    app.add_option("--band-threshold", band_threshold,
                   "Band cut as a fraction of the profile peak (0..1)")
        ->capture_default_str();
    app.add_option("--epsilon", epsilon, "Bottom-edge relaxation tolerance in pixels")
        ->capture_default_str();
    app.add_option("--lookahead", lookahead, "Background steps needed to resume a line")
        ->capture_default_str();
    app.add_flag("--interior-first", interior_first,
                 "Try the detour toward the upper row first");
  }

  void validate() const {
    if (threshold < 0 || threshold > 255) throw InvalidFlag("--threshold must lie in 0..255");
    if (!(skew_range_deg >= 0.0 && skew_range_deg <= 10.0)) {
      throw InvalidFlag("--skew-range must lie in 0..10");
    }
    if (!(skew_step_deg > 0.0 && skew_step_deg <= 10.0)) {
      throw InvalidFlag("--skew-step must lie in (0, 10]");
    }
    if (smooth_window < 1 || smooth_window % 2 == 0) {
      throw InvalidFlag("--smooth-window must be odd and >= 1");
    }
    if (!(band_threshold > 0.0 && band_threshold < 1.0)) {
      throw InvalidFlag("--band-threshold must lie in (0, 1)");
    }
    if (!(epsilon >= 0.0)) throw InvalidFlag("--epsilon must be >= 0");
    if (lookahead < 1) throw InvalidFlag("--lookahead must be >= 1");
  }

  PipelineConfig pipeline() const {
    PipelineConfig c;
    c.analysis.skew_range_deg = skew_range_deg;
    c.analysis.skew_step_deg = skew_step_deg;
    c.analysis.bands.smooth_window = smooth_window;
    c.analysis.bands.band_threshold = band_threshold;
    c.bottom_edge.epsilon = epsilon;
    c.flex.resume_lookahead = lookahead;
    c.flex.exterior_first = !interior_first;
    return c;
  }
};

struct SpecFlags {
  SynthSpec spec;

  void add_to(CLI::App& app) {
    app.add_option("--rows", spec.rows, "Rows per page (>= 2)")->capture_default_str();
    app.add_option("--width", spec.width, "Page width in pixels")->capture_default_str();
    app.add_option("--row-height", spec.row_height, "Row pitch in pixels (>= 12)")
        ->capture_default_str();
    app.add_option("--overlap", spec.overlap_probability,
                   "Probability of a word extension crossing the valley")
        ->capture_default_str();
    app.add_option("--diacritic", spec.diacritic_probability,
                   "Probability of a detached mark")
        ->capture_default_str();
    app.add_option("--unresolvable", spec.unresolvable_probability,
                   "Probability of a bar joining two rows")
        ->capture_default_str();
    app.add_option("--skew", spec.skew_deg, "Row angle in degrees")->capture_default_str();
    app.add_option("--seed", spec.seed, "PRNG seed")->capture_default_str();
  }
};

const std::map<std::string, Method> kMethods{
    {"straight", Method::Straight},
    {"bottom-edge", Method::BottomEdge},
    {"flexible", Method::Flexible},
};

BinaryImage load(const std::string& path, int threshold) {
  std::vector<std::uint8_t> bytes;
  try {
    bytes = read_file(path);
  } catch (const std::runtime_error& e) {
    throw UnreadableInput(e.what());
  }
  return to_binary(read_pnm(bytes), threshold);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  write_file(path.string(), {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

struct SegmentArgs {
  std::string input;
  std::string method = "flexible";
  std::string out_dir = ".";
  std::string overlay = "overlay.ppm";
  Config config;
};

PageSegmentation segment_file(const SegmentArgs& args, BinaryImage& img) {
  args.config.validate();
  img = load(args.input, args.config.threshold);
  const auto config = args.config.pipeline();
  const auto layout = analyze_page(img, config.analysis);
  return segment_page(img, layout, kMethods.at(args.method), config);
}

int cmd_segment(const SegmentArgs& args, std::ostream& out) {
  BinaryImage img;
  const auto result = segment_file(args, img);
  const std::filesystem::path dir(args.out_dir);
  std::filesystem::create_directories(dir);

  const auto& seg = result.segmentation;
  for (int k = 0; k < seg.row_count; ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "row_%03d.pbm", k);
    write_file((dir / name).string(), write_pbm(extract_row_image(img, seg, k)));
  }
  std::vector<BorderRecord> records;
  for (std::size_t i = 0; i < result.borders.size(); ++i) {
    records.push_back({static_cast<int>(i), args.method,
                       i < result.events.size() ? result.events[i].size() : 0,
                       result.borders[i]});
  }
  write_text(dir / "borders.txt", format_borders(records));

  const auto labeling = connected_components(img);
  out << "rows=" << seg.row_count << " events=" << result.event_count()
      << " amputated=" << count_amputations(labeling, seg) << "\n";
  return kExitOk;
}

int cmd_render(const SegmentArgs& args) {
  BinaryImage img;
  const auto result = segment_file(args, img);
  const auto paths = border_paths(result.borders);
  write_file(args.overlay, render_overlay(img, paths));
  return kExitOk;
}

int cmd_gen(const SynthSpec& spec, const std::string& out_dir) {
  const auto page = generate(spec);
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_file((dir / "page.pbm").string(), write_pbm(page.image));
  write_text(dir / "truth.txt", format_truth(page.truth));
  return kExitOk;
}

struct CompareArgs {
  int samples = 24;
  std::vector<std::string> methods{"straight", "bottom-edge", "flexible"};
  std::string csv = "compare.csv";
  int repeats = 3;
  SpecFlags spec;
  Config config;
};

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  if (args.samples < 1) throw InvalidFlag("--samples must be >= 1");
  if (args.repeats < 1) throw InvalidFlag("--repeats must be >= 1");
  if (args.methods.empty()) throw InvalidFlag("--methods must name a method");
  args.config.validate();
  validate(args.spec.spec);

  std::vector<Method> methods;
  for (const auto& name : args.methods) {
    const Method m = kMethods.at(name);
    if (std::find(methods.begin(), methods.end(), m) != methods.end()) {
      throw InvalidFlag("--methods lists '" + name + "' twice");
    }
    methods.push_back(m);
  }
  CompareOptions options;
  options.pipeline = args.config.pipeline();
  options.timing_repeats = args.repeats;

  const auto specs = corpus_specs(args.spec.spec, args.samples);
  const auto comparison = compare(specs, methods, options);
  out << format_table(comparison);
  for (const auto& reason : comparison.skip_reasons) err << "skipped " << reason << "\n";
  write_text(args.csv, format_csv(comparison));
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Text row segmentation with flexible borders", "flexrow"};
  app.require_subcommand(1);

  SegmentArgs segment;
  auto* seg_cmd = app.add_subcommand("segment", "Cut a page into row images");
  seg_cmd->add_option("input", segment.input, "PBM/PGM page")->required();
  seg_cmd->add_option("--method", segment.method, "Border method")
      ->check(CLI::IsMember(kMethods))
      ->capture_default_str();
  seg_cmd->add_option("--out-dir", segment.out_dir, "Output directory")
      ->capture_default_str();
  segment.config.add_to(*seg_cmd);

  SegmentArgs render;
  auto* render_cmd = app.add_subcommand("render", "Draw the borders over the page");
  render_cmd->add_option("input", render.input, "PBM/PGM page")->required();
  render_cmd->add_option("--method", render.method, "Border method")
      ->check(CLI::IsMember(kMethods))
      ->capture_default_str();
  render_cmd->add_option("--out", render.overlay, "Output PPM")->capture_default_str();
  render.config.add_to(*render_cmd);

  SpecFlags gen;
  std::string gen_out = ".";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic page and its truth");
  gen.add_to(*gen_cmd);
  gen_cmd->add_option("--out", gen_out, "Output directory")->capture_default_str();

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Score methods over a synthetic corpus");
  cmp_cmd->add_option("--samples", cmp.samples, "Pages in the corpus")->capture_default_str();
  cmp_cmd->add_option("--methods", cmp.methods, "Comma-separated methods")
      ->delimiter(',')
      ->check(CLI::IsMember(kMethods))
      ->capture_default_str();
  cmp_cmd->add_option("--csv", cmp.csv, "CSV report path")->capture_default_str();
  cmp_cmd->add_option("--repeats", cmp.repeats, "Timing runs per page and method")
      ->capture_default_str();
  cmp.spec.add_to(*cmp_cmd);
  cmp.config.add_to(*cmp_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*seg_cmd) return cmd_segment(segment, out);
    if (*render_cmd) return cmd_render(render);
    if (*gen_cmd) return cmd_gen(gen.spec, gen_out);
    return cmd_compare(cmp, out, err);
  } catch (const MalformedHeader& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const TruncatedPayload& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const UnreadableInput& e) {
    err << "unreadable input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidFlag& e) {
    err << "invalid flag: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const SpecTooTight& e) {
    err << "invalid spec: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const NoBands& e) {
    err << "no rows found: " << e.what() << "\n";
    return kExitNoBands;
  } catch (const EmptyImage& e) {
    // A blank page has no rows either.
    err << "no rows found: " << e.what() << "\n";
    return kExitNoBands;
  } catch (const BordersCross& e) {
    err << "borders cross: " << e.what() << "\n";
    return kExitBordersCross;
  } catch (const std::invalid_argument& e) {
    // Spec validation from the generator.
    err << "invalid argument: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace flexrow::cli
