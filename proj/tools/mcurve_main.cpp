// mcurve: exact-integer conversion between multicurve coordinate vectors
// and path-component censuses on a punctured genus-g surface with one
// boundary component.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <unistd.h>

#include <mcurve/mcurve.hpp>

namespace {

using namespace mcurve;

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 1,
    kUnrealizable = 2,
    kInternalFailure = 3,
    kUsage = 64,
};

bool use_color() {
    const char* env = std::getenv("MCURVE_COLOR");
    const std::string mode = env ? env : "auto";
    if (mode == "always") return true;
    if (mode == "never") return false;
    return isatty(fileno(stderr)) != 0;
}

void print_diags(const Diagnostics& diags) {
    const bool color = use_color();
    for (const Diagnostic& d : diags) {
        std::string line = d.to_string();
        if (color) {
            const char* tint = d.severity == Severity::Error ? "\033[31m" : "\033[33m";
            line = tint + line + "\033[0m";
        }
        std::fprintf(stderr, "%s\n", line.c_str());
    }
}

std::optional<std::string> read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open '%s'\n", path.c_str());
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::fputs(data.c_str(), stdout);
        return true;
    }
    std::ofstream out(path);
    if (!out) {
        std::fprintf(stderr, "error: cannot write '%s'\n", path.c_str());
        return false;
    }
    out << data;
    return out.good();
}

struct VectorInput {
    CoordVector vector;
    TwistSigns signs;
    bool signs_given = false;
};

/// Shared flag handling for subcommands that take a coordinate vector:
/// either --vector text (with -n/-g and optional --signs) or --json.
struct VectorArgs {
    int n = 0;
    int g = 0;
    std::string vector_text;
    std::string json_path;
    std::string signs_text;

    void attach(CLI::App* cmd, bool signs_flag) {
        cmd->add_option("-n,--punctures", n, "number of punctures (n >= 1)");
        cmd->add_option("-g,--genus", g, "genus (g >= 1)");
        cmd->add_option("--vector", vector_text,
                        "coordinate vector, e.g. \"(a1,..; b1,..; ..)\"");
        cmd->add_option("--json", json_path,
                        "read the vector (and optional signs) from a JSON file, '-' for stdin");
        if (signs_flag)
            cmd->add_option("--signs", signs_text,
                            "twist directions per handle region, e.g. \"+,-,0\"");
    }

    /// Returns the parsed input or an exit code.
    std::optional<VectorInput> resolve(bool need_signs, int& exit_code) {
        VectorInput out;
        if (!json_path.empty()) {
            const auto text = read_input(json_path);
            if (!text) {
                exit_code = kInvalidInput;
                return std::nullopt;
            }
            auto parsed = vector_from_json(*text);
            if (!parsed.ok()) {
                print_diags(parsed.diags);
                exit_code = kInvalidInput;
                return std::nullopt;
            }
            out.vector = parsed->first;
            out.signs = parsed->second;
            out.signs_given = !out.signs.signs.empty();
        } else if (!vector_text.empty()) {
            if (n < 1 || g < 1) {
                std::fprintf(stderr, "error: --vector requires -n and -g\n");
                exit_code = kUsage;
                return std::nullopt;
            }
            auto parsed = parse_vector(vector_text, SurfaceSig{n, g});
            if (!parsed.ok()) {
                print_diags(parsed.diags);
                exit_code = kInvalidInput;
                return std::nullopt;
            }
            out.vector = *parsed.value;
        } else {
            std::fprintf(stderr, "error: provide --vector or --json\n");
            exit_code = kUsage;
            return std::nullopt;
        }

        if (!signs_text.empty()) {
            auto parsed = parse_signs(signs_text, out.vector.sig());
            if (!parsed.ok()) {
                print_diags(parsed.diags);
                exit_code = kInvalidInput;
                return std::nullopt;
            }
            out.signs = *parsed.value;
            out.signs_given = true;
        }
        if (need_signs && !out.signs_given) {
            // Ergonomic default; decode warns if it mattered.
            out.signs.signs.assign(static_cast<std::size_t>(out.vector.sig().g), 1);
        }
        exit_code = kOk;
        return out;
    }
};

int run_decode(VectorArgs& args, bool pretty, const std::string& out_path) {
    int exit_code = kOk;
    auto input = args.resolve(true, exit_code);
    if (!input) return exit_code;

    const Diagnostics basic = validate_basic(input->vector);
    if (!basic.ok()) {
        print_diags(basic);
        return kInvalidInput;
    }
    auto census = decode(input->vector, input->signs);
    if (!census.ok()) {
        print_diags(census.diags);
        return kUnrealizable;
    }
    if (!input->signs_given) {
        bool twisted = census->handle.twist.total != 0;
        for (const GenusCensus& gc : census->genus) twisted |= gc.twist.total != 0;
        if (twisted)
            std::fprintf(stderr,
                         "warning: twist directions defaulted to '+'; pass --signs to "
                         "choose them\n");
    }
    return write_output(out_path, census_to_json(*census.value, pretty ? 2 : -1) + "\n")
               ? kOk
               : kInvalidInput;
}

int run_encode(const std::string& census_path, bool as_json, const std::string& out_path) {
    const auto text = read_input(census_path);
    if (!text) return kInvalidInput;
    auto census = census_from_json(*text);
    if (!census.ok()) {
        print_diags(census.diags);
        return kInvalidInput;
    }
    auto enc = encode(*census.value);
    if (!enc.ok()) {
        print_diags(enc.diags);
        return kInvalidInput;
    }
    std::string out;
    if (as_json)
        out = vector_to_json(enc->first, &enc->second) + "\n";
    else
        out = serialize_vector(enc->first) + "\n" + serialize_signs(enc->second) + "\n";
    return write_output(out_path, out) ? kOk : kInvalidInput;
}

int run_validate(VectorArgs& args) {
    int exit_code = kOk;
    auto input = args.resolve(false, exit_code);
    if (!input) return exit_code;
    const Diagnostics diags = validate_basic(input->vector);
    print_diags(diags);
    return diags.ok() ? kOk : kInvalidInput;
}

int run_fuzz(int n, int g, int trials, std::uint64_t seed, std::int64_t max_count,
             bool pretty) {
    const GenConfig cfg{{n, g}, max_count, trials, seed};
    const FuzzReport report = roundtrip_fuzz(cfg);
    std::fputs((report.to_json(pretty ? 2 : -1) + "\n").c_str(), stdout);
    return report.clean() ? kOk : kInternalFailure;
}

int run_enumerate(int n, int g, std::int64_t bound) {
    const SurfaceSig sig{n, g};
    const double cost = static_cast<double>(coord_dimension(sig)) *
                        std::log2(static_cast<double>(bound) + 2.0);
    if (cost > 64.0) {
        std::fprintf(stderr,
                     "error: enumeration space too large; intended for desk-scale "
                     "signatures such as (1,1) bound <= 4\n");
        return kUsage;
    }
    const auto accepted = enumerate_small_vectors(sig, bound);
    for (const auto& [vector, signs] : accepted)
        std::printf("%s\t%s\n", serialize_vector(vector).c_str(),
                    serialize_signs(signs).c_str());
    std::fprintf(stderr, "%zu realizable (vector, signs) pairs\n", accepted.size());
    return kOk;
}

int run_render(VectorArgs& args, const std::string& census_path, bool summary,
               int width, int height, bool no_labels, int spacing,
               const std::string& out_path) {
    MultiCurveCensus census;
    if (!census_path.empty()) {
        const auto text = read_input(census_path);
        if (!text) return kInvalidInput;
        auto parsed = census_from_json(*text);
        if (!parsed.ok()) {
            print_diags(parsed.diags);
            return kInvalidInput;
        }
        census = *parsed.value;
    } else {
        int exit_code = kOk;
        auto input = args.resolve(true, exit_code);
        if (!input) return exit_code;
        auto decoded = decode(input->vector, input->signs);
        if (!decoded.ok()) {
            print_diags(decoded.diags);
            return kUnrealizable;
        }
        census = *decoded.value;
    }

    if (summary) return write_output(out_path, render_summary(census)) ? kOk : kInvalidInput;

    RenderSpec spec;
    spec.census = census;
    spec.width = width;
    spec.height = height;
    spec.show_labels = !no_labels;
    if (spacing > 0) spec.strand_spacing = spacing;
    auto svg = render_svg(spec);
    if (!svg.ok()) {
        print_diags(svg.diags);
        return kInvalidInput;
    }
    return write_output(out_path, *svg.value) ? kOk : kInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact integer coordinates for multicurves on a genus-g surface with n\n"
        "punctures and one boundary: decode coordinate vectors into per-region\n"
        "component censuses, encode censuses back, validate, fuzz, enumerate and\n"
        "render."};
    app.require_subcommand(1);

    // decode
    auto* decode_cmd =
        app.add_subcommand("decode", "vector + twist signs -> census JSON");
    VectorArgs decode_args;
    decode_args.attach(decode_cmd, true);
    bool decode_pretty = false;
    std::string decode_out;
    decode_cmd->add_flag("--pretty", decode_pretty, "indent the JSON output");
    decode_cmd->add_option("-o,--output", decode_out, "output file (default stdout)");

    // encode
    auto* encode_cmd = app.add_subcommand("encode", "census JSON -> vector + signs");
    std::string encode_census = "-";
    bool encode_json = false;
    std::string encode_out;
    encode_cmd->add_option("--census", encode_census,
                           "census JSON file, '-' for stdin (default)");
    encode_cmd->add_flag("--json", encode_json, "emit the JSON vector form");
    encode_cmd->add_option("-o,--output", encode_out, "output file (default stdout)");

    // validate
    auto* validate_cmd =
        app.add_subcommand("validate", "structural checks on a coordinate vector");
    VectorArgs validate_args;
    validate_args.attach(validate_cmd, false);

    // fuzz
    auto* fuzz_cmd =
        app.add_subcommand("fuzz", "generate/encode/decode round-trip property run");
    int fuzz_n = 1, fuzz_g = 1, fuzz_trials = 100;
    std::uint64_t fuzz_seed = 0;
    std::int64_t fuzz_max = 4;
    bool fuzz_pretty = false;
    fuzz_cmd->add_option("-n,--punctures", fuzz_n)->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("-g,--genus", fuzz_g)->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--trials", fuzz_trials)->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--seed", fuzz_seed);
    fuzz_cmd->add_option("--max-count", fuzz_max, "per-component sampling bound")
        ->check(CLI::NonNegativeNumber);
    fuzz_cmd->add_flag("--pretty", fuzz_pretty);

    // enumerate
    auto* enum_cmd = app.add_subcommand(
        "enumerate", "all realizable vectors with entries in [0, bound]");
    int enum_n = 1, enum_g = 1;
    std::int64_t enum_bound = 2;
    enum_cmd->add_option("-n,--punctures", enum_n)->check(CLI::PositiveNumber);
    enum_cmd->add_option("-g,--genus", enum_g)->check(CLI::PositiveNumber);
    enum_cmd->add_option("--bound", enum_bound)->check(CLI::NonNegativeNumber);

    // render
    auto* render_cmd =
        app.add_subcommand("render", "schematic SVG (or text summary) of a census");
    VectorArgs render_args;
    render_args.attach(render_cmd, true);
    std::string render_census;
    bool render_summary_flag = false;
    bool render_no_labels = false;
    int render_width = 0, render_height = 0, render_spacing = 0;
    std::string render_out;
    render_cmd->add_option("--census", render_census,
                           "census JSON file, '-' for stdin (alternative to --vector)");
    render_cmd->add_flag("--summary", render_summary_flag, "text table instead of SVG");
    render_cmd->add_flag("--no-labels", render_no_labels);
    render_cmd->add_option("--width", render_width);
    render_cmd->add_option("--height", render_height);
    render_cmd->add_option("--spacing", render_spacing, "strand spacing in pixels");
    render_cmd->add_option("-o,--output", render_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    if (decode_cmd->parsed()) return run_decode(decode_args, decode_pretty, decode_out);
    if (encode_cmd->parsed()) return run_encode(encode_census, encode_json, encode_out);
    if (validate_cmd->parsed()) return run_validate(validate_args);
    if (fuzz_cmd->parsed())
        return run_fuzz(fuzz_n, fuzz_g, fuzz_trials, fuzz_seed, fuzz_max, fuzz_pretty);
    if (enum_cmd->parsed()) return run_enumerate(enum_n, enum_g, enum_bound);
    if (render_cmd->parsed())
        return run_render(render_args, render_census, render_summary_flag, render_width,
                          render_height, render_no_labels, render_spacing, render_out);
    return kUsage;
}
