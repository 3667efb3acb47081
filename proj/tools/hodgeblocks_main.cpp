// Command-line surface: exact Hodge polynomials, dimensions and signatures
// of SU(2) TQFT conformal blocks.
//
// Exit codes: 0 success, 1 internal invariant failure, 2 invalid input.

#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hodgeblocks/hodgeblocks.hpp"

namespace {

std::vector<int> parse_colors(const std::string& text) {
    std::vector<int> colors;
    if (text.empty()) return colors;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            colors.push_back(value);
        } catch (const std::exception&) {
            throw hodgeblocks::InputError("cannot parse color '" + item + "' in --colors");
        }
    }
    return colors;
}

hodgeblocks::OutputFormat parse_format(const std::string& name) {
    if (name == "json") return hodgeblocks::OutputFormat::json;
    if (name == "csv") return hodgeblocks::OutputFormat::csv;
    if (name == "text") return hodgeblocks::OutputFormat::text;
    throw hodgeblocks::InputError("unknown format '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hodge polynomials of SU(2) modular functors of level 2r"};
    app.require_subcommand(1);

    int r = 0, s = 0, genus = 0, output_color = -1, genus_max = 0, n_max = 0, triangle_n_max = 2;
    std::string colors_text, format_name = "text", depth_name = "quick";
    bool ordered = false;

    CLI::App* compute = app.add_subcommand("compute", "Evaluate one surface datum");
    compute->add_option("--r", r, "Level parameter r (odd, >= 3)")->required();
    compute->add_option("--s", s, "Root parameter s (odd, prime to r)")->required();
    compute->add_option("--genus", genus, "Genus (non-negative)")->check(CLI::NonNegativeNumber);
    compute->add_option("--colors", colors_text, "Comma-separated colors; empty for none");
    compute->add_option("--output-color", output_color, "Output color (cobordism form)")->check(CLI::NonNegativeNumber);
    compute->add_option("--format", format_name, "json | csv | text");

    CLI::App* table = app.add_subcommand("table", "Batch evaluation over all small color multisets");
    table->add_option("--r", r, "Level parameter r")->required();
    table->add_option("--s", s, "Root parameter s")->required();
    table->add_option("--genus-max", genus_max, "Largest genus")->check(CLI::NonNegativeNumber);
    table->add_option("--n-max", n_max, "Largest number of colors")->check(CLI::NonNegativeNumber);
    table->add_flag("--ordered", ordered, "Enumerate ordered tuples instead of multisets");
    table->add_option("--format", format_name, "json | csv | text");

    CLI::App* triangle = app.add_subcommand("triangle", "Pascal triangle of Hodge numbers at (r,s)=(5,3)");
    triangle->add_option("--n-max", triangle_n_max, "Last row")->check(CLI::PositiveNumber);

    CLI::App* selftest = app.add_subcommand("selftest", "Cross-check the three evaluation paths");
    selftest->add_option("--depth", depth_name, "quick | full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) {
            hodgeblocks::ComputeRequest request;
            request.r = r;
            request.s = s;
            request.genus = genus;
            request.colors = parse_colors(colors_text);
            if (compute->count("--output-color") > 0) request.output_color = output_color;
            request.format = parse_format(format_name);
            hodgeblocks::cmd_compute(request, std::cout);
        } else if (table->parsed()) {
            hodgeblocks::cmd_table(r, s, genus_max, n_max, ordered, parse_format(format_name), std::cout);
        } else if (triangle->parsed()) {
            hodgeblocks::cmd_triangle(triangle_n_max, std::cout);
        } else if (selftest->parsed()) {
            if (depth_name != "quick" && depth_name != "full")
                throw hodgeblocks::InputError("unknown depth '" + depth_name + "'");
            return hodgeblocks::cmd_selftest(
                depth_name == "quick" ? hodgeblocks::SelftestDepth::quick : hodgeblocks::SelftestDepth::full, std::cout);
        }
    } catch (const hodgeblocks::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
