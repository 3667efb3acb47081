#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodgeblocks/selftest.hpp"

namespace hodgeblocks {

enum class OutputFormat { json, csv, text };

struct ComputeRequest {
    int r = 0;
    int s = 0;
    int genus = 0;
    std::vector<int> colors;
    std::optional<int> output_color;
    OutputFormat format = OutputFormat::text;
};

/// One fully evaluated surface datum, ready for serialization.
struct ResultRecord {
    ModelParams params;
    SurfaceDatum datum;
    HodgeResult result;
    bool formal_value = false;  // (g, n) in {(0,0), (0,1), (1,0)}: no underlying moduli space
};

inline bool is_tangent_stable(int genus, int marked_points) {
    return !((genus == 0 && marked_points <= 1) || (genus == 1 && marked_points == 0));
}

inline ResultRecord make_record(const FrobeniusAlgebra& algebra, const ModelParams& params, const SurfaceDatum& d) {
    ResultRecord record;
    record.params = params;
    record.datum = d;
    record.result = evaluate(algebra, params, d);
    const int marked = static_cast<int>(d.colors.size()) + (d.output_color ? 1 : 0);
    record.formal_value = !is_tangent_stable(d.genus, marked);
    return record;
}

inline std::string colors_to_string(const std::vector<int>& colors) {
    std::string out;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(colors[i]);
    }
    return out;
}

inline nlohmann::ordered_json record_to_json(const ResultRecord& record) {
    nlohmann::ordered_json j;
    j["r"] = record.params.r;
    j["s"] = record.params.s;
    j["genus"] = record.datum.genus;
    j["colors"] = record.datum.colors;
    if (record.datum.output_color)
        j["output_color"] = *record.datum.output_color;
    else
        j["output_color"] = nullptr;
    j["weight"] = to_string(record.result.weight);
    j["polynomial"] = to_string(record.result.polynomial);
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : record.result.polynomial.terms()) {
        nlohmann::ordered_json term;
        term["p"] = e.p;
        term["q"] = e.q;
        term["c"] = to_string(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    j["dimension"] = to_string(record.result.dimension);
    if (record.result.signature)
        j["signature"] = to_string(*record.result.signature);
    else
        j["signature"] = nullptr;
    j["type2_gap"] = record.result.gaps.has_type2_gap;
    j["formal_value"] = record.formal_value;
    return j;
}

inline const char* csv_header() { return "r,s,genus,colors,weight,dimension,signature,polynomial"; }

inline std::string record_to_csv_row(const ResultRecord& record) {
    std::string out;
    out += std::to_string(record.params.r);
    out += ',';
    out += std::to_string(record.params.s);
    out += ',';
    out += std::to_string(record.datum.genus);
    out += ",\"";
    out += colors_to_string(record.datum.colors);
    out += "\",";
    out += to_string(record.result.weight);
    out += ',';
    out += to_string(record.result.dimension);
    out += ',';
    if (record.result.signature) out += to_string(*record.result.signature);
    out += ",\"";
    out += to_string(record.result.polynomial);
    out += '"';
    return out;
}

inline std::string record_to_text(const ResultRecord& record) {
    std::ostringstream out;
    out << "r=" << record.params.r << " s=" << record.params.s << " genus=" << record.datum.genus
        << " colors=" << colors_to_string(record.datum.colors);
    if (record.datum.output_color) out << " output_color=" << *record.datum.output_color;
    out << '\n';
    out << "polynomial: " << to_string(record.result.polynomial) << '\n';
    out << "weight:     " << to_string(record.result.weight) << '\n';
    out << "dimension:  " << to_string(record.result.dimension) << '\n';
    if (record.result.signature)
        out << "signature:  " << to_string(*record.result.signature) << '\n';
    else
        out << "signature:  n/a (output color set)" << '\n';
    out << "type2_gap:  " << (record.result.gaps.has_type2_gap ? "true" : "false")
        << " (type-1 gaps are impossible: integer bidegrees occupy a single residue class)" << '\n';
    if (record.formal_value) out << "note:       formal value (no underlying moduli space for this (g, n))" << '\n';
    return out.str();
}

inline void emit_record(const ResultRecord& record, OutputFormat format, bool with_csv_header, std::ostream& out) {
    switch (format) {
        case OutputFormat::json:
            out << record_to_json(record).dump() << '\n';
            break;
        case OutputFormat::csv:
            if (with_csv_header) out << csv_header() << '\n';
            out << record_to_csv_row(record) << '\n';
            break;
        case OutputFormat::text:
            out << record_to_text(record);
            break;
    }
}

inline void cmd_compute(const ComputeRequest& request, std::ostream& out) {
    const ModelParams params = validate({request.r, request.s});
    const FrobeniusAlgebra algebra = build_algebra(params);
    const ResultRecord record = make_record(algebra, params, {request.genus, request.colors, request.output_color});
    emit_record(record, request.format, /*with_csv_header=*/true, out);
}

namespace detail {

/// Colexicographic enumeration of color tuples of a fixed length: the last
/// coordinate varies slowest. With `non_decreasing` set, tuples are the
/// canonical representatives of multisets.
inline void for_each_tuple(int num_colors, int length, bool non_decreasing,
                           const std::function<void(const std::vector<int>&)>& body) {
    std::vector<int> tuple(static_cast<std::size_t>(length));
    std::function<void(int, int)> rec = [&](int pos, int bound) {
        // pos runs from the last coordinate down to the first
        if (pos < 0) {
            body(tuple);
            return;
        }
        const int limit = non_decreasing ? bound : num_colors - 1;
        for (int c = 0; c <= limit; ++c) {
            tuple[static_cast<std::size_t>(pos)] = c;
            rec(pos - 1, c);
        }
    };
    rec(length - 1, num_colors - 1);
}

}  // namespace detail

/// One record per genus <= genus_max and color multiset of size <= n_max with
/// even color sum, enumerated deterministically: genus ascending, then size
/// ascending, then colexicographic. `ordered` enumerates all tuples instead
/// of multiset representatives.
inline void cmd_table(int r, int s, int genus_max, int n_max, bool ordered, OutputFormat format, std::ostream& out) {
    if (genus_max < 0 || n_max < 0) throw InputError("bounds must be non-negative");
    const ModelParams params = validate({r, s});
    const FrobeniusAlgebra algebra = build_algebra(params);
    if (format == OutputFormat::csv) out << csv_header() << '\n';
    for (int genus = 0; genus <= genus_max; ++genus) {
        for (int n = 0; n <= n_max; ++n) {
            detail::for_each_tuple(algebra.rank(), n, !ordered, [&](const std::vector<int>& colors) {
                long long sum = 0;
                for (int c : colors) sum += c;
                if (sum % 2 != 0) return;  // identically zero by parity
                const ResultRecord record = make_record(algebra, params, {genus, colors, std::nullopt});
                emit_record(record, format, /*with_csv_header=*/false, out);
            });
        }
    }
}

/// The Pascal-triangle demo at (r, s) = (5, 3): one row per n with the Hodge
/// numbers of the all-2-colored genus-0 block, whose antidiagonal sum is the
/// Fibonacci number F_{n-1} and whose alternating sum is the signature.
inline std::string render_triangle(int n_max) {
    if (n_max < 2) throw InputError("triangle requires n-max >= 2");
    const ModelParams params{5, 3};
    const FrobeniusAlgebra algebra = build_algebra(params);
    std::ostringstream out;
    out << "Hodge numbers dim E^{p,q} (p = 1.." << "floor(n/2)" << ") of the n-times-2-colored genus-0 block, r=5 s=3\n";
    out << "row sum = dimension (Fibonacci F_{n-1}); alternating sum = signature\n";
    for (int n = 2; n <= n_max; ++n) {
        const SurfaceDatum d{0, std::vector<int>(static_cast<std::size_t>(n), 2), std::nullopt};
        const HodgeResult res = evaluate(algebra, params, d);
        std::string row;
        for (Exp p = 1; p <= n / 2; ++p) {
            if (!row.empty()) row += ' ';
            row += res.polynomial.coeff(p, n - p).str();
        }
        out << "n=" << n << ":  " << row << "   dim=" << to_string(res.dimension)
            << "  signature=" << to_string(*res.signature) << '\n';
    }
    return out.str();
}

inline void cmd_triangle(int n_max, std::ostream& out) { out << render_triangle(n_max); }

/// Runs the oracle-equivalence sweep; returns the process exit code.
inline int cmd_selftest(SelftestDepth depth, std::ostream& out) {
    const SelftestReport report = run_selftest(depth);
    for (const auto& point : report.points) {
        out << "(r=" << point.params.r << ", s=" << point.params.s << "): ";
        if (point.ok()) {
            out << "ok, " << point.data_checked << " data checked";
        } else {
            out << "FAILED";
            if (!point.epsilon_omega_ok) out << " [epsilon(omega) != rank]";
            if (!point.signature_signs_ok) out << " [signature sign mismatch]";
        }
        std::ostringstream seconds;
        seconds.precision(2);
        seconds << std::fixed << point.seconds;
        out << " (" << seconds.str() << " s)\n";
        if (point.failure) {
            const auto& f = *point.failure;
            out << "  first failure: r=" << f.params.r << " s=" << f.params.s << " genus=" << f.genus
                << " colors=" << colors_to_string(f.colors) << '\n';
            out << "    " << f.left_name << ": " << to_string(f.left_value) << '\n';
            out << "    " << f.right_name << ": " << to_string(f.right_value) << '\n';
        }
    }
    out << (report.ok() ? "selftest passed" : "selftest FAILED") << " (" << report.total_data() << " data total)\n";
    return report.ok() ? 0 : 1;
}

}  // namespace hodgeblocks
