#include <cmath>
#include <cstdio>
#include <regex>

#include "ferrox_cli/cli.hpp"

namespace ferrox::cli {

namespace {

// Decimal real without sign; the exponent is optional.
const std::string kNum = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";

double to_double(const std::string& s) { return std::stod(s); }

void dump_rec(const nlohmann::ordered_json& j, std::string& out, int level) {
    const std::string pad(std::size_t(2 * (level + 1)), ' ');
    const std::string close_pad(std::size_t(2 * level), ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad + nlohmann::json(it.key()).dump() + ": ";
                dump_rec(it.value(), out, level + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                dump_rec(v, out, level + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case nlohmann::json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
    }
}

}  // namespace

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    // Keep integral values recognizable as floating point.
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

std::optional<cplx> parse_complex(std::string_view sv) {
    static const std::regex real_re("^([+-]?" + kNum + ")$");
    static const std::regex imag_re("^([+-]?" + kNum + ")i$");
    static const std::regex both_re("^([+-]?" + kNum + ")([+-]" + kNum + ")i$");
    const std::string s(sv);
    std::smatch m;
    if (std::regex_match(s, m, real_re)) return cplx(to_double(m[1]), 0.0);
    if (std::regex_match(s, m, imag_re)) return cplx(0.0, to_double(m[1]));
    if (std::regex_match(s, m, both_re)) return cplx(to_double(m[1]), to_double(m[2]));
    return std::nullopt;
}

std::optional<double> parse_angle(std::string_view sv) {
    static const std::regex real_re("^([+-]?" + kNum + ")$");
    static const std::regex pi_re("^([+-]?)(" + kNum + ")?\\*?pi(?:/(" + kNum + "))?$");
    const std::string s(sv);
    std::smatch m;
    if (std::regex_match(s, m, real_re)) return to_double(m[1]);
    if (std::regex_match(s, m, pi_re)) {
        double v = kPi;
        if (m[2].matched) v *= to_double(m[2]);
        if (m[3].matched) v /= to_double(m[3]);
        return m[1] == "-" ? -v : v;
    }
    return std::nullopt;
}

std::string dump_json(const nlohmann::ordered_json& j) {
    std::string out;
    dump_rec(j, out, 0);
    out += "\n";
    return out;
}

std::string csv_record(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\r\n") == std::string::npos) {
            out += f;
            continue;
        }
        out += '"';
        for (char c : f) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
    }
    out += "\r\n";
    return out;
}

}  // namespace ferrox::cli
