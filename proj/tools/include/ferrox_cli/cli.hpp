#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ferrox/complexmath.hpp"

namespace ferrox::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMath = 2, kVerification = 3 };

// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "a", "ai", "a+bi", "a-bi" with decimal reals and no whitespace.
std::optional<cplx> parse_complex(std::string_view s);

// A real number, or a multiple of pi such as "pi/3", "2pi/3", "-pi".
std::optional<double> parse_angle(std::string_view s);

// JSON text with every floating-point number printed to 17 significant
// digits; non-finite numbers become null.
std::string dump_json(const nlohmann::ordered_json& j);

// One CSV record, fields quoted per RFC 4180, terminated by CRLF.
std::string csv_record(const std::vector<std::string>& fields);

std::string format_double(double v);

}  // namespace ferrox::cli
