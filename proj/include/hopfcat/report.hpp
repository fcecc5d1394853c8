#pragma once

#include <json.hpp>

#include <string>

#include "hopfcat/verdict.hpp"

namespace hopfcat {

/* Insertion-ordered JSON keeps reports byte-deterministic. */
using Json = nlohmann::ordered_json;

Json verdict_json(const Verdict& v);

/* The envelope every command emits; `data` carries command-specific fields. */
Json make_report(const std::string& command, const std::string& model_path,
                 const std::string& subject, int degree, const Verdict& verdict, Json data);

/* format is "json" (2-space indent, trailing newline) or "text". */
std::string render_report(const Json& report, const std::string& format);

}  // namespace hopfcat
